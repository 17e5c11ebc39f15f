/*
   Copyright 2026 The telequad authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TELEQUAD_HOLDER_HPP
#define TELEQUAD_HOLDER_HPP

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace telequad {

/// An L^p exponent in [1, inf]. Infinity is a distinct tag, never a large float.
class Exponent {
public:
    static Exponent infinity() { return Exponent(0.0, true); }
    static Exponent finite(double r) {
        if (!(r >= 1.0) || std::isinf(r)) throw std::domain_error("Exponent: r must lie in [1, inf)");
        return Exponent(r, false);
    }
    /// Accepts "inf"/"infinity" or a decimal >= 1.
    static Exponent parse(const std::string& s) {
        if (s == "inf" || s == "infinity" || s == "Inf") return infinity();
        std::size_t used = 0;
        double r = std::stod(s, &used);
        if (used != s.size()) throw std::domain_error("Exponent: cannot parse '" + s + "'");
        return finite(r);
    }

    bool is_inf() const { return inf_; }
    double value() const {
        if (inf_) throw std::logic_error("Exponent: value() on infinity");
        return r_;
    }
    /// 1/r, with 1/inf = 0.
    double reciprocal() const { return inf_ ? 0.0 : 1.0 / r_; }

    std::string str() const {
        if (inf_) return "inf";
        if (r_ == static_cast<long>(r_)) return std::to_string(static_cast<long>(r_));
        char buf[32];
        auto res = std::to_chars(buf, buf + sizeof(buf), r_);
        return std::string(buf, res.ptr);
    }

    friend bool operator==(const Exponent& a, const Exponent& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.r_ == b.r_);
    }

private:
    Exponent(double r, bool inf) : r_(r), inf_(inf) {}
    double r_;
    bool inf_;
};

/// Conjugate exponents (r, s) with 1/r + 1/s = 1.
struct HolderPair {
    Exponent r;
    Exponent s;

    /// Builds the pair from r alone: s = r/(r-1), with 1 <-> inf.
    static HolderPair conjugate(const Exponent& r) {
        if (r.is_inf()) return HolderPair{r, Exponent::finite(1.0)};
        if (r.value() == 1.0) return HolderPair{r, Exponent::infinity()};
        return HolderPair{r, Exponent::finite(r.value() / (r.value() - 1.0))};
    }

    HolderPair(Exponent r_, Exponent s_) : r(r_), s(s_) {
        double sum = r.reciprocal() + s.reciprocal();
        if (std::abs(sum - 1.0) > 1e-12) throw std::domain_error("HolderPair: 1/r + 1/s != 1");
    }
};

}  // namespace telequad

#endif
