#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "qschur/errors.hpp"

namespace qschur {

using Rat = mpq_class;

/// Laurent polynomial in v with rational coefficients, stored sparsely as
/// exponent -> coefficient with zero coefficients omitted.
class LaurentPoly {
public:
    using Map = std::map<long, Rat>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& c) {
        if (c != 0) c_[0] = c;
    }
    explicit LaurentPoly(long c) : LaurentPoly(Rat(c)) {}

    static LaurentPoly monomial(const Rat& c, long k) {
        LaurentPoly f;
        if (c != 0) f.c_[k] = c;
        return f;
    }
    static LaurentPoly v_power(long k) { return monomial(Rat(1), k); }
    static LaurentPoly one() { return LaurentPoly(Rat(1)); }

    const Map& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Rat coeff(long k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Rat(0) : it->second;
    }

    void set_coeff(long k, const Rat& c) {
        if (c == 0)
            c_.erase(k);
        else
            c_[k] = c;
    }

    // Degree bounds; only valid when nonzero.
    long top_degree() const { return c_.rbegin()->first; }
    long low_degree() const { return c_.begin()->first; }
    const Rat& leading_coeff() const { return c_.rbegin()->second; }

    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.c_) add_term(k, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.c_) add_term(k, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [k, c] : c_) r.c_[k] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ka, ca] : a.c_)
            for (const auto& [kb, cb] : b.c_) r.add_term(ka + kb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly& scale(const Rat& c) {
        if (c == 0) {
            c_.clear();
            return *this;
        }
        for (auto& [k, x] : c_) x *= c;
        return *this;
    }
    friend LaurentPoly operator*(const Rat& c, LaurentPoly f) { return f.scale(c); }

    /// Multiply by v^k.
    LaurentPoly shifted(long k) const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.c_[e + k] = c;
        return r;
    }

    /// Bar involution: v -> v^{-1}.
    LaurentPoly bar() const {
        LaurentPoly r;
        for (const auto& [k, c] : c_) r.c_[-k] = c;
        return r;
    }
    bool is_bar_invariant() const { return *this == bar(); }

    /// Exact division; nullopt when the remainder is nonzero.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const {
        if (d.is_zero()) throw Error("division by zero Laurent polynomial");
        if (is_zero()) return LaurentPoly();
        // Any exact quotient has exponents >= low_degree() - d.low_degree().
        long kmin = low_degree() - d.low_degree();
        LaurentPoly q, r = *this;
        long dd = d.top_degree();
        const Rat& dc = d.leading_coeff();
        while (!r.is_zero()) {
            long k = r.top_degree() - dd;
            if (k < kmin) return std::nullopt;
            Rat c = r.leading_coeff() / dc;
            q.add_term(k, c);
            r -= LaurentPoly::monomial(c, k) * d;
        }
        return q;
    }

    bool has_integer_coeffs() const {
        for (const auto& [k, c] : c_)
            if (c.get_den() != 1) return false;
        return true;
    }

    /// Membership in v^{-1} Z[v^{-1}].
    bool in_vinv_z() const {
        return has_integer_coeffs() && (is_zero() || top_degree() <= -1);
    }

    bool has_nonneg_integer_coeffs() const {
        for (const auto& [k, c] : c_)
            if (c.get_den() != 1 || c < 0) return false;
        return true;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            if (it->first == 0)
                os << it->second;
            else if (it->second == 1)
                os << "v^" << it->first;
            else
                os << it->second << "*v^" << it->first;
        }
        return os.str();
    }

private:
    void add_term(long k, const Rat& c) {
        auto [it, fresh] = c_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }

    Map c_;
};

/// Balanced quantum integer [m] = (v^m - v^{-m})/(v - v^{-1}).
inline LaurentPoly quantum_integer(long m) {
    if (m < 0) throw Error("quantum_integer: negative argument");
    LaurentPoly r;
    for (long j = 0; j < m; ++j) r += LaurentPoly::v_power(m - 1 - 2 * j);
    return r;
}

inline LaurentPoly quantum_factorial(long m) {
    if (m < 0) throw Error("quantum_factorial: negative argument");
    LaurentPoly r = LaurentPoly::one();
    for (long j = 1; j <= m; ++j) r *= quantum_integer(j);
    return r;
}

/// Gaussian binomial [m choose k], a bar-invariant Laurent polynomial.
inline LaurentPoly gauss_binomial(long m, long k) {
    if (k < 0 || k > m) throw Error("gauss_binomial: out of range");
    LaurentPoly num = quantum_factorial(m);
    LaurentPoly den = quantum_factorial(k) * quantum_factorial(m - k);
    auto q = num.divide_exact(den);
    if (!q) throw NonIntegralDivision("gauss_binomial: inexact division");
    return *q;
}

/// 1 + v^{-2} + ... + v^{-2m}, the coefficient bracket (1 - v^{-2(m+1)})/(1 - v^{-2}).
inline LaurentPoly geometric_bracket(long m) {
    LaurentPoly r;
    for (long j = 0; j <= m; ++j) r += LaurentPoly::v_power(-2 * j);
    return r;
}

}  // namespace qschur
