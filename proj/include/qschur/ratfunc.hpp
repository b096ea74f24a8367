#pragma once

#include <string>
#include <vector>

#include "qschur/laurent.hpp"

namespace qschur {

namespace detail {

// Ordinary-polynomial remainder (both args with low_degree >= 0).
inline LaurentPoly poly_mod(LaurentPoly a, const LaurentPoly& b) {
    long db = b.top_degree();
    const Rat& lb = b.leading_coeff();
    while (!a.is_zero() && a.top_degree() >= db) {
        Rat c = a.leading_coeff() / lb;
        a -= LaurentPoly::monomial(c, a.top_degree() - db) * b;
    }
    return a;
}

inline LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    if (!a.is_zero()) a = a.shifted(-a.low_degree());
    if (!b.is_zero()) b = b.shifted(-b.low_degree());
    while (!b.is_zero()) {
        LaurentPoly r = poly_mod(a, b);
        a = b;
        b = r;
        if (!b.is_zero()) b = b.shifted(-b.low_degree());
    }
    if (a.is_zero()) return LaurentPoly::one();
    a.scale(Rat(1) / a.leading_coeff());
    return a;
}

}  // namespace detail

/// Element of Q(v): numerator / denominator, canonically normalized so that
/// structural equality is semantic equality (gcd removed, denominator with
/// minimal exponent 0 and leading coefficient 1).
class RationalFunc {
public:
    RationalFunc() : num_(), den_(LaurentPoly::one()) {}
    explicit RationalFunc(const LaurentPoly& n) : num_(n), den_(LaurentPoly::one()) {}
    explicit RationalFunc(const Rat& c) : RationalFunc(LaurentPoly(c)) {}
    explicit RationalFunc(long c) : RationalFunc(LaurentPoly(c)) {}
    RationalFunc(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) {
        normalize();
    }

    static RationalFunc one() { return RationalFunc(LaurentPoly::one()); }
    static RationalFunc v_power(long k) { return RationalFunc(LaurentPoly::v_power(k)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool is_laurent() const { return den_ == LaurentPoly::one(); }
    /// Valid only when is_laurent().
    const LaurentPoly& as_laurent() const {
        if (!is_laurent()) throw Error("RationalFunc: not a Laurent polynomial: " + str());
        return num_;
    }

    bool operator==(const RationalFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunc& o) const { return !(*this == o); }
    bool operator<(const RationalFunc& o) const {
        if (num_.coeffs() != o.num_.coeffs()) return num_.coeffs() < o.num_.coeffs();
        return den_.coeffs() < o.den_.coeffs();
    }

    friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
        return RationalFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunc operator-(const RationalFunc& a, const RationalFunc& b) {
        return RationalFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
        return RationalFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunc operator/(const RationalFunc& a, const RationalFunc& b) {
        if (b.is_zero()) throw Error("RationalFunc: division by zero");
        return RationalFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunc operator-() const {
        RationalFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RationalFunc& operator+=(const RationalFunc& o) { return *this = *this + o; }
    RationalFunc& operator-=(const RationalFunc& o) { return *this = *this - o; }
    RationalFunc& operator*=(const RationalFunc& o) { return *this = *this * o; }

    /// Bar involution extended to Q(v).
    RationalFunc bar() const { return RationalFunc(num_.bar(), den_.bar()); }

    /// Evaluate at a rational value of v (tests and oracle comparisons).
    Rat eval(const Rat& v) const {
        auto ev = [&](const LaurentPoly& f) {
            Rat s = 0;
            for (const auto& [k, c] : f.coeffs()) {
                Rat p = 1;
                for (long j = 0; j < (k >= 0 ? k : -k); ++j) p *= v;
                s += (k >= 0) ? Rat(c * p) : Rat(c / p);
            }
            return s;
        };
        Rat d = ev(den_);
        if (d == 0) throw Error("RationalFunc::eval: pole");
        return ev(num_) / d;
    }

    std::string str() const {
        if (is_laurent()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw Error("RationalFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = LaurentPoly::one();
            return;
        }
        // Net v-power carried by the fraction when both parts are shifted to
        // ordinary polynomials with nonzero constant term.
        long s = num_.low_degree() - den_.low_degree();
        LaurentPoly a = num_.shifted(-num_.low_degree());
        LaurentPoly b = den_.shifted(-den_.low_degree());
        LaurentPoly g = detail::poly_gcd(a, b);
        if (g != LaurentPoly::one()) {
            a = *a.divide_exact(g);
            b = *b.divide_exact(g);
        }
        num_ = a.shifted(s);
        den_ = b;
        // v-power and scalar units move into the numerator.
        Rat lc = den_.leading_coeff();
        den_.scale(Rat(1) / lc);
        num_.scale(Rat(1) / lc);
    }

    LaurentPoly num_, den_;
};

/// Formal expansion of f in Q((v^{-1})).
struct SeriesExpansion {
    std::map<long, Rat> positive;  // coefficients of v^k, k > 0
    std::vector<Rat> descending;   // coefficients of v^0, v^{-1}, ..., v^{-order}
};

inline SeriesExpansion series_expand(const RationalFunc& f, unsigned order) {
    SeriesExpansion out;
    out.descending.assign(order + 1, Rat(0));
    if (f.is_zero()) return out;
    const LaurentPoly& den = f.den();
    long dd = den.top_degree();
    const Rat& dc = den.leading_coeff();
    LaurentPoly r = f.num();
    while (!r.is_zero()) {
        long k = r.top_degree() - dd;
        if (k < -static_cast<long>(order)) break;
        Rat c = r.leading_coeff() / dc;
        if (k > 0)
            out.positive[k] = c;
        else
            out.descending[static_cast<size_t>(-k)] = c;
        r -= LaurentPoly::monomial(c, k) * den;
    }
    return out;
}

}  // namespace qschur
