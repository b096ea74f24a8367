#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qschur/ratfunc.hpp"
#include "qschur/schur.hpp"
#include "qschur/stab.hpp"

namespace qschur {

/// A weight class in X' = Z^n / Z(1,...,1), stored by the representative
/// with minimal entry 0. The residue of the coordinate sum mod n is a class
/// invariant and selects which levels D admit a representative.
class Weight {
public:
    explicit Weight(const PeriodicVec& lam) : rep_(normalize(lam)) {
        res_ = ((rep_.sum() % lam.n()) + lam.n()) % lam.n();
    }

    long n() const { return rep_.n(); }
    const PeriodicVec& rep() const { return rep_; }
    long residue() const { return res_; }

    bool operator==(const Weight& o) const { return rep_ == o.rep_; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const { return rep_ < o.rep_; }

    std::string str() const { return rep_.str(); }

private:
    static PeriodicVec normalize(const PeriodicVec& lam) {
        long mn = lam(1);
        for (long i = 2; i <= lam.n(); ++i) mn = std::min(mn, lam(i));
        return lam - PeriodicVec::constant(lam.n(), mn);
    }

    PeriodicVec rep_;
    long res_;
};

/// The unique representative of lam in S_{D,n}, if one exists: shift the
/// normalized representative by a constant so the sum is D, and reject
/// residue mismatches and negative entries.
inline std::optional<PeriodicVec> weight_rep(const Weight& lam, long D) {
    long n = lam.n();
    long diff = D - lam.rep().sum();
    if (((diff % n) + n) % n != 0) return std::nullopt;
    PeriodicVec a = lam.rep() + PeriodicVec::constant(n, diff / n);
    if (!a.is_nonneg()) return std::nullopt;
    return a;
}

/// Element of the modified quantum group: formal combination of words of
/// generator symbols applied to idempotents 1_lambda.
class UdotElem {
public:
    using Key = std::pair<GenWord, Weight>;
    using Map = std::map<Key, RationalFunc>;

    explicit UdotElem(long n) : n_(n) {}

    long n() const { return n_; }
    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(const GenWord& w, const Weight& lam, const RationalFunc& c) {
        if (lam.n() != n_) throw Error("UdotElem: period mismatch");
        if (c.is_zero()) return;
        auto [it, fresh] = t_.try_emplace(Key{w, lam}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    UdotElem& operator+=(const UdotElem& o) {
        for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
        return *this;
    }

private:
    long n_;
    Map t_;
};

/// phi_D: send each monomial w 1_lambda to apply_word(w, a) for the level-D
/// representative a of lambda, or to 0 when none exists.
inline AlgebraElem phi_D(const UdotElem& x, long D) {
    AlgebraElem out(x.n(), D);
    for (const auto& [key, c] : x.terms()) {
        auto a = weight_rep(key.second, D);
        if (!a) continue;
        if (!c.is_laurent()) throw Error("phi_D: non-polynomial coefficient");
        AlgebraElem y = apply_word(key.first, *a, D);
        y.scale(c.as_laurent());
        out += y;
    }
    return out;
}

/// Horizon-limited equality test for U-dot elements: images under phi_D
/// agree for every D up to the horizon. (phi is injective, so agreement to a
/// large horizon is strong evidence of equality; this is a semidecision.)
inline bool equal_to_horizon(const UdotElem& x, const UdotElem& y, long Dmax) {
    if (x.n() != y.n()) return false;
    for (long D = 0; D <= Dmax; ++D)
        if (phi_D(x, D).terms() != phi_D(y, D).terms()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// The algebra f generated by theta_i, with its standard inner product.

/// Word of divided-power theta symbols: (residue, power).
using FWord = std::vector<std::pair<long, long>>;

/// Combination of plain theta words with Q(v) coefficients.
using FComb = std::map<std::vector<long>, RationalFunc>;

/// Cartan pairing of simple roots i and j for affine type A_{n-1}.
inline long cartan(long n, long i, long j) {
    return PeriodicVec::root(n, i).dot(PeriodicVec::root(n, j));
}

/// Grading of an f-word in N[I].
inline PeriodicVec f_grading(long n, const FWord& x) {
    std::vector<long> nu(static_cast<size_t>(n), 0);
    for (const auto& [i, m] : x) nu[static_cast<size_t>(((i - 1) % n + n) % n)] += m;
    return PeriodicVec(nu);
}

namespace detail {

inline void fcomb_add(FComb& c, const std::vector<long>& w, const RationalFunc& x) {
    if (x.is_zero()) return;
    auto [it, fresh] = c.try_emplace(w, x);
    if (!fresh) {
        it->second += x;
        if (it->second.is_zero()) c.erase(it);
    }
}

}  // namespace detail

/// Expand divided powers: theta_i^{(m)} = theta_i^m / [m]!.
inline FComb f_expand(const FWord& x) {
    std::vector<long> w;
    RationalFunc c = RationalFunc::one();
    for (const auto& [i, m] : x) {
        if (m < 1) throw Error("f_expand: power must be >= 1");
        for (long t = 0; t < m; ++t) w.push_back(i);
        if (m > 1) c *= RationalFunc(LaurentPoly::one(), quantum_factorial(m));
    }
    return FComb{{w, c}};
}

/// Twisted derivation _ir: _ir(theta_j y) = delta_{ij} y + v^{i.j} theta_j _ir(y).
inline FComb ir_derivation(long n, long i, const FComb& x) {
    FComb out;
    for (const auto& [w, c] : x) {
        if (w.empty()) continue;
        RationalFunc twist = RationalFunc::one();
        for (size_t pos = 0; pos < w.size(); ++pos) {
            if (((w[pos] - i) % n + n) % n == 0) {
                std::vector<long> rest;
                for (size_t t = 0; t < w.size(); ++t)
                    if (t != pos) rest.push_back(w[t]);
                detail::fcomb_add(out, rest, c * twist);
            }
            twist *= RationalFunc::v_power(cartan(n, i, w[pos]));
        }
    }
    return out;
}

/// Twisted derivation r_i: r_i(y theta_j) = delta_{ij} y + v^{i.j} r_i(y) theta_j.
inline FComb ri_derivation(long n, long i, const FComb& x) {
    FComb out;
    for (const auto& [w, c] : x) {
        if (w.empty()) continue;
        RationalFunc twist = RationalFunc::one();
        for (size_t rpos = 0; rpos < w.size(); ++rpos) {
            size_t pos = w.size() - 1 - rpos;
            if (((w[pos] - i) % n + n) % n == 0) {
                std::vector<long> rest;
                for (size_t t = 0; t < w.size(); ++t)
                    if (t != pos) rest.push_back(w[t]);
                detail::fcomb_add(out, rest, c * twist);
            }
            twist *= RationalFunc::v_power(cartan(n, i, w[pos]));
        }
    }
    return out;
}

namespace detail {

inline RationalFunc f_inner_rec(long n, const FComb& x, const std::vector<long>& z) {
    if (z.empty()) {
        auto it = x.find({});
        return it == x.end() ? RationalFunc() : it->second;
    }
    long i = z.front();
    std::vector<long> rest(z.begin() + 1, z.end());
    RationalFunc factor(LaurentPoly::one(),
                        LaurentPoly::one() - LaurentPoly::v_power(-2));
    return factor * f_inner_rec(n, ir_derivation(n, i, x), rest);
}

}  // namespace detail

/// Standard inner product on f, via the recursion (x, theta_i z) =
/// (1/(1-v^{-2})) (_ir(x), z) with base (1,1) = 1.
inline RationalFunc f_inner(long n, const FWord& x, const FWord& y) {
    if (!(f_grading(n, x) == f_grading(n, y))) return RationalFunc();
    FComb cx = f_expand(x);
    RationalFunc out;
    for (const auto& [w, c] : f_expand(y))
        out += c * detail::f_inner_rec(n, cx, w);
    return out;
}

// ---------------------------------------------------------------------------
// Bridges between f-words and the stable algebra.

/// The F-side generator word of an f-word: theta_i^{(m)} -> F_i^{(m)}.
inline GenWord f_to_gens(const FWord& x) {
    GenWord w;
    for (const auto& [i, m] : x) w.push_back(GenSymbol::f(i, m));
    return w;
}

/// Limit inner product <x^- 1_lam, y^- 1_lam> computed in the stable
/// algebra: only the residue class of lam contributes, and the limit over
/// that subsequence is the u^0 coefficient of the stable pairing.
inline RationalFunc inner_limit_f(const FWord& x, const FWord& y, const PeriodicVec& lam) {
    GenWord wx = f_to_gens(x), wy = f_to_gens(y);
    StableElem z = sapply_word(wy, stable_idempotent(lam));
    return u_limit(stable_inner(wx, lam, z));
}

/// Limit inner product of two generator words applied to 1_lam.
inline RationalFunc inner_limit_words(const GenWord& wx, const GenWord& wy,
                                      const PeriodicVec& lam) {
    StableElem z = sapply_word(wy, stable_idempotent(lam));
    return u_limit(stable_inner(wx, lam, z));
}

}  // namespace qschur
