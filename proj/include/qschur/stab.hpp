#pragma once

#include <map>

#include "qschur/periodic.hpp"
#include "qschur/schur.hpp"
#include "qschur/upoly.hpp"

namespace qschur {

/// Element of the stabilized algebra: base matrices whose diagonal entries
/// may be negative, standing for the family A + pI as p -> infinity, with
/// coefficients in Q(v)[u] where u tracks v^{-p}. The threshold p0 records
/// from which p on the specialization map is valid.
class StableElem {
public:
    using Map = std::map<PeriodicMatrix, UPoly>;

    explicit StableElem(long n, long wordlen = 0) : n_(n), wordlen_(wordlen) {}

    long n() const { return n_; }
    long wordlen() const { return wordlen_; }
    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    UPoly coeff(const PeriodicMatrix& A) const {
        auto it = t_.find(A);
        return it == t_.end() ? UPoly() : it->second;
    }

    void add_term(const PeriodicMatrix& A, const UPoly& c) {
        if (A.n() != n_) throw Error("StableElem: period mismatch");
        if (c.is_zero()) return;
        auto [it, fresh] = t_.try_emplace(A, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    StableElem& operator+=(const StableElem& o) {
        if (o.n_ != n_) throw Error("StableElem: period mismatch");
        wordlen_ = std::max(wordlen_, o.wordlen_);
        for (const auto& [A, c] : o.t_) add_term(A, c);
        return *this;
    }
    friend StableElem operator+(StableElem a, const StableElem& b) { return a += b; }

    StableElem& scale(const RationalFunc& c) {
        if (c.is_zero()) {
            t_.clear();
            return *this;
        }
        for (auto& [A, x] : t_) x.scale(c);
        return *this;
    }

    bool operator==(const StableElem& o) const { return n_ == o.n_ && t_ == o.t_; }
    bool operator!=(const StableElem& o) const { return !(*this == o); }

    /// Smallest p for which specialization is guaranteed valid: clears every
    /// negative diagonal entry with one unit of headroom per applied symbol.
    long p0() const {
        long neg = 0;
        for (const auto& [A, c] : t_)
            for (long i = 1; i <= n_; ++i) neg = std::max(neg, -A.entry(i, i));
        return 1 + neg + wordlen_;
    }

    void mark_step() { ++wordlen_; }

private:
    long n_;
    long wordlen_;
    Map t_;
};

/// 1_lambda for an arbitrary integer weight (entries may be negative).
inline StableElem stable_idempotent(const PeriodicVec& lam) {
    StableElem x(lam.n());
    x.add_term(PeriodicMatrix::diagonal(lam), UPoly::one());
    return x;
}

namespace detail {

/// Bracket of a diagonal slot: substituting a + p for a in the geometric
/// bracket gives (1 - u^2 v^{-2(a+1)})/(1 - v^{-2}) with u = v^{-p}.
inline UPoly stable_diag_bracket(long a) {
    LaurentPoly den = LaurentPoly::one() - LaurentPoly::v_power(-2);
    UPoly r{RationalFunc(LaurentPoly::one(), den)};
    UPoly t = UPoly::u_power(2);
    t.scale(RationalFunc(LaurentPoly::v_power(-2 * (a + 1)), den));
    return r - t;
}

}  // namespace detail

/// Left multiplication by E_i in the stabilized algebra. The v-exponents of
/// the multiplication rule are independent of p (the +p contributions to row
/// tails cancel), so they are computed on the base matrix; only brackets of
/// diagonal slots pick up u.
inline StableElem smult_e(long i, const StableElem& x) {
    StableElem out(x.n(), x.wordlen() + 1);
    for (const auto& [A, c] : x.terms()) {
        long T = A.band() + 1;
        for (long s = i + 1 - T; s <= i + 1 + T; ++s) {
            // the diagonal slot s = i+1 reads a_{i+1,i+1} + p >= 1, always allowed
            if (s != i + 1 && A.entry(i + 1, s) < 1) continue;
            long expo = detail::row_tail(A, i, s) -
                        (detail::row_tail(A, i + 1, s) - A.entry(i + 1, s));
            PeriodicMatrix B = A;
            B.add_entry(i, s, 1);
            B.add_entry(i + 1, s, -1);
            UPoly br = (s == i) ? detail::stable_diag_bracket(A.entry(i, i))
                                : UPoly{RationalFunc(geometric_bracket(A.entry(i, s)))};
            br.scale(RationalFunc::v_power(expo));
            out.add_term(B, c * br);
        }
    }
    return out;
}

/// Left multiplication by F_i in the stabilized algebra.
inline StableElem smult_f(long i, const StableElem& x) {
    StableElem out(x.n(), x.wordlen() + 1);
    for (const auto& [A, c] : x.terms()) {
        long T = A.band() + 1;
        for (long s = i - T; s <= i + T; ++s) {
            // the diagonal slot s = i reads a_{i,i} + p >= 1, always allowed
            if (s != i && A.entry(i, s) < 1) continue;
            long expo = (row_sums(A)(i + 1) - detail::row_tail(A, i + 1, s + 1)) -
                        (row_sums(A)(i) - detail::row_tail(A, i, s));
            PeriodicMatrix B = A;
            B.add_entry(i, s, -1);
            B.add_entry(i + 1, s, 1);
            UPoly br = (s == i + 1)
                           ? detail::stable_diag_bracket(A.entry(i + 1, i + 1))
                           : UPoly{RationalFunc(geometric_bracket(A.entry(i + 1, s)))};
            br.scale(RationalFunc::v_power(expo));
            out.add_term(B, c * br);
        }
    }
    return out;
}

/// Left multiplication by K_a: only weights with coordinate sum zero keep
/// the exponents p-independent.
inline StableElem smult_k(const PeriodicVec& a, const StableElem& x) {
    if (a.sum() != 0)
        throw Error("smult_k: K-weight must have coordinate sum zero in the stable algebra");
    StableElem out(x.n(), x.wordlen());
    for (const auto& [A, c] : x.terms()) {
        UPoly d = c;
        d.scale(RationalFunc::v_power(a.dot(row_sums(A))));
        out.add_term(A, d);
    }
    return out;
}

inline StableElem smult_e_div(long i, long m, const StableElem& x) {
    if (m < 1) throw Error("smult_e_div: power must be >= 1");
    StableElem y = x;
    for (long j = 0; j < m; ++j) y = smult_e(i, y);
    if (m > 1) y.scale(RationalFunc(LaurentPoly::one(), quantum_factorial(m)));
    return y;
}

inline StableElem smult_f_div(long i, long m, const StableElem& x) {
    if (m < 1) throw Error("smult_f_div: power must be >= 1");
    StableElem y = x;
    for (long j = 0; j < m; ++j) y = smult_f(i, y);
    if (m > 1) y.scale(RationalFunc(LaurentPoly::one(), quantum_factorial(m)));
    return y;
}

inline StableElem sapply_symbol(const GenSymbol& g, const StableElem& x) {
    switch (g.kind) {
        case GenSymbol::E: return smult_e_div(g.i, g.m, x);
        case GenSymbol::F: return smult_f_div(g.i, g.m, x);
        case GenSymbol::K: return smult_k(g.wt, x);
    }
    throw Error("sapply_symbol: unknown symbol");
}

/// Apply a word, rightmost symbol first.
inline StableElem sapply_word(const GenWord& w, const StableElem& x) {
    StableElem y = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it) y = sapply_symbol(*it, y);
    return y;
}

/// Specialize at a concrete p >= p0: shift diagonals by p, substitute
/// u := v^{-p} in the coefficients.
inline AlgebraElem specialize(const StableElem& x, long p) {
    if (p < x.p0())
        throw StabilityNotReached("specialize: p below the stability threshold p0 = " +
                                  std::to_string(x.p0()));
    long D = -1;
    AlgebraElem out;
    for (const auto& [A, c] : x.terms()) {
        PeriodicMatrix B = shift_p(A, p);
        for (long i = 1; i <= x.n(); ++i)
            if (B.entry(i, i) < 0)
                throw StabilityNotReached("specialize: negative diagonal at p");
        long lvl = row_sums(B).sum();
        if (D == -1) {
            D = lvl;
            out = AlgebraElem(x.n(), D);
        } else if (lvl != D) {
            throw Error("specialize: inconsistent levels across terms");
        }
        RationalFunc f = u_specialize(c, p);
        if (!f.is_laurent()) throw Error("specialize: non-polynomial coefficient");
        out.add_term(B, f.as_laurent());
    }
    if (D == -1) throw Error("specialize: zero element has no level");
    return out;
}

/// <w . 1_lam, y> in the stable algebra, by adjunction peeling: remove the
/// leftmost symbol of w, move its adjoint onto y, and finish by reading the
/// coefficient of the diagonal base matrix.
inline UPoly stable_inner(const GenWord& w, const PeriodicVec& lam, const StableElem& y) {
    if (lam.n() != y.n()) throw Error("stable_inner: period mismatch");
    StableElem z = y;
    long vshift = 0;
    for (const auto& g : w) {
        auto adj = adjoint_symbols(g, lam.n());
        for (auto it = adj.rbegin(); it != adj.rend(); ++it) z = sapply_symbol(*it, z);
        vshift += adjoint_vshift(g);
    }
    UPoly r = z.coeff(PeriodicMatrix::diagonal(lam));
    r.scale(RationalFunc::v_power(vshift));
    return r;
}

}  // namespace qschur
