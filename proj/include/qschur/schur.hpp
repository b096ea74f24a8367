#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qschur/laurent.hpp"
#include "qschur/periodic.hpp"

namespace qschur {

/// Element of the level-D algebra: finite sum of basis symbols [A] with
/// Laurent-polynomial coefficients.
class AlgebraElem {
public:
    using Map = std::map<PeriodicMatrix, LaurentPoly>;

    AlgebraElem() = default;
    AlgebraElem(long n, long D) : n_(n), D_(D) {}

    long n() const { return n_; }
    long D() const { return D_; }
    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    LaurentPoly coeff(const PeriodicMatrix& A) const {
        auto it = t_.find(A);
        return it == t_.end() ? LaurentPoly() : it->second;
    }

    void add_term(const PeriodicMatrix& A, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.try_emplace(A, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    AlgebraElem& operator+=(const AlgebraElem& o) {
        check_level(o);
        for (const auto& [A, c] : o.t_) add_term(A, c);
        return *this;
    }
    AlgebraElem& operator-=(const AlgebraElem& o) {
        check_level(o);
        for (const auto& [A, c] : o.t_) add_term(A, -c);
        return *this;
    }
    friend AlgebraElem operator+(AlgebraElem a, const AlgebraElem& b) { return a += b; }
    friend AlgebraElem operator-(AlgebraElem a, const AlgebraElem& b) { return a -= b; }

    AlgebraElem& scale(const LaurentPoly& f) {
        if (f.is_zero()) {
            t_.clear();
            return *this;
        }
        for (auto& [A, c] : t_) c *= f;
        return *this;
    }

    bool operator==(const AlgebraElem& o) const {
        return n_ == o.n_ && D_ == o.D_ && t_ == o.t_;
    }
    bool operator!=(const AlgebraElem& o) const { return !(*this == o); }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        for (const auto& [A, c] : t_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")*[" + A.str() + "]";
        }
        return s;
    }

    void check_level(const AlgebraElem& o) const {
        if (n_ != o.n_ || D_ != o.D_) throw Error("AlgebraElem: level mismatch");
    }

private:
    long n_ = 0, D_ = 0;
    Map t_;
};

/// [i_a]: the diagonal basis element.
inline AlgebraElem idempotent(const PeriodicVec& a, long D) {
    if (!a.in_SDn(D)) throw Error("idempotent: weight not in S_{D,n}: " + a.str());
    AlgebraElem x(a.n(), D);
    x.add_term(PeriodicMatrix::diagonal(a), LaurentPoly::one());
    return x;
}

namespace detail {

/// Sum of a_{i,j} over j >= s (row i fixed in [1,n]; finite band).
inline long row_tail(const PeriodicMatrix& A, long i, long s) {
    long total = (i >= s) ? A.entry(i, i) : 0;
    for (const auto& [k, v] : A.offdiag())
        if (k.first == A.res(i) && i + k.second >= s) total += v;
    return total;
}

}  // namespace detail

/// Left multiplication by E_i(D).
inline AlgebraElem mult_e(long i, const AlgebraElem& x) {
    AlgebraElem out(x.n(), x.D());
    for (const auto& [A, c] : x.terms()) {
        long T = A.band() + 1;
        // terms indexed by s in row i+1's support window
        for (long s = i + 1 - T; s <= i + 1 + T; ++s) {
            long below = A.entry(i + 1, s);
            if (below < 1) continue;
            // exponent a_{i,>=s} - a_{i+1,>s}
            long expo = detail::row_tail(A, i, s) - (detail::row_tail(A, i + 1, s) - below);
            PeriodicMatrix B = A;
            B.add_entry(i, s, 1);
            B.add_entry(i + 1, s, -1);
            LaurentPoly coeff = geometric_bracket(A.entry(i, s)).shifted(expo);
            out.add_term(B, c * coeff);
        }
    }
    return out;
}

/// Left multiplication by F_i(D).
inline AlgebraElem mult_f(long i, const AlgebraElem& x) {
    AlgebraElem out(x.n(), x.D());
    for (const auto& [A, c] : x.terms()) {
        long T = A.band() + 1;
        for (long s = i - T; s <= i + T; ++s) {
            long above = A.entry(i, s);
            if (above < 1) continue;
            // exponent a_{i+1,<=s} - a_{i,<s}
            long expo = (row_sums(A)(i + 1) - detail::row_tail(A, i + 1, s + 1)) -
                        (row_sums(A)(i) - detail::row_tail(A, i, s));
            PeriodicMatrix B = A;
            B.add_entry(i, s, -1);
            B.add_entry(i + 1, s, 1);
            LaurentPoly coeff = geometric_bracket(A.entry(i + 1, s)).shifted(expo);
            out.add_term(B, c * coeff);
        }
    }
    return out;
}

/// Left multiplication by K_a(D): scales each [A] by v^{a . r(A)}.
inline AlgebraElem mult_k(const PeriodicVec& a, const AlgebraElem& x) {
    AlgebraElem out(x.n(), x.D());
    for (const auto& [A, c] : x.terms()) out.add_term(A, c.shifted(a.dot(row_sums(A))));
    return out;
}

/// Divided power E_i^{(m)}: iterate and divide exactly by [m]!.
inline AlgebraElem mult_e_div(long i, long m, const AlgebraElem& x) {
    if (m < 1) throw Error("mult_e_div: power must be >= 1");
    AlgebraElem y = x;
    for (long j = 0; j < m; ++j) y = mult_e(i, y);
    if (m == 1) return y;
    LaurentPoly fact = quantum_factorial(m);
    AlgebraElem out(x.n(), x.D());
    for (const auto& [A, c] : y.terms()) {
        auto q = c.divide_exact(fact);
        if (!q) throw NonIntegralDivision("mult_e_div: coefficient not divisible by [m]!");
        out.add_term(A, *q);
    }
    return out;
}

inline AlgebraElem mult_f_div(long i, long m, const AlgebraElem& x) {
    if (m < 1) throw Error("mult_f_div: power must be >= 1");
    AlgebraElem y = x;
    for (long j = 0; j < m; ++j) y = mult_f(i, y);
    if (m == 1) return y;
    LaurentPoly fact = quantum_factorial(m);
    AlgebraElem out(x.n(), x.D());
    for (const auto& [A, c] : y.terms()) {
        auto q = c.divide_exact(fact);
        if (!q) throw NonIntegralDivision("mult_f_div: coefficient not divisible by [m]!");
        out.add_term(A, *q);
    }
    return out;
}

/// One symbol of a generator word: a divided power of E or F, or a K.
struct GenSymbol {
    enum Kind { E, F, K } kind;
    long i = 0;        // residue for E/F
    long m = 1;        // divided power for E/F
    PeriodicVec wt;    // weight for K

    static GenSymbol e(long i, long m = 1) { return {E, i, m, {}}; }
    static GenSymbol f(long i, long m = 1) { return {F, i, m, {}}; }
    static GenSymbol k(PeriodicVec a) { return {K, 0, 1, std::move(a)}; }

    bool operator==(const GenSymbol& o) const {
        return kind == o.kind && i == o.i && m == o.m && wt == o.wt;
    }
    bool operator<(const GenSymbol& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (i != o.i) return i < o.i;
        if (m != o.m) return m < o.m;
        return wt < o.wt;
    }
};

/// Word of generator symbols, leftmost applied last.
using GenWord = std::vector<GenSymbol>;

inline AlgebraElem apply_symbol(const GenSymbol& g, const AlgebraElem& x) {
    switch (g.kind) {
        case GenSymbol::E: return mult_e_div(g.i, g.m, x);
        case GenSymbol::F: return mult_f_div(g.i, g.m, x);
        case GenSymbol::K: return mult_k(g.wt, x);
    }
    throw Error("apply_symbol: bad kind");
}

/// Evaluate the word on [i_a]: rightmost symbol first.
inline AlgebraElem apply_word(const GenWord& w, const PeriodicVec& a, long D) {
    AlgebraElem x = idempotent(a, D);
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = apply_symbol(*it, x);
    return x;
}

/// The transpose anti-automorphism: [A] -> [A^t].
inline AlgebraElem psi_transpose(const AlgebraElem& x) {
    AlgebraElem out(x.n(), x.D());
    for (const auto& [A, c] : x.terms()) out.add_term(transpose(A), c);
    return out;
}

/// Adjoint of a generator symbol under the level-D inner product:
/// moving u across the form replaces it by adjoint_symbols(u), applied
/// leftmost-first to the right argument.
inline std::vector<GenSymbol> adjoint_symbols(const GenSymbol& g, long n) {
    switch (g.kind) {
        case GenSymbol::E:
            // v^{m^2} K_{m i} F_i^{(m)}
            return {GenSymbol::k(PeriodicVec::root(n, g.i).scaled(g.m)), GenSymbol::f(g.i, g.m)};
        case GenSymbol::F:
            return {GenSymbol::k(PeriodicVec::root(n, g.i).scaled(-g.m)), GenSymbol::e(g.i, g.m)};
        case GenSymbol::K:
            return {g};
    }
    throw Error("adjoint_symbols: bad kind");
}

inline long adjoint_vshift(const GenSymbol& g) {
    return (g.kind == GenSymbol::K) ? 0 : g.m * g.m;
}

/// Level-D inner product (w applied to [i_a], y): peel the word across the
/// form via the adjoints above; the base case ([i_a], z) reads off the
/// coefficient of [i_a] in z.
inline LaurentPoly inner_fixed(const GenWord& w, const PeriodicVec& a, const AlgebraElem& y) {
    if (a.n() != y.n()) throw Error("inner_fixed: period mismatch");
    if (a.sum() != y.D()) throw Error("inner_fixed: level mismatch");
    AlgebraElem z = y;
    long vshift = 0;
    for (const auto& g : w) {
        auto adj = adjoint_symbols(g, a.n());
        for (auto it = adj.rbegin(); it != adj.rend(); ++it) z = apply_symbol(*it, z);
        vshift += adjoint_vshift(g);
    }
    return z.coeff(PeriodicMatrix::diagonal(a)).shifted(vshift);
}

}  // namespace qschur
