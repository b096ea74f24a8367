#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "qschur/periodic.hpp"
#include "qschur/schur.hpp"
#include "qschur/udot.hpp"

namespace qschur {

/// A canonical basis element: the target matrix, its expansion over the
/// [B]-basis, and a presentation as a combination of verified generator
/// monomials (word, base weight) that re-evaluates to the expansion.
struct CanonicalElem {
    long n = 0;
    long D = 0;
    PeriodicMatrix A{1};
    std::map<PeriodicMatrix, LaurentPoly> expansion;
    std::map<std::pair<GenWord, PeriodicVec>, LaurentPoly> presentation;
};

namespace detail {

/// One peeling pass: each off-diagonal entry departs after `delays[e]` full
/// sweeps and then travels one row toward its diagonal per sweep; entries
/// sharing a row in the same sweep merge into a single divided power. The
/// word is emitted leftmost-first (so the last sweep is applied first when
/// the word is evaluated). `start`/`fwd` fix the cyclic row order inside a
/// sweep; a zero delay vector reproduces the plain semisimple-layer peel.
inline std::optional<GenWord> peel_once(const PeriodicMatrix& A, bool upper,
                                        const std::vector<long>& delays,
                                        long start, bool fwd) {
    long n = A.n();
    struct Unit {
        long row, col, val, wait;
    };
    std::vector<Unit> units;
    long S = 0;
    {
        size_t e = 0;
        for (const auto& [rt, val] : A.offdiag()) {
            long d = delays[e++];
            units.push_back({rt.first, rt.first + rt.second, val, d});
            S = std::max(S, d + std::labs(rt.second));
        }
    }
    GenWord word;
    for (long sweep = 0; sweep < S; ++sweep) {
        std::vector<Unit> snap = units;  // positions at sweep start
        long k0 = (start % n) + 1;
        for (long step = 0; step < n; ++step) {
            long k = fwd ? k0 + step : k0 - step;
            long m = 0;
            for (const auto& u : snap) {
                bool arrived = upper ? u.row >= u.col : u.row <= u.col;
                if (!arrived && u.wait == 0 && ((u.row - k) % n + n) % n == 0) m += u.val;
            }
            if (m == 0) continue;
            long res = ((k - 1) % n + n) % n + 1;
            word.push_back(upper ? GenSymbol::e(res, m)
                                 : GenSymbol::f(((k - 2) % n + n) % n + 1, m));
        }
        for (size_t i = 0; i < units.size(); ++i) {
            bool arrived = upper ? snap[i].row >= snap[i].col : snap[i].row <= snap[i].col;
            if (arrived) continue;
            if (snap[i].wait > 0)
                units[i].wait--;
            else
                units[i].row += upper ? 1 : -1;
        }
    }
    for (const auto& u : units)
        if (upper ? u.row < u.col : u.row > u.col) return std::nullopt;
    return word;
}

/// Check that the word evaluates unitriangularly to [A]: coefficient 1 on A
/// and all other support strictly below A in the partial order.
inline bool verify_monomial(const GenWord& w, const PeriodicMatrix& A,
                            const PeriodicVec& base) {
    long D = base.sum();
    AlgebraElem x = apply_word(w, base, D);
    if (!(x.coeff(A) == LaurentPoly::one())) return false;
    for (const auto& [B, c] : x.terms())
        if (!(B == A) && !(preceq(B, A) && !(B == A))) return false;
    return true;
}

}  // namespace detail

/// One-sided monomial construction: a word of divided powers (E's for upper,
/// F's for lower) whose evaluation at level sum(c(A)) is [A] plus strictly
/// lower terms. Found by the peeling heuristic over a bounded set of sweep
/// variants; every candidate is verified before acceptance.
inline GenWord monomial_for(const PeriodicMatrix& Ahalf, bool upper) {
    long n = Ahalf.n(), T = Ahalf.band();
    if (!is_aperiodic(Ahalf)) throw Error("monomial_for: matrix is not aperiodic");
    for (const auto& [k, v] : Ahalf.offdiag())
        if ((upper && k.second < 0) || (!upper && k.second > 0))
            throw Error("monomial_for: matrix is not one-sided");
    PeriodicVec base = col_sums(Ahalf);
    if (!base.is_nonneg()) throw Error("monomial_for: negative column sums");
    if (T == 0) return {};

    // variant search: per-entry departure delay (0..T), cyclic start row and
    // direction; candidates ordered by total delay so the plain layer peel is
    // tried first. Bounded by a verification budget.
    size_t ne = Ahalf.offdiag().size();
    long budget = 512;
    std::vector<long> delays(ne, 0);
    for (;;) {
        for (long s = 0; s < n && budget > 0; ++s)
            for (bool d : {true, false}) {
                if (budget-- <= 0) break;
                auto w = detail::peel_once(Ahalf, upper, delays, s, d);
                if (w && detail::verify_monomial(*w, Ahalf, base)) return *w;
            }
        // next delay vector in base T+1, counting order
        size_t pos = 0;
        while (pos < ne && delays[pos] == T) delays[pos++] = 0;
        if (pos == ne || budget <= 0) break;
        delays[pos]++;
    }
    throw MonomialNotFound("monomial_for: no verified word within the search budget");
}

/// The standard element of a matrix: E-monomial of the upper part composed
/// with the F-monomial of the lower part, applied to the idempotent of the
/// column weight. Its evaluation is verified unitriangular with top [A].
struct StandardElement {
    GenWord word;
    PeriodicVec base;
};

inline StandardElement standard_element(const PeriodicMatrix& A) {
    auto [U, L] = split_pm(A);
    for (long i = 1; i <= A.n(); ++i)
        if (U.entry(i, i) < 0 || L.entry(i, i) < 0)
            throw Error("standard_element: split has a negative diagonal");
    GenWord we = monomial_for(U, true);
    GenWord wf = monomial_for(L, false);
    GenWord w = we;
    w.insert(w.end(), wf.begin(), wf.end());
    StandardElement se{w, col_sums(A)};
    if (!detail::verify_monomial(se.word, A, se.base))
        throw NonUnitriangular("standard_element: word is not unitriangular at " + A.str());
    return se;
}

inline bool in_UD(const PeriodicMatrix& A) { return is_aperiodic(A); }

/// Memoization for the Gram-Schmidt recursion, keyed by (level, matrix).
using CanonCache = std::map<std::pair<long, PeriodicMatrix>, CanonicalElem>;

namespace detail {

inline AlgebraElem expansion_elem(const CanonicalElem& c) {
    AlgebraElem y(c.n, c.D);
    for (const auto& [B, f] : c.expansion) y.add_term(B, f);
    return y;
}

/// Pairing of a monomial presentation against an algebra element.
inline LaurentPoly pair_presentation(const CanonicalElem& x, const AlgebraElem& y) {
    LaurentPoly out;
    for (const auto& [key, d] : x.presentation)
        out += d * inner_fixed(key.first, key.second, y);
    return out;
}

inline void axpy(CanonicalElem& x, const LaurentPoly& e, const CanonicalElem& b) {
    for (const auto& [B, f] : b.expansion) {
        auto& slot = x.expansion[B];
        slot -= e * f;
        if (slot.is_zero()) x.expansion.erase(B);
    }
    for (const auto& [key, d] : b.presentation) {
        auto& slot = x.presentation[key];
        slot -= e * d;
        if (slot.is_zero()) x.presentation.erase(key);
    }
}

}  // namespace detail

/// The canonical element {A}: start from the verified standard element and
/// correct by bar-invariant multiples of canonical elements of strictly
/// smaller aperiodic matrices until all pairings lie in v^{-1}Z[v^{-1}].
inline const CanonicalElem& gs_canonical(const PeriodicMatrix& A, long D, CanonCache& cache) {
    if (!in_UD(A)) throw Error("gs_canonical: matrix is not aperiodic");
    if (row_sums(A).sum() != D) throw Error("gs_canonical: level mismatch");
    auto key = std::make_pair(D, A);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    StandardElement se = standard_element(A);
    AlgebraElem x0 = apply_word(se.word, se.base, D);
    CanonicalElem x;
    x.n = A.n();
    x.D = D;
    x.A = A;
    for (const auto& [B, c] : x0.terms()) x.expansion[B] = c;
    x.presentation[{se.word, se.base}] = LaurentPoly::one();

    // canonical elements of the strictly smaller aperiodic matrices
    std::vector<const CanonicalElem*> preds;
    for (const auto& B : enumerate_interval(A))
        if (!(B == A) && is_aperiodic(B)) preds.push_back(&gs_canonical(B, D, cache));

    for (int round = 0;; ++round) {
        if (round > 200) throw Error("gs_canonical: correction loop did not terminate");
        long N = -1;
        std::vector<std::pair<const CanonicalElem*, Rat>> hits;
        for (const CanonicalElem* b : preds) {
            LaurentPoly p = detail::pair_presentation(x, detail::expansion_elem(*b));
            if (p.is_zero() || p.top_degree() < 0) continue;
            if (p.top_degree() > N) {
                N = p.top_degree();
                hits.clear();
            }
            if (p.top_degree() == N) hits.emplace_back(b, p.coeff(N));
        }
        if (N < 0) break;
        for (const auto& [b, c] : hits) {
            if (c.get_den() != 1)
                throw NonIntegerLeading("gs_canonical: non-integer leading pairing at " +
                                        b->A.str());
            LaurentPoly e = (N > 0) ? LaurentPoly::monomial(c, N) + LaurentPoly::monomial(c, -N)
                                    : LaurentPoly(c);
            detail::axpy(x, e, *b);
        }
    }

    if (!(x.expansion.count(A) && x.expansion.at(A) == LaurentPoly::one()))
        throw NonUnitriangular("gs_canonical: top coefficient is not 1");
    for (const auto& [B, c] : x.expansion)
        if (!(B == A) && !preceq(B, A))
            throw NonUnitriangular("gs_canonical: support escapes the interval");

    return cache.emplace(key, std::move(x)).first->second;
}

/// The D-stable presentation: run the construction at consecutive levels
/// until the monomial-presentation coefficients agree (they are independent
/// of the level shift); return that stable word combination.
struct StableCanonical {
    PeriodicMatrix A{1};
    PeriodicVec base{std::vector<long>{0}};            // base weight at the smallest level
    std::map<GenWord, LaurentPoly> words;              // level-independent coefficients
};

inline std::map<GenWord, LaurentPoly> word_coeffs(const CanonicalElem& c) {
    std::map<GenWord, LaurentPoly> m;
    for (const auto& [key, d] : c.presentation) m[key.first] = d;
    return m;
}

inline StableCanonical gs_stable(const PeriodicMatrix& A, CanonCache& cache, long cap = 3) {
    long D0 = row_sums(A).sum();
    auto prev = word_coeffs(gs_canonical(A, D0, cache));
    for (long k = 1; k <= cap; ++k) {
        PeriodicMatrix Ak = shift_p(A, k);
        auto cur = word_coeffs(gs_canonical(Ak, D0 + k * A.n(), cache));
        if (cur == prev) {
            StableCanonical out;
            out.A = A;
            out.base = col_sums(A);
            out.words = prev;
            return out;
        }
        prev = std::move(cur);
    }
    throw StabilityNotReached("gs_stable: presentations kept changing up to the level cap");
}

/// Positivity report: the v^{-1}-series of the limit inner product of two
/// stable families over a common weight, with the nonnegative-integrality
/// verdict on its coefficients.
struct PositivityReport {
    std::vector<Rat> coeffs;   // of v^0, v^{-1}, ..., v^{-order}
    bool has_positive_part = false;
    bool pass = false;
};

inline PositivityReport positivity_report(const StableCanonical& b1,
                                          const StableCanonical& b2, unsigned order) {
    if (!(b1.base == b2.base))
        throw Error("positivity_report: families do not share a weight");
    RationalFunc total;
    for (const auto& [w1, d1] : b1.words)
        for (const auto& [w2, d2] : b2.words)
            total += RationalFunc(d1 * d2) * inner_limit_words(w1, w2, b1.base);
    SeriesExpansion s = series_expand(total, order);
    PositivityReport rep;
    rep.coeffs = s.descending;
    rep.has_positive_part = !s.positive.empty();
    rep.pass = !rep.has_positive_part;
    for (const Rat& c : rep.coeffs)
        if (c.get_den() != 1 || c < 0) rep.pass = false;
    return rep;
}

}  // namespace qschur
