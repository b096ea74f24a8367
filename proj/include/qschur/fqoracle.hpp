#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qschur/gf.hpp"
#include "qschur/laurent.hpp"
#include "qschur/periodic.hpp"

namespace qschur {

/// Window model of an n-step periodic lattice chain over F_q((eps)):
/// all lattices are sandwiched between eps^{-m}L0 and eps^m L0 for the
/// standard lattice L0, so each is an eps-stable subspace of the 2mD-
/// dimensional window W with basis eps^k e_d (k in [-m, m-1], d in [1,D]).
class LatticeChainRep {
public:
    LatticeChainRep(GF f, long n, long D, long m, std::vector<Subspace> steps)
        : f_(f), n_(n), D_(D), m_(m), U_(std::move(steps)) {
        if (static_cast<long>(U_.size()) != n_) throw Error("chain: need n subspaces");
        for (const auto& u : U_)
            if (static_cast<long>(u.ncols()) != dimW()) throw Error("chain: bad ambient dim");
        for (long i = 2; i <= n_; ++i)
            if (!U_[i - 1].contains(U_[i - 2])) throw Error("chain: steps not nested");
        for (long i = 1; i <= n_; ++i)
            if (!stable(U_[i - 1])) throw Error("chain: step not eps-stable");
        if (!U_[0].contains(eps_image(U_[n_ - 1]))) throw Error("chain: wrap not nested");
    }

    long n() const { return n_; }
    long D() const { return D_; }
    long m() const { return m_; }
    const GF& field() const { return f_; }
    long dimW() const { return 2 * m_ * D_; }

    size_t index(long k, long d) const {
        return static_cast<size_t>((k + m_) * D_ + (d - 1));
    }

    /// Standard chain of graded type a: step i is spanned by eps^k e_d for
    /// k >= 0 when d <= a_1+...+a_i and k >= 1 otherwise.
    static LatticeChainRep standard(GF f, const PeriodicVec& a, long D, long m) {
        long n = a.n();
        if (!a.in_SDn(D)) throw Error("standard chain: type not in S_{D,n}");
        std::vector<Subspace> steps;
        long s = 0;
        for (long i = 1; i <= n; ++i) {
            s += a(i);
            Subspace u(f, static_cast<size_t>(2 * m * D));
            for (long d = 1; d <= D; ++d) {
                long lo = (d <= s) ? 0 : 1;
                for (long k = lo; k <= m - 1; ++k) {
                    std::vector<uint8_t> v(static_cast<size_t>(2 * m * D), 0);
                    v[static_cast<size_t>((k + m) * D + (d - 1))] = 1;
                    u.add_vector(v);
                }
            }
            steps.push_back(u);
        }
        return LatticeChainRep(f, n, D, m, std::move(steps));
    }

    std::vector<uint8_t> eps_vec(const std::vector<uint8_t>& v) const {
        std::vector<uint8_t> w(v.size(), 0);
        for (long k = -m_; k <= m_ - 2; ++k)
            for (long d = 1; d <= D_; ++d) w[index(k + 1, d)] = v[index(k, d)];
        return w;
    }
    Subspace eps_image(const Subspace& u) const {
        return u.image([this](const std::vector<uint8_t>& v) { return eps_vec(v); });
    }
    bool stable(const Subspace& u) const { return u.contains(eps_image(u)); }

    const std::vector<std::vector<uint8_t>>& eps_matrix() const {
        if (epsmat_.empty()) {
            epsmat_.assign(static_cast<size_t>(dimW()),
                           std::vector<uint8_t>(static_cast<size_t>(dimW()), 0));
            for (long k = -m_; k <= m_ - 2; ++k)
                for (long d = 1; d <= D_; ++d) epsmat_[index(k + 1, d)][index(k, d)] = 1;
        }
        return epsmat_;
    }

    /// Extended step L_j for any j (L_{j+n} = eps^{-1} L_j); boundary
    /// clipping shows up as a dimension jump != D and raises WindowError.
    Subspace ext(long j) const {
        long i = ((j - 1) % n_ + n_) % n_ + 1;
        long t = (j - i) / n_;
        Subspace u = U_[i - 1];
        for (; t > 0; --t) {
            Subspace up = preimage(u, eps_matrix());
            if (up.dim() != u.dim() + static_cast<size_t>(D_))
                throw WindowError("chain window too small (upward extension)");
            u = up;
        }
        for (; t < 0; ++t) {
            Subspace dn = eps_image(u);
            if (dn.dim() + static_cast<size_t>(D_) != u.dim())
                throw WindowError("chain window too small (downward extension)");
            u = dn;
        }
        return u;
    }

    PeriodicVec graded_type() const {
        std::vector<long> a(n_);
        long prev = static_cast<long>(ext(0).dim());
        for (long i = 1; i <= n_; ++i) {
            a[i - 1] = static_cast<long>(U_[i - 1].dim()) - prev;
            prev = static_cast<long>(U_[i - 1].dim());
        }
        return PeriodicVec(a);
    }

    const Subspace& step(long i) const { return U_[i - 1]; }

    bool operator==(const LatticeChainRep& o) const { return U_ == o.U_; }
    bool operator<(const LatticeChainRep& o) const { return U_ < o.U_; }

private:
    GF f_;
    long n_, D_, m_;
    std::vector<Subspace> U_;
    mutable std::vector<std::vector<uint8_t>> epsmat_;
};

/// Relative position matrix of two chains in the same window:
/// a_{ij} = dim (L_i cap L'_j) / (L_{i-1} cap L'_j + L_i cap L'_{j-1}).
inline PeriodicMatrix relative_position(const LatticeChainRep& L, const LatticeChainRep& Lp) {
    if (L.n() != Lp.n() || L.D() != Lp.D() || L.m() != Lp.m() ||
        !(L.field() == Lp.field()))
        throw Error("relative_position: incompatible windows");
    long n = L.n();
    // Column range: as wide as the window allows extension.
    long reach = (L.m() - 1) * n;
    long jlo = 1 - reach, jhi = n + reach;
    // Chains sitting low (or high) in the window cannot be extended the full
    // reach; clamp to the legal range.  Completeness of the clamped sweep is
    // certified below by the row/column-sum and boundary-column checks.
    auto legal = [&](long j) {
        try {
            Lp.ext(j);
            return true;
        } catch (const WindowError&) {
            return false;
        }
    };
    while (jlo < jhi && !legal(jlo - 1)) ++jlo;
    while (jhi > jlo && !legal(jhi)) --jhi;

    // c[i][j] = dim(L_i cap L'_j) for i in [0,n]
    auto cdim = [&](long i, long j) {
        return static_cast<long>(dim_intersection(L.ext(i), Lp.ext(j)));
    };

    PeriodicMatrix A(n);
    std::vector<long> prevcol(static_cast<size_t>(n + 1));
    for (long i = 0; i <= n; ++i) prevcol[static_cast<size_t>(i)] = cdim(i, jlo - 1);
    for (long j = jlo; j <= jhi; ++j) {
        long below = cdim(0, j);
        for (long i = 1; i <= n; ++i) {
            long cur = cdim(i, j);
            long a = cur - below - prevcol[static_cast<size_t>(i)] +
                     prevcol[static_cast<size_t>(i - 1)];
            if (a < 0) throw WindowError("relative_position: negative cell");
            if (a != 0) A.add_entry(i, j, a);
            prevcol[static_cast<size_t>(i - 1)] = below;
            below = cur;
        }
        prevcol[static_cast<size_t>(n)] = below;
    }
    // Sanity: row sums must reproduce the graded types; otherwise the band
    // did not fit in the window.
    if (row_sums(A) != L.graded_type() || col_sums(A) != Lp.graded_type())
        throw WindowError("relative_position: window too small for the band");
    // Boundary columns must be empty or the band may be clipped.
    for (long i = 1; i <= n; ++i)
        if (A.entry(i, jlo) != 0 || A.entry(i, jhi) != 0)
            throw WindowError("relative_position: band touches window edge");
    return A;
}

namespace detail {

/// Enumerate all subspaces of F_q^K with prescribed intersection dimensions
/// against the prefix flag span(e_1..e_cut): for each block (cuts[t-1],
/// cuts[t]] exactly jumps[t] basis rows have their trailing coordinate there.
/// Rows are produced in trailing-pivot reduced echelon form, so each subspace
/// appears exactly once.
inline void enumerate_profile_subspaces(
    const GF& f, long K, const std::vector<long>& cuts, const std::vector<long>& jumps,
    const std::function<void(const std::vector<std::vector<uint8_t>>&)>& emit,
    long& budget) {
    // choose pivot columns per block
    std::vector<long> pivots;
    std::function<void(size_t)> choose_block = [&](size_t t) {
        if (t == cuts.size()) {
            // fill free entries: row r (pivot p): coordinates < p that are not
            // pivots of other rows range over F_q
            std::vector<std::pair<size_t, size_t>> free_pos;  // (row, col)
            std::vector<bool> is_pivot(static_cast<size_t>(K), false);
            for (long p : pivots) is_pivot[static_cast<size_t>(p)] = true;
            for (size_t r = 0; r < pivots.size(); ++r)
                for (long c = 0; c < pivots[r]; ++c)
                    if (!is_pivot[static_cast<size_t>(c)]) free_pos.emplace_back(r, c);
            std::vector<std::vector<uint8_t>> rows(
                pivots.size(), std::vector<uint8_t>(static_cast<size_t>(K), 0));
            for (size_t r = 0; r < pivots.size(); ++r)
                rows[r][static_cast<size_t>(pivots[r])] = 1;
            std::function<void(size_t)> fill = [&](size_t pos) {
                if (pos == free_pos.size()) {
                    if (--budget < 0) throw BudgetExceeded("fiber enumeration budget exceeded");
                    emit(rows);
                    return;
                }
                auto [r, c] = free_pos[pos];
                for (long val = 0; val < f.q(); ++val) {
                    rows[r][c] = static_cast<uint8_t>(val);
                    fill(pos + 1);
                }
                rows[r][c] = 0;
            };
            fill(0);
            return;
        }
        long lo = (t == 0) ? 0 : cuts[t - 1];
        long hi = cuts[t];
        long need = jumps[t];
        // choose `need` columns in [lo, hi)
        std::vector<long> chosen;
        std::function<void(long, long)> pick = [&](long start, long left) {
            if (left == 0) {
                for (long c : chosen) pivots.push_back(c);
                choose_block(t + 1);
                for (long k = 0; k < static_cast<long>(chosen.size()); ++k) pivots.pop_back();
                return;
            }
            for (long c = start; c <= hi - left; ++c) {
                chosen.push_back(c);
                pick(c + 1, left - 1);
                chosen.pop_back();
            }
        };
        pick(lo, need);
    };
    choose_block(0);
}

}  // namespace detail

struct FiberOptions {
    long budget = 1000000;
    long* used = nullptr;  // optional out-parameter: candidates examined
};

/// All chains L' in the window with relative_position(L, L') = A.
inline std::vector<LatticeChainRep> enumerate_fiber(const PeriodicMatrix& A,
                                                    const LatticeChainRep& L,
                                                    FiberOptions opt = {}) {
    long n = L.n();
    if (A.n() != n) throw Error("enumerate_fiber: period mismatch");
    if (row_sums(A) != L.graded_type())
        throw Error("enumerate_fiber: r(A) must equal the graded type of L");
    long T = A.band();
    const GF& f = L.field();

    // Grid values c(i,j) = dim(L_i cap L'_j), derived from A and the window
    // dimensions of L: below the band L_i is contained in L'_j.
    auto a_row_prefix = [&](long i, long j) {  // sum of a_{i,j'} for j' <= j
        long s = 0;
        for (long jp = i - T; jp <= j; ++jp) s += A.entry(i, jp);
        return s;
    };
    auto cgrid = [&](long i, long j) -> long {
        long i0 = j - T - 1;
        if (i <= i0) return static_cast<long>(L.ext(i).dim());
        long c = static_cast<long>(L.ext(i0).dim());
        for (long k = i0 + 1; k <= i; ++k) c += a_row_prefix(k, j);
        return c;
    };

    long budget = opt.budget;
    std::vector<LatticeChainRep> out;
    std::vector<Subspace> chosen;  // U'_1 .. U'_j

    std::function<void(long)> choose_step = [&](long j) {
        if (j == n + 1) {
            if (!chosen.front().contains(L.eps_image(chosen.back()))) return;
            LatticeChainRep cand(f, n, L.D(), L.m(), chosen);
            if (relative_position(L, cand) == A) out.push_back(cand);
            return;
        }
        Subspace Lb = L.ext(j - T - 1);
        if (j > 1) Lb.add_rows(chosen.back());
        Subspace Ub = L.ext(j + T);

        // Adapted flag inside Ub: P_i = L_i + Lb for i = j-T .. j+T.
        std::vector<std::vector<uint8_t>> basis;  // lifts of quotient coords
        Subspace span = Lb;
        std::vector<long> cuts, target;  // quotient flag cut + prescribed dim
        long lbdim = static_cast<long>(Lb.dim());
        for (long i = j - T; i <= j + T; ++i) {
            Subspace Pi = sum(L.ext(i), Lb);
            for (const auto& row : Pi.rows()) {
                if (!span.contains(row)) {
                    span.add_vector(row);
                    basis.push_back(row);
                }
            }
            cuts.push_back(static_cast<long>(basis.size()));
            // prescribed dim of (V cap P_i)/Lb via the modular law
            long want;
            if (j == 1) {
                want = cgrid(i, 1) - lbdim;
            } else {
                long dprev = static_cast<long>(chosen.back().dim());
                want = cgrid(i, j) + dprev - cgrid(i, j - 1) - lbdim;
            }
            target.push_back(want);
        }
        long K = cuts.back();
        // feasibility: targets must be a valid nondecreasing profile
        std::vector<long> jumps;
        long prevc = 0, prevt = 0;
        for (size_t t = 0; t < cuts.size(); ++t) {
            long jump = target[t] - prevt;
            if (jump < 0 || jump > cuts[t] - prevc) return;
            jumps.push_back(jump);
            prevc = cuts[t];
            prevt = target[t];
        }

        auto emit = [&](const std::vector<std::vector<uint8_t>>& rows) {
            Subspace V = Lb;
            for (const auto& r : rows) {
                std::vector<uint8_t> v(static_cast<size_t>(L.dimW()), 0);
                for (long c = 0; c < K; ++c)
                    if (r[static_cast<size_t>(c)] != 0)
                        for (size_t x = 0; x < v.size(); ++x)
                            v[x] = f.add(v[x], f.mul(r[static_cast<size_t>(c)],
                                                     basis[static_cast<size_t>(c)][x]));
                V.add_vector(v);
            }
            if (V.dim() != Lb.dim() + rows.size()) return;  // rows met Lb
            if (!L.stable(V)) return;
            chosen.push_back(V);
            choose_step(j + 1);
            chosen.pop_back();
        };
        detail::enumerate_profile_subspaces(f, K, cuts, jumps, emit, budget);
    };
    choose_step(1);
    if (opt.used) *opt.used = opt.budget - budget;
    return out;
}

inline long count_fiber(const PeriodicMatrix& A, const LatticeChainRep& L,
                        FiberOptions opt = {}) {
    return static_cast<long>(enumerate_fiber(A, L, opt).size());
}

/// Fiber count with the window-stability assertion: recompute with the
/// window enlarged by one and require the same answer.
inline long count_fiber_checked(const PeriodicMatrix& A, const PeriodicVec& base_type,
                                long D, long q, long m, FiberOptions opt = {}) {
    GF f(q);
    long c1 = count_fiber(A, LatticeChainRep::standard(f, base_type, D, m), opt);
    long c2 = count_fiber(A, LatticeChainRep::standard(f, base_type, D, m + 1), opt);
    if (c1 != c2) throw WindowError("count_fiber: window-stability check failed");
    return c1;
}

/// A window automorphism commuting with eps: e_d -> sum over d' and t >= 0 of
/// coefficients c_{d,d',t} eps^t e_{d'}, with the t = 0 layer invertible.
class WindowAut {
public:
    WindowAut(const LatticeChainRep& model, std::vector<std::vector<std::vector<uint8_t>>> c)
        : model_(model), c_(std::move(c)) {}

    /// Random such automorphism (seeded for reproducibility).
    static WindowAut random(const LatticeChainRep& model, unsigned seed) {
        const GF& f = model.field();
        long D = model.D();
        std::vector<std::vector<std::vector<uint8_t>>> c(
            static_cast<size_t>(D),
            std::vector<std::vector<uint8_t>>(static_cast<size_t>(D)));
        unsigned state = seed;
        auto rnd = [&]() {
            state = state * 1664525u + 1013904223u;
            return static_cast<uint8_t>((state >> 16) % static_cast<unsigned>(f.q()));
        };
        while (true) {
            for (long d = 0; d < D; ++d)
                for (long dp = 0; dp < D; ++dp) {
                    c[static_cast<size_t>(d)][static_cast<size_t>(dp)] = {rnd(), rnd()};
                }
            // invertibility of the t=0 layer
            Subspace test(f, static_cast<size_t>(D));
            for (long d = 0; d < D; ++d) {
                std::vector<uint8_t> v(static_cast<size_t>(D));
                for (long dp = 0; dp < D; ++dp)
                    v[static_cast<size_t>(dp)] = c[static_cast<size_t>(d)][static_cast<size_t>(dp)][0];
                test.add_vector(v);
            }
            if (test.dim() == static_cast<size_t>(D)) break;
        }
        return WindowAut(model, std::move(c));
    }

    std::vector<uint8_t> apply_vec(const std::vector<uint8_t>& v) const {
        const GF& f = model_.field();
        long D = model_.D(), m = model_.m();
        std::vector<uint8_t> w(v.size(), 0);
        for (long k = -m; k <= m - 1; ++k)
            for (long d = 1; d <= D; ++d) {
                uint8_t x = v[model_.index(k, d)];
                if (x == 0) continue;
                for (long dp = 1; dp <= D; ++dp) {
                    const auto& cs = c_[static_cast<size_t>(d - 1)][static_cast<size_t>(dp - 1)];
                    for (size_t t = 0; t < cs.size(); ++t) {
                        long kk = k + static_cast<long>(t);
                        if (kk > m - 1 || cs[t] == 0) continue;
                        size_t ix = model_.index(kk, dp);
                        w[ix] = f.add(w[ix], f.mul(x, cs[t]));
                    }
                }
            }
        return w;
    }

    LatticeChainRep apply(const LatticeChainRep& L) const {
        std::vector<Subspace> steps;
        for (long i = 1; i <= L.n(); ++i)
            steps.push_back(L.step(i).image(
                [this](const std::vector<uint8_t>& v) { return apply_vec(v); }));
        return LatticeChainRep(L.field(), L.n(), L.D(), L.m(), std::move(steps));
    }

private:
    const LatticeChainRep& model_;
    // c_[d][d'] = coefficients for t = 0,1,...
    std::vector<std::vector<std::vector<uint8_t>>> c_;
};

/// Structure constant eta^C_{A,B;q}: for a fixed pair (L, L'') in relative
/// position C, the number of L' with (L,L') in O_A and (L',L'') in O_B.
/// Verified over a second representative pair.
inline long structure_const(const PeriodicMatrix& A, const PeriodicMatrix& B,
                            const PeriodicMatrix& C, long q, long m = 0,
                            FiberOptions opt = {}) {
    if (col_sums(A) != row_sums(B) || row_sums(A) != row_sums(C) ||
        col_sums(B) != col_sums(C))
        throw Error("structure_const: incompatible margins");
    long n = A.n();
    long D = row_sums(C).sum();
    if (m == 0) m = std::max({A.band(), B.band(), C.band()}) + 2;
    GF f(q);

    auto count_for = [&](const LatticeChainRep& L, const LatticeChainRep& Lpp) {
        long cnt = 0;
        for (const auto& Lp : enumerate_fiber(A, L, opt))
            if (relative_position(Lp, Lpp) == B) ++cnt;
        return cnt;
    };

    LatticeChainRep L = LatticeChainRep::standard(f, row_sums(C), D, m);
    auto fibC = enumerate_fiber(C, L, opt);
    if (fibC.empty()) throw Error("structure_const: empty orbit fiber");
    long c1 = count_for(L, fibC.front());

    // second representative: either a second fiber point, or a translated pair
    if (fibC.size() > 1) {
        long c2 = count_for(L, fibC[1]);
        if (c1 != c2) throw Error("structure_const: representative dependence detected");
    } else {
        WindowAut g = WindowAut::random(L, 12345);
        long c2 = count_for(g.apply(L), g.apply(fibC.front()));
        if (c1 != c2) throw Error("structure_const: representative dependence detected");
    }
    (void)n;
    return c1;
}

/// Exact interpolation of counts as a polynomial in q (coefficients ascending).
inline std::vector<Rat> interp_q_poly(const std::vector<std::pair<long, long>>& counts,
                                      unsigned degree_bound) {
    if (counts.size() < degree_bound + 1)
        throw Error("interp_q_poly: need degree_bound+1 points");
    size_t k = degree_bound + 1;
    // Lagrange on the first k points.
    std::vector<Rat> poly(k, Rat(0));
    for (size_t i = 0; i < k; ++i) {
        // basis polynomial prod_{j!=i} (x - q_j)/(q_i - q_j), times value_i
        std::vector<Rat> b{Rat(1)};
        Rat denom(1);
        for (size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            std::vector<Rat> nb(b.size() + 1, Rat(0));
            for (size_t t = 0; t < b.size(); ++t) {
                nb[t + 1] += b[t];
                nb[t] -= b[t] * Rat(counts[j].first);
            }
            b = std::move(nb);
            denom *= Rat(counts[i].first - counts[j].first);
        }
        for (size_t t = 0; t < b.size(); ++t)
            poly[t] += b[t] * Rat(counts[i].second) / denom;
    }
    while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
    // consistency on all points
    for (const auto& [q, val] : counts) {
        Rat acc(0), p(1);
        for (const Rat& c : poly) {
            acc += c * p;
            p *= Rat(q);
        }
        if (acc != val)
            throw Error("interp_q_poly: counts inconsistent with the degree bound");
    }
    return poly;
}

/// ([A],[A'])_D evaluated at v = sqrt(q): delta_{A,A'} q^{-d_{A^t}} |X_{A^t}|.
inline Rat inner_direct(const PeriodicMatrix& A, const PeriodicMatrix& Ap, long q,
                        long m = 0, FiberOptions opt = {}) {
    if (!(A == Ap)) return Rat(0);
    PeriodicMatrix At = transpose(A);
    long D = row_sums(A).sum();
    if (m == 0) m = A.band() + 2;
    long cnt = count_fiber_checked(At, row_sums(At), D, q, m, opt);
    long d = d_stat(At);
    Rat val(cnt);
    for (long j = 0; j < (d >= 0 ? d : -d); ++j) val = (d >= 0) ? Rat(val / q) : Rat(val * q);
    return val;
}

}  // namespace qschur
