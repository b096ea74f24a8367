#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qschur/errors.hpp"

namespace qschur {

inline long floor_div(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
inline long ceil_div(long a, long b) { return -floor_div(-a, b); }

/// n-periodic integer vector; stored values are a_1..a_n, extended by
/// a_{i+n} = a_i.
class PeriodicVec {
public:
    PeriodicVec() = default;
    explicit PeriodicVec(std::vector<long> a) : a_(std::move(a)) {
        if (a_.empty()) throw Error("PeriodicVec: empty period");
    }
    PeriodicVec(std::initializer_list<long> a) : PeriodicVec(std::vector<long>(a)) {}
    static PeriodicVec zero(long n) { return PeriodicVec(std::vector<long>(n, 0)); }
    /// The root-type vector: +1 at residue i, -1 at residue i+1.
    static PeriodicVec root(long n, long i) {
        PeriodicVec r = zero(n);
        r.at(i) += 1;
        r.at(i + 1) -= 1;
        return r;
    }
    static PeriodicVec constant(long n, long c) { return PeriodicVec(std::vector<long>(n, c)); }

    long n() const { return static_cast<long>(a_.size()); }
    long operator()(long i) const { return a_[idx(i)]; }
    long& at(long i) { return a_[idx(i)]; }
    const std::vector<long>& values() const { return a_; }

    long sum() const { return std::accumulate(a_.begin(), a_.end(), 0L); }
    bool is_nonneg() const {
        return std::all_of(a_.begin(), a_.end(), [](long x) { return x >= 0; });
    }
    /// Membership in the set of nonnegative periodic vectors of total D.
    bool in_SDn(long D) const { return is_nonneg() && sum() == D; }

    long dot(const PeriodicVec& o) const {
        check_same(o);
        long s = 0;
        for (long i = 0; i < n(); ++i) s += a_[i] * o.a_[i];
        return s;
    }

    friend PeriodicVec operator+(PeriodicVec x, const PeriodicVec& y) {
        x.check_same(y);
        for (long i = 0; i < x.n(); ++i) x.a_[i] += y.a_[i];
        return x;
    }
    friend PeriodicVec operator-(PeriodicVec x, const PeriodicVec& y) {
        x.check_same(y);
        for (long i = 0; i < x.n(); ++i) x.a_[i] -= y.a_[i];
        return x;
    }
    PeriodicVec scaled(long c) const {
        PeriodicVec r = *this;
        for (auto& x : r.a_) x *= c;
        return r;
    }

    auto operator<=>(const PeriodicVec& o) const = default;

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (long i = 0; i < n(); ++i) os << (i ? "," : "") << a_[i];
        os << ")";
        return os.str();
    }

private:
    size_t idx(long i) const {
        long n_ = n();
        return static_cast<size_t>(((i - 1) % n_ + n_) % n_);
    }
    void check_same(const PeriodicVec& o) const {
        if (n() != o.n()) throw Error("PeriodicVec: period mismatch");
    }
    std::vector<long> a_;
};

/// n-periodic integer matrix a_{i,j} = a_{i+n,j+n}, stored as a diagonal
/// vector plus a finite (row residue, nonzero offset) -> value map.
class PeriodicMatrix {
public:
    using OffMap = std::map<std::pair<long, long>, long>;

    PeriodicMatrix() = default;
    explicit PeriodicMatrix(long n) : n_(n), diag_(n, 0) {
        if (n < 1) throw Error("PeriodicMatrix: period must be >= 1");
    }
    static PeriodicMatrix diagonal(const PeriodicVec& a) {
        PeriodicMatrix m(a.n());
        for (long i = 1; i <= a.n(); ++i) m.diag_[i - 1] = a(i);
        return m;
    }
    /// E^{i,j}: single unit entry at (i,j) and its periodic translates.
    static PeriodicMatrix unit(long n, long i, long j) {
        PeriodicMatrix m(n);
        m.add_entry(i, j, 1);
        return m;
    }

    long n() const { return n_; }
    const std::vector<long>& diag() const { return diag_; }
    const OffMap& offdiag() const { return off_; }

    long entry(long i, long j) const {
        long r = res(i), t = j - i;
        if (t == 0) return diag_[r - 1];
        auto it = off_.find({r, t});
        return it == off_.end() ? 0 : it->second;
    }
    void set_entry(long i, long j, long val) {
        long r = res(i), t = j - i;
        if (t == 0) {
            diag_[r - 1] = val;
        } else if (val == 0) {
            off_.erase({r, t});
        } else {
            off_[{r, t}] = val;
        }
    }
    void add_entry(long i, long j, long delta) { set_entry(i, j, entry(i, j) + delta); }

    /// Largest |offset| of any stored off-diagonal entry (band half-width).
    long band() const {
        long b = 0;
        for (const auto& [k, v] : off_) b = std::max(b, std::labs(k.second));
        return b;
    }

    bool offdiag_nonneg() const {
        return std::all_of(off_.begin(), off_.end(), [](const auto& e) { return e.second >= 0; });
    }
    bool is_nonneg() const {
        return offdiag_nonneg() &&
               std::all_of(diag_.begin(), diag_.end(), [](long d) { return d >= 0; });
    }
    bool is_diagonal() const { return off_.empty(); }

    auto operator<=>(const PeriodicMatrix& o) const = default;

    std::string str() const {
        std::ostringstream os;
        os << "diag(";
        for (long i = 0; i < n_; ++i) os << (i ? "," : "") << diag_[i];
        os << ")";
        for (const auto& [k, v] : off_) {
            os << " + ";
            if (v != 1) os << v << "*";
            os << "E^{" << k.first << "," << k.first + k.second << "}";
        }
        return os.str();
    }

    long res(long i) const { return ((i - 1) % n_ + n_) % n_ + 1; }

private:
    long n_ = 0;
    std::vector<long> diag_;
    OffMap off_;
};

inline PeriodicVec row_sums(const PeriodicMatrix& A) {
    std::vector<long> r(A.diag().begin(), A.diag().end());
    for (const auto& [k, v] : A.offdiag()) r[k.first - 1] += v;
    return PeriodicVec(r);
}

inline PeriodicVec col_sums(const PeriodicMatrix& A) {
    std::vector<long> c(A.diag().begin(), A.diag().end());
    for (const auto& [k, v] : A.offdiag()) c[A.res(k.first + k.second) - 1] += v;
    return PeriodicVec(c);
}

inline PeriodicMatrix transpose(const PeriodicMatrix& A) {
    PeriodicMatrix T(A.n());
    for (long i = 1; i <= A.n(); ++i) T.set_entry(i, i, A.entry(i, i));
    for (const auto& [k, v] : A.offdiag()) T.set_entry(k.first + k.second, k.first, v);
    return T;
}

/// Number of m in Z with lo < m*n <= hi.
inline long count_multiples_half_open(long lo, long hi, long n) {
    long c = floor_div(hi, n) - floor_div(lo, n);
    return c > 0 ? c : 0;
}

/// d_A = sum over i >= k, j < l with 1 <= i <= n of a_{ij} a_{kl}.
/// Each ordered pair of stored entry classes contributes a closed-form count
/// of translate pairs satisfying the index conditions.
inline long d_stat(const PeriodicMatrix& A) {
    // Collect every entry class as (row residue, offset, value), diagonal
    // entries at offset 0.
    std::vector<std::array<long, 3>> cls;
    for (long i = 1; i <= A.n(); ++i)
        if (A.entry(i, i) != 0) cls.push_back({i, 0, A.entry(i, i)});
    for (const auto& [k, v] : A.offdiag()) cls.push_back({k.first, k.second, v});

    long d = 0;
    for (const auto& [r1, t1, v1] : cls) {      // instance (i,j) fixed at i = r1
        for (const auto& [r2, t2, v2] : cls) {  // instances (k,l) = (r2+sn, r2+t2+sn)
            // need r2 + sn <= r1 and r2 + t2 + sn > r1 + t1
            long cnt = count_multiples_half_open(r1 + t1 - r2 - t2, r1 - r2, A.n());
            d += v1 * v2 * cnt;
        }
    }
    return d;
}

/// Sum of a_{r,s} over r <= i, s >= j (meaningful for j > i).
inline long corner_sum_upper(const PeriodicMatrix& A, long i, long j) {
    long s = 0;
    for (const auto& [k, v] : A.offdiag()) {
        // translates (rho+mn, rho+t+mn): need rho+mn <= i, rho+t+mn >= j
        long hi = floor_div(i - k.first, A.n());
        long lo = ceil_div(j - k.first - k.second, A.n());
        if (hi >= lo) s += v * (hi - lo + 1);
    }
    for (long r = 1; r <= A.n(); ++r) {
        long v = A.entry(r, r);
        if (v == 0) continue;
        long hi = floor_div(i - r, A.n());
        long lo = ceil_div(j - r, A.n());
        if (hi >= lo) s += v * (hi - lo + 1);
    }
    return s;
}

/// Sum of a_{r,s} over r >= i, s <= j (meaningful for i > j).
inline long corner_sum_lower(const PeriodicMatrix& A, long i, long j) {
    long s = 0;
    for (const auto& [k, v] : A.offdiag()) {
        long hi = floor_div(j - k.first - k.second, A.n());
        long lo = ceil_div(i - k.first, A.n());
        if (hi >= lo) s += v * (hi - lo + 1);
    }
    for (long r = 1; r <= A.n(); ++r) {
        long v = A.entry(r, r);
        if (v == 0) continue;
        long hi = floor_div(j - r, A.n());
        long lo = ceil_div(i - r, A.n());
        if (hi >= lo) s += v * (hi - lo + 1);
    }
    return s;
}

/// The combinatorial order: every strict upper and lower corner sum of A is
/// bounded by the corresponding corner sum of B.
inline bool preceq(const PeriodicMatrix& A, const PeriodicMatrix& B) {
    if (A.n() != B.n()) throw Error("preceq: period mismatch");
    long T = std::max(A.band(), B.band());
    for (long i = 1; i <= A.n(); ++i) {
        for (long t = 1; t <= T; ++t) {
            if (corner_sum_upper(A, i, i + t) > corner_sum_upper(B, i, i + t)) return false;
            if (corner_sum_lower(A, i, i - t) > corner_sum_lower(B, i, i - t)) return false;
        }
    }
    return true;
}

/// True iff for every nonzero offset t some row k has a_{k,k+t} = 0.
inline bool is_aperiodic(const PeriodicMatrix& A) {
    std::set<long> offsets;
    for (const auto& [k, v] : A.offdiag()) offsets.insert(k.second);
    for (long t : offsets) {
        bool has_zero = false;
        for (long r = 1; r <= A.n() && !has_zero; ++r)
            if (A.entry(r, r + t) == 0) has_zero = true;
        if (!has_zero) return false;
    }
    return true;
}

/// _pA: add p to every diagonal entry.
inline PeriodicMatrix shift_p(const PeriodicMatrix& A, long p) {
    PeriodicMatrix r = A;
    for (long i = 1; i <= A.n(); ++i) r.set_entry(i, i, A.entry(i, i) + p);
    return r;
}

/// Split A into its upper part (strictly-upper entries kept, lower mass
/// collapsed onto the diagonal) and lower part (symmetrically).  The column
/// sums of the upper part equal the row sums of the lower part.
inline std::pair<PeriodicMatrix, PeriodicMatrix> split_pm(const PeriodicMatrix& A) {
    PeriodicMatrix up(A.n()), lo(A.n());
    std::vector<long> row_upper(A.n(), 0), col_lower(A.n(), 0);
    for (const auto& [k, v] : A.offdiag()) {
        if (k.second > 0) {
            up.set_entry(k.first, k.first + k.second, v);
            row_upper[k.first - 1] += v;
        } else {
            lo.set_entry(k.first, k.first + k.second, v);
            col_lower[A.res(k.first + k.second) - 1] += v;
        }
    }
    PeriodicVec r = row_sums(A), c = col_sums(A);
    for (long i = 1; i <= A.n(); ++i) {
        up.set_entry(i, i, r(i) - row_upper[i - 1]);  // sum of a_{ij}, j <= i
        lo.set_entry(i, i, c(i) - col_lower[i - 1]);  // sum of a_{ki}, k <= i
    }
    return {up, lo};
}

/// All B with B preceq A, r(B) = r(A), c(B) = c(A).  Depth-first assignment
/// of off-diagonal entries within A's band, bounded by A's corner sums;
/// diagonals forced by row sums.
inline std::set<PeriodicMatrix> enumerate_interval(const PeriodicMatrix& A) {
    long n = A.n(), T = A.band();
    PeriodicVec r = row_sums(A), c = col_sums(A);

    // Candidate off-diagonal slots (row residue, offset).
    std::vector<std::pair<long, long>> slots;
    for (long i = 1; i <= n; ++i)
        for (long t = -T; t <= T; ++t)
            if (t != 0) slots.emplace_back(i, t);

    std::set<PeriodicMatrix> out;
    PeriodicMatrix B(n);
    std::vector<long> row_used(n, 0);

    auto finish = [&]() {
        for (long i = 1; i <= n; ++i) {
            long d = r(i) - row_used[i - 1];
            if (d < 0) return;
            B.set_entry(i, i, d);
        }
        if (col_sums(B) == c && preceq(B, A)) out.insert(B);
        for (long i = 1; i <= n; ++i) B.set_entry(i, i, 0);
    };

    std::function<void(size_t)> go = [&](size_t s) {
        if (s == slots.size()) {
            finish();
            return;
        }
        auto [i, t] = slots[s];
        long cap = (t > 0) ? corner_sum_upper(A, i, i + t) : corner_sum_lower(A, i, i + t);
        cap = std::min(cap, r(i) - row_used[i - 1]);
        for (long val = 0; val <= cap; ++val) {
            B.set_entry(i, i + t, val);
            row_used[i - 1] += val;
            go(s + 1);
            row_used[i - 1] -= val;
        }
        B.set_entry(i, i + t, 0);
    };
    go(0);
    return out;
}

/// Multiplicity tableau for nilpotent cyclic-quiver representations:
/// (residue t in [1,n], length p >= 1) -> multiplicity.
class Tableau {
public:
    using Map = std::map<std::pair<long, long>, long>;

    Tableau() = default;
    explicit Tableau(long n) : n_(n) {
        if (n < 1) throw Error("Tableau: period must be >= 1");
    }

    long n() const { return n_; }
    const Map& entries() const { return mu_; }

    long mult(long t, long p) const {
        auto it = mu_.find({res(t), p});
        return it == mu_.end() ? 0 : it->second;
    }
    void set_mult(long t, long p, long m) {
        if (p < 1) throw Error("Tableau: length must be >= 1");
        if (m == 0)
            mu_.erase({res(t), p});
        else
            mu_[{res(t), p}] = m;
    }

    /// Graded dimension vector: nu_k = sum over segments covering residue k.
    PeriodicVec dim_vector() const {
        PeriodicVec nu = PeriodicVec::zero(n_);
        for (const auto& [k, m] : mu_)
            for (long j = k.first; j < k.first + k.second; ++j) nu.at(j) += m;
        return nu;
    }

    long row_total(long t) const {
        long s = 0;
        for (const auto& [k, m] : mu_)
            if (k.first == res(t)) s += m;
        return s;
    }

    auto operator<=>(const Tableau& o) const = default;

private:
    long res(long t) const { return ((t - 1) % n_ + n_) % n_ + 1; }
    long n_ = 0;
    Map mu_;
};

/// A(mu, rho, lambda): upper entries from mu (row residue, offset), lower
/// entries from rho (column residue, offset), diagonal lambda_i minus the
/// total multiplicities at residue i of both tableaux.
inline PeriodicMatrix matrix_from_triple(const Tableau& mu, const Tableau& rho,
                                         const PeriodicVec& lam) {
    long n = lam.n();
    if (mu.n() != n || rho.n() != n) throw Error("matrix_from_triple: period mismatch");
    PeriodicMatrix A(n);
    for (const auto& [k, m] : mu.entries()) A.set_entry(k.first, k.first + k.second, m);
    for (const auto& [k, m] : rho.entries()) A.set_entry(k.first + k.second, k.first, m);
    for (long i = 1; i <= n; ++i)
        A.set_entry(i, i, lam(i) - mu.row_total(i) - rho.row_total(i));
    return A;
}

/// Read off the upper-triangular entries as a tableau.
inline Tableau tableau_of_upper(const PeriodicMatrix& A_upper) {
    Tableau mu(A_upper.n());
    for (const auto& [k, v] : A_upper.offdiag()) {
        if (k.second < 0) throw Error("tableau_of_upper: matrix has lower entries");
        mu.set_mult(k.first, k.second, v);
    }
    return mu;
}

}  // namespace qschur
