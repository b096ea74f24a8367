#pragma once

#include <cstdint>
#include <vector>

#include "qschur/errors.hpp"

namespace qschur {

/// Small finite field F_q for q in {2,3,5,7} (prime residues) or q = 4
/// (F_2[x]/(x^2+x+1), elements 0,1,2=x,3=x+1).
class GF {
public:
    explicit GF(long q) : q_(q), ext4_(q == 4) {
        if (q != 2 && q != 3 && q != 4 && q != 5 && q != 7)
            throw Error("GF: q must be one of 2,3,4,5,7");
    }

    long q() const { return q_; }

    uint8_t add(uint8_t a, uint8_t b) const {
        return ext4_ ? (a ^ b) : static_cast<uint8_t>((a + b) % q_);
    }
    uint8_t neg(uint8_t a) const {
        return ext4_ ? a : static_cast<uint8_t>((q_ - a) % q_);
    }
    uint8_t sub(uint8_t a, uint8_t b) const { return add(a, neg(b)); }
    uint8_t mul(uint8_t a, uint8_t b) const {
        if (ext4_) {
            // carry-less multiply mod x^2 + x + 1
            uint8_t r = 0;
            if (b & 1) r ^= a;
            if (b & 2) r ^= static_cast<uint8_t>((a << 1) ^ ((a & 2) ? 3 : 0));
            return r & 3;
        }
        return static_cast<uint8_t>((a * b) % q_);
    }
    uint8_t inv(uint8_t a) const {
        if (a == 0) throw Error("GF: inverse of zero");
        for (uint8_t b = 1; b < q_; ++b)
            if (mul(a, b) == 1) return b;
        throw Error("GF: no inverse found");
    }

    bool operator==(const GF& o) const { return q_ == o.q_; }

private:
    long q_;
    bool ext4_;
};

/// Row-space representation of a subspace of F_q^ncols: rows are basis
/// vectors, kept in reduced row-echelon form so equality is structural.
class Subspace {
public:
    Subspace(GF f, size_t ncols) : f_(f), ncols_(ncols) {}

    const GF& field() const { return f_; }
    size_t ncols() const { return ncols_; }
    size_t dim() const { return rows_.size(); }
    const std::vector<std::vector<uint8_t>>& rows() const { return rows_; }

    void add_vector(const std::vector<uint8_t>& v) {
        if (v.size() != ncols_) throw Error("Subspace: vector length mismatch");
        rows_.push_back(v);
        reduce();
    }
    void add_rows(const Subspace& o) {
        for (const auto& r : o.rows_) rows_.push_back(r);
        reduce();
    }

    bool contains(const std::vector<uint8_t>& v) const {
        std::vector<uint8_t> w = v;
        for (const auto& r : rows_) {
            size_t p = pivot_col(r);
            if (w[p] != 0) {
                uint8_t c = f_.mul(w[p], f_.inv(r[p]));
                for (size_t j = 0; j < ncols_; ++j) w[j] = f_.sub(w[j], f_.mul(c, r[j]));
            }
        }
        for (uint8_t x : w)
            if (x != 0) return false;
        return true;
    }
    bool contains(const Subspace& o) const {
        for (const auto& r : o.rows_)
            if (!contains(r)) return false;
        return true;
    }

    bool operator==(const Subspace& o) const {
        return ncols_ == o.ncols_ && rows_ == o.rows_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    bool operator<(const Subspace& o) const { return rows_ < o.rows_; }

    friend Subspace sum(const Subspace& a, const Subspace& b) {
        Subspace r = a;
        r.add_rows(b);
        return r;
    }

    /// Image under a linear map given as vector -> vector.
    template <class Fn>
    Subspace image(Fn&& f) const {
        Subspace r(f_, ncols_);
        for (const auto& row : rows_) r.rows_.push_back(f(row));
        r.reduce();
        return r;
    }

    /// Solution space of the homogeneous system with these rows as equations.
    static Subspace kernel_of(const GF& f, const std::vector<std::vector<uint8_t>>& eqs,
                              size_t ncols) {
        // Row reduce the equation matrix, then read off free-variable basis.
        std::vector<std::vector<uint8_t>> m = eqs;
        std::vector<size_t> pivots;
        size_t r = 0;
        for (size_t c = 0; c < ncols && r < m.size(); ++c) {
            size_t sel = m.size();
            for (size_t i = r; i < m.size(); ++i)
                if (m[i][c] != 0) {
                    sel = i;
                    break;
                }
            if (sel == m.size()) continue;
            std::swap(m[r], m[sel]);
            uint8_t iv = f.inv(m[r][c]);
            for (size_t j = 0; j < ncols; ++j) m[r][j] = f.mul(m[r][j], iv);
            for (size_t i = 0; i < m.size(); ++i)
                if (i != r && m[i][c] != 0) {
                    uint8_t t = m[i][c];
                    for (size_t j = 0; j < ncols; ++j)
                        m[i][j] = f.sub(m[i][j], f.mul(t, m[r][j]));
                }
            pivots.push_back(c);
            ++r;
        }
        std::vector<bool> is_pivot(ncols, false);
        for (size_t c : pivots) is_pivot[c] = true;
        Subspace ker(f, ncols);
        for (size_t c = 0; c < ncols; ++c) {
            if (is_pivot[c]) continue;
            std::vector<uint8_t> v(ncols, 0);
            v[c] = 1;
            for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(m[i][c]);
            ker.rows_.push_back(v);
        }
        ker.reduce();
        return ker;
    }

    /// Annihilator equations: vectors u with u . x = 0 for all x in the space.
    std::vector<std::vector<uint8_t>> annihilator() const {
        Subspace ann = kernel_of(f_, rows_, ncols_);
        return ann.rows_;
    }

private:
    size_t pivot_col(const std::vector<uint8_t>& r) const {
        for (size_t j = 0; j < ncols_; ++j)
            if (r[j] != 0) return j;
        throw Error("Subspace: zero row");
    }

    void reduce() {
        size_t r = 0;
        for (size_t c = 0; c < ncols_ && r < rows_.size(); ++c) {
            size_t sel = rows_.size();
            for (size_t i = r; i < rows_.size(); ++i)
                if (rows_[i][c] != 0) {
                    sel = i;
                    break;
                }
            if (sel == rows_.size()) continue;
            std::swap(rows_[r], rows_[sel]);
            uint8_t iv = f_.inv(rows_[r][c]);
            for (size_t j = 0; j < ncols_; ++j) rows_[r][j] = f_.mul(rows_[r][j], iv);
            for (size_t i = 0; i < rows_.size(); ++i)
                if (i != r && rows_[i][c] != 0) {
                    uint8_t t = rows_[i][c];
                    for (size_t j = 0; j < ncols_; ++j)
                        rows_[i][j] = f_.sub(rows_[i][j], f_.mul(t, rows_[r][j]));
                }
            ++r;
        }
        // drop zero rows
        std::vector<std::vector<uint8_t>> keep;
        for (const auto& row : rows_) {
            bool nz = false;
            for (uint8_t x : row) nz = nz || (x != 0);
            if (nz) keep.push_back(row);
        }
        rows_ = std::move(keep);
    }

    GF f_;
    size_t ncols_;
    std::vector<std::vector<uint8_t>> rows_;
};

inline size_t dim_intersection(const Subspace& a, const Subspace& b) {
    return a.dim() + b.dim() - sum(a, b).dim();
}

/// Preimage of U under the linear map given by its action on basis vectors
/// (columns): returns {x : M x in U} where (M x)_i = sum_j M[i][j] x_j.
inline Subspace preimage(const Subspace& U,
                         const std::vector<std::vector<uint8_t>>& M) {
    const GF& f = U.field();
    size_t ncols = U.ncols();
    // x is in the preimage iff every annihilator equation u of U satisfies
    // (u^T M) x = 0.
    std::vector<std::vector<uint8_t>> eqs;
    for (const auto& u : U.annihilator()) {
        std::vector<uint8_t> e(ncols, 0);
        for (size_t j = 0; j < ncols; ++j) {
            uint8_t s = 0;
            for (size_t i = 0; i < ncols; ++i) s = f.add(s, f.mul(u[i], M[i][j]));
            e[j] = s;
        }
        eqs.push_back(e);
    }
    return Subspace::kernel_of(f, eqs, ncols);
}

}  // namespace qschur
