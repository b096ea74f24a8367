#pragma once

#include <map>
#include <string>

#include "qschur/ratfunc.hpp"

namespace qschur {

/// Polynomial in an auxiliary variable u with Q(v) coefficients. In stable
/// computations u stands for v^{-p}; coefficients of stable products live in
/// Q(v)[u], and the p -> infinity limit is the u^0 coefficient.
class UPoly {
public:
    using Map = std::map<unsigned, RationalFunc>;

    UPoly() = default;
    explicit UPoly(const RationalFunc& c) {
        if (!c.is_zero()) c_[0] = c;
    }

    static UPoly u_power(unsigned k) {
        UPoly f;
        f.c_[k] = RationalFunc::one();
        return f;
    }
    static UPoly one() { return UPoly(RationalFunc::one()); }

    const Map& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    RationalFunc coeff(unsigned k) const {
        auto it = c_.find(k);
        return it == c_.end() ? RationalFunc() : it->second;
    }

    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return c_ != o.c_; }

    UPoly& operator+=(const UPoly& o) {
        for (const auto& [k, c] : o.c_) add_term(k, c);
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        for (const auto& [k, c] : o.c_) add_term(k, -c);
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        UPoly r;
        for (const auto& [ka, ca] : a.c_)
            for (const auto& [kb, cb] : b.c_) r.add_term(ka + kb, ca * cb);
        return r;
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    UPoly& scale(const RationalFunc& c) {
        if (c.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& [k, x] : c_) x *= c;
        return *this;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : c_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            if (k > 0) s += "*u^" + std::to_string(k);
        }
        return s;
    }

private:
    void add_term(unsigned k, const RationalFunc& c) {
        auto [it, fresh] = c_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    Map c_;
};

/// Substitute u := v^{-p}.
inline RationalFunc u_specialize(const UPoly& g, long p) {
    RationalFunc r;
    for (const auto& [k, c] : g.coeffs())
        r += c * RationalFunc::v_power(-p * static_cast<long>(k));
    return r;
}

/// The u^0 coefficient: the value of g as p -> infinity (in Q((v^{-1}))).
inline RationalFunc u_limit(const UPoly& g) { return g.coeff(0); }

}  // namespace qschur
