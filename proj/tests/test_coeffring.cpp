#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "qschur/laurent.hpp"
#include "qschur/ratfunc.hpp"
#include "qschur/upoly.hpp"

using namespace qschur;

namespace {

LaurentPoly random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), expo(-6, 6), co(-9, 9);
    LaurentPoly f;
    int k = nterms(rng);
    for (int j = 0; j < k; ++j) f += LaurentPoly::monomial(Rat(co(rng)), expo(rng));
    return f;
}

}  // namespace

TEST_CASE("bar involution on Laurent polynomials") {
    LaurentPoly f = LaurentPoly::v_power(2) + LaurentPoly(3);
    LaurentPoly expect = LaurentPoly::v_power(-2) + LaurentPoly(3);
    CHECK(f.bar() == expect);
    CHECK(LaurentPoly::one().bar() == LaurentPoly::one());

    std::mt19937 rng(12345);
    for (int it = 0; it < 50; ++it) {
        LaurentPoly g = random_laurent(rng), h = random_laurent(rng);
        CHECK(g.bar().bar() == g);
        CHECK((g * h).bar() == g.bar() * h.bar());
        CHECK((g + h).bar() == g.bar() + h.bar());
    }
}

TEST_CASE("quantum integers, factorials, Gaussian binomials") {
    CHECK(quantum_integer(2) == LaurentPoly::v_power(1) + LaurentPoly::v_power(-1));
    CHECK(quantum_integer(0) == LaurentPoly());
    CHECK(quantum_factorial(0) == LaurentPoly::one());

    LaurentPoly g42 = gauss_binomial(4, 2);
    LaurentPoly expect = LaurentPoly::v_power(4) + LaurentPoly::v_power(2) +
                         LaurentPoly(2) + LaurentPoly::v_power(-2) +
                         LaurentPoly::v_power(-4);
    CHECK(g42 == expect);

    for (long m = 0; m <= 7; ++m) {
        CHECK(quantum_integer(m).is_bar_invariant());
        for (long k = 0; k <= m; ++k) {
            LaurentPoly b = gauss_binomial(m, k);
            CHECK(b.is_bar_invariant());
            CHECK(b.has_nonneg_integer_coeffs());
        }
    }
    CHECK_THROWS_AS(quantum_integer(-1), Error);
}

TEST_CASE("exact Laurent division") {
    LaurentPoly num = quantum_factorial(4);
    LaurentPoly den = quantum_factorial(2) * quantum_factorial(2);
    auto q = num.divide_exact(den);
    REQUIRE(q.has_value());
    CHECK(*q * den == num);

    // v + v^{-1} does not divide v^2 + 1 + v^{-2}
    auto bad = quantum_integer(3).divide_exact(quantum_integer(2));
    CHECK(!bad.has_value());
}

TEST_CASE("rational function normalization and arithmetic") {
    LaurentPoly one = LaurentPoly::one(), vm2 = LaurentPoly::v_power(-2);
    RationalFunc f(one - vm2 * vm2, one - vm2);  // (1-v^{-4})/(1-v^{-2}) = 1+v^{-2}
    CHECK(f.is_laurent());
    CHECK(f.as_laurent() == one + vm2);

    RationalFunc g(one, one - vm2);
    CHECK(g + (-g) == RationalFunc());
    CHECK(g * RationalFunc(one - vm2) == RationalFunc::one());
    CHECK(g / g == RationalFunc::one());

    // same value built two ways normalizes identically
    RationalFunc g2(LaurentPoly::v_power(3).scale(Rat(2)),
                    (one - vm2) * LaurentPoly::monomial(Rat(2), 3));
    CHECK(g == g2);
}

TEST_CASE("series expansion in descending powers of v") {
    LaurentPoly one = LaurentPoly::one(), vm2 = LaurentPoly::v_power(-2);
    RationalFunc geo(one, one - vm2);
    auto s = series_expand(geo, 4);
    CHECK(s.positive.empty());
    CHECK(s.descending == std::vector<Rat>{1, 0, 1, 0, 1});

    RationalFunc exact(one - vm2 * vm2, one - vm2);
    auto s2 = series_expand(exact, 4);
    CHECK(s2.descending == std::vector<Rat>{1, 0, 1, 0, 0});

    auto s3 = series_expand(RationalFunc(), 3);
    CHECK(s3.descending == std::vector<Rat>{0, 0, 0, 0});

    RationalFunc withpos(LaurentPoly::v_power(3), one - vm2);
    auto s4 = series_expand(withpos, 2);
    CHECK(s4.positive == std::map<long, Rat>{{3, 1}, {1, 1}});
    CHECK(s4.descending == std::vector<Rat>{0, 1, 0});
}

TEST_CASE("u-polynomial specialization and limit") {
    LaurentPoly one = LaurentPoly::one(), vm2 = LaurentPoly::v_power(-2);
    RationalFunc inv(one, one - vm2);
    // g = (1 - u^2 v^{-2})/(1 - v^{-2})
    UPoly g = UPoly(inv) - UPoly::u_power(2) * UPoly(RationalFunc(vm2) * inv);

    RationalFunc at3 = u_specialize(g, 3);
    CHECK(at3 == RationalFunc(one - LaurentPoly::v_power(-8), one - vm2));
    CHECK(u_limit(g) == inv);

    UPoly h = UPoly::u_power(1) * g;
    CHECK(u_limit(h) == RationalFunc());
}

TEST_CASE("specialization agrees with the u-limit in low degrees") {
    // For g in Q(v)[u] with u = v^{-p}, coefficients of v^{-k} for k < p agree
    // with the limit when every coefficient lies in Z[v^{-1}]-bounded degrees.
    std::mt19937 rng(777);
    LaurentPoly one = LaurentPoly::one(), vm2 = LaurentPoly::v_power(-2);
    RationalFunc inv(one, one - vm2);
    for (int it = 0; it < 20; ++it) {
        std::uniform_int_distribution<int> deg(1, 3), co(-4, 4);
        UPoly g(inv * RationalFunc(Rat(co(rng))));
        int topu = deg(rng);
        for (int k = 1; k <= topu; ++k)
            g += UPoly::u_power(k) * UPoly(inv * RationalFunc(Rat(co(rng))));
        long p = 12;
        auto sl = series_expand(u_limit(g), 8);
        auto sp = series_expand(u_specialize(g, p), 8);
        for (size_t k = 0; k < 9 && static_cast<long>(k) < p; ++k)
            CHECK(sl.descending[k] == sp.descending[k]);
    }
}
