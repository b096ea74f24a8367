#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "qschur/stab.hpp"

using namespace qschur;

namespace {

AlgebraElem finite_apply(const GenWord& w, const PeriodicVec& lam, long p) {
    PeriodicVec wp = lam + PeriodicVec::constant(lam.n(), p);
    return apply_word(w, wp, wp.sum());
}

GenWord random_word(std::mt19937& rng, long n, long len) {
    std::uniform_int_distribution<int> kind(0, 2), res(1, static_cast<int>(n));
    GenWord w;
    for (long t = 0; t < len; ++t) {
        long i = res(rng);
        switch (kind(rng)) {
            case 0: w.push_back(GenSymbol::e(i)); break;
            case 1: w.push_back(GenSymbol::f(i)); break;
            default: w.push_back(GenSymbol::k(PeriodicVec::root(n, i))); break;
        }
    }
    return w;
}

PeriodicVec random_base(std::mt19937& rng, long n) {
    std::uniform_int_distribution<long> val(-2, 3);
    std::vector<long> lam(static_cast<size_t>(n));
    for (auto& x : lam) x = val(rng);
    return PeriodicVec(lam);
}

}  // namespace

TEST_CASE("stable lowering of an idempotent is a single unit term") {
    PeriodicVec lam{-1, 2};
    StableElem x = smult_f(1, stable_idempotent(lam));
    REQUIRE(x.terms().size() == 1);
    PeriodicMatrix A = PeriodicMatrix::diagonal(lam);
    A.add_entry(1, 1, -1);
    A.add_entry(2, 1, 1);
    CHECK(x.coeff(A) == UPoly::one());
    CHECK(x.p0() == 1 + 2 + 1);  // clears the -2 diagonal plus one step
}

TEST_CASE("stable pairing of F_1 with itself") {
    // <F_1 1_lam, F_1 1_lam> = (1 - u^2 v^{-2 lam_1})/(1 - v^{-2}),
    // the stabilized form of the finite bracket at weight lam + p.
    LaurentPoly den = LaurentPoly::one() - LaurentPoly::v_power(-2);
    for (long l1 : {-1L, 0L, 2L}) {
        PeriodicVec lam{l1, 1};
        GenWord w{GenSymbol::f(1)};
        UPoly got = stable_inner(w, lam, smult_f(1, stable_idempotent(lam)));
        UPoly want{RationalFunc(LaurentPoly::one(), den)};
        UPoly t = UPoly::u_power(2);
        t.scale(RationalFunc(LaurentPoly::v_power(-2 * l1), den));
        want -= t;
        CHECK(got == want);
        // p -> infinity limit
        CHECK(u_limit(got) == RationalFunc(LaurentPoly::one(), den));
    }
}

TEST_CASE("specialization square for single generators") {
    PeriodicVec lam{0, -1, 2};
    for (auto g : {GenSymbol::e(2), GenSymbol::f(1), GenSymbol::k(PeriodicVec::root(3, 1))}) {
        StableElem x = sapply_symbol(g, stable_idempotent(lam));
        for (long p = x.p0(); p <= x.p0() + 2; ++p) {
            AlgebraElem lhs = specialize(x, p);
            AlgebraElem rhs = finite_apply({g}, lam, p);
            CHECK(lhs.terms() == rhs.terms());
        }
    }
}

TEST_CASE("specialization square for random words") {
    std::mt19937 rng(20260826);
    for (int trial = 0; trial < 25; ++trial) {
        long n = 2 + trial % 2;
        PeriodicVec lam = random_base(rng, n);
        GenWord w = random_word(rng, n, 3);
        StableElem x = sapply_word(w, stable_idempotent(lam));
        if (x.is_zero()) continue;
        for (long p = x.p0(); p <= x.p0() + 2; ++p) {
            AlgebraElem rhs = finite_apply(w, lam, p);
            CHECK(specialize(x, p).terms() == rhs.terms());
        }
    }
}

TEST_CASE("specialization square for divided powers") {
    PeriodicVec lam{2, -1};
    GenWord w{GenSymbol::f(1, 2)};
    StableElem x = sapply_word(w, stable_idempotent(lam));
    REQUIRE(!x.is_zero());
    for (long p = x.p0(); p <= x.p0() + 2; ++p) {
        AlgebraElem rhs = finite_apply(w, lam, p);
        CHECK(specialize(x, p).terms() == rhs.terms());
    }
}

TEST_CASE("stable pairing specializes to the finite pairing") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 15; ++trial) {
        long n = 2 + trial % 2;
        PeriodicVec lam = random_base(rng, n);
        GenWord w = random_word(rng, n, 2);
        StableElem y = sapply_word(w, stable_idempotent(lam));
        UPoly ip = stable_inner(w, lam, y);
        long p = std::max(y.p0(), 2L + static_cast<long>(w.size()));
        PeriodicVec wp = lam + PeriodicVec::constant(n, p);
        LaurentPoly fin = inner_fixed(w, wp, finite_apply(w, lam, p));
        RationalFunc spec = u_specialize(ip, p);
        REQUIRE(spec.is_laurent());
        CHECK(spec.as_laurent() == fin);
    }
}

TEST_CASE("stable K requires sum-zero weights") {
    PeriodicVec lam{1, 0};
    CHECK_THROWS_AS(smult_k(PeriodicVec{1, 0}, stable_idempotent(lam)), Error);
    CHECK_NOTHROW(smult_k(PeriodicVec{1, -1}, stable_idempotent(lam)));
}

TEST_CASE("specialization below the threshold is rejected") {
    PeriodicVec lam{-3, 1};
    StableElem x = smult_e(1, stable_idempotent(lam));
    CHECK_THROWS_AS(specialize(x, x.p0() - 1), StabilityNotReached);
}
