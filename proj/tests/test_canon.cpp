#include <catch2/catch_amalgamated.hpp>

#include "qschur/canon.hpp"

using namespace qschur;

namespace {

// All aperiodic n=2 matrices with band <= 2, nonneg diagonal, off-diagonal
// mass <= maxmass, level <= maxD.
std::vector<PeriodicMatrix> small_aperiodic(long maxmass, long maxD) {
    std::vector<PeriodicMatrix> out;
    std::vector<std::pair<long, long>> slots = {
        {1, 1}, {1, -1}, {2, 1}, {2, -1}, {1, 2}, {2, 2}, {1, -2}, {2, -2}};
    std::vector<long> vals(slots.size(), 0);
    std::function<void(size_t, long)> rec = [&](size_t k, long mass) {
        if (k == slots.size()) {
            for (long d1 = 0; d1 <= maxD; ++d1)
                for (long d2 = 0; d2 <= maxD; ++d2) {
                    PeriodicMatrix A(2);
                    A.set_entry(1, 1, d1);
                    A.set_entry(2, 2, d2);
                    for (size_t t = 0; t < slots.size(); ++t)
                        if (vals[t])
                            A.set_entry(slots[t].first, slots[t].first + slots[t].second,
                                        vals[t]);
                    if (row_sums(A).sum() > maxD || row_sums(A).sum() == 0) continue;
                    if (!is_aperiodic(A)) continue;
                    out.push_back(A);
                }
            return;
        }
        for (long v = 0; v + mass <= maxmass; ++v) {
            vals[k] = v;
            rec(k + 1, mass + v);
        }
        vals[k] = 0;
    };
    rec(0, 0);
    return out;
}

PeriodicMatrix bprime() {
    // n=2: diagonal (0,1) plus a unit at (1,3)
    PeriodicMatrix A(2);
    A.set_entry(2, 2, 1);
    A.set_entry(1, 3, 1);
    return A;
}

PeriodicMatrix a_per() {
    // the superdiagonal pattern: units at (1,2) and (2,3); not aperiodic
    PeriodicMatrix A(2);
    A.set_entry(1, 2, 1);
    A.set_entry(2, 3, 1);
    return A;
}

}  // namespace

TEST_CASE("monomials for single-entry matrices are single divided powers") {
    for (long c = 1; c <= 3; ++c) {
        PeriodicMatrix A(2);
        A.set_entry(1, 2, c);
        GenWord w = monomial_for(A, true);
        REQUIRE(w.size() == 1);
        CHECK(w[0] == GenSymbol::e(1, c));

        PeriodicMatrix L(2);
        L.set_entry(2, 1, c);
        GenWord wf = monomial_for(L, false);
        REQUIRE(wf.size() == 1);
        CHECK(wf[0] == GenSymbol::f(1, c));
    }
}

TEST_CASE("two-step monomial for the offset-2 witness") {
    GenWord w = monomial_for(bprime(), true);
    REQUIRE(w.size() == 2);
    CHECK(w[0] == GenSymbol::e(1));
    CHECK(w[1] == GenSymbol::e(2));

    AlgebraElem x = apply_word(w, PeriodicVec{1, 1}, 2);
    CHECK(x.coeff(bprime()) == LaurentPoly::one());
    CHECK(x.coeff(a_per()) == LaurentPoly::v_power(-1));
    CHECK(x.terms().size() == 2);
}

TEST_CASE("non-aperiodic and two-sided inputs are rejected") {
    CHECK_THROWS_AS(monomial_for(a_per(), true), Error);
    PeriodicMatrix two(2);
    two.set_entry(1, 2, 1);
    two.set_entry(2, 1, 1);
    CHECK_THROWS_AS(monomial_for(two, true), Error);
}

TEST_CASE("standard elements and diagonal canonical elements") {
    PeriodicMatrix Dg = PeriodicMatrix::diagonal(PeriodicVec{2, 1});
    StandardElement se = standard_element(Dg);
    CHECK(se.word.empty());
    CHECK(se.base == PeriodicVec{2, 1});

    CanonCache cache;
    const CanonicalElem& c = gs_canonical(Dg, 3, cache);
    CHECK(c.expansion.size() == 1);
    CHECK(c.expansion.at(Dg) == LaurentPoly::one());
}

TEST_CASE("canonical element of the offset-2 witness") {
    CanonCache cache;
    const CanonicalElem& c = gs_canonical(bprime(), 2, cache);
    CHECK(c.expansion.size() == 2);
    CHECK(c.expansion.at(bprime()) == LaurentPoly::one());
    CHECK(c.expansion.at(a_per()) == LaurentPoly::v_power(-1));
    // single-monomial presentation: no corrections were needed
    CHECK(c.presentation.size() == 1);
}

TEST_CASE("canonical expansions are unitriangular with negative-degree coefficients") {
    CanonCache cache;
    for (const auto& A : small_aperiodic(2, 4)) {
        const CanonicalElem& c = gs_canonical(A, row_sums(A).sum(), cache);
        CHECK(c.expansion.at(A) == LaurentPoly::one());
        for (const auto& [B, f] : c.expansion) {
            if (B == A) continue;
            CHECK(preceq(B, A));
            CHECK(f.in_vinv_z());
            CHECK(f.has_nonneg_integer_coeffs());
        }
    }
}

TEST_CASE("almost orthonormality across small pairs") {
    CanonCache cache;
    auto mats = small_aperiodic(2, 3);
    for (const auto& A : mats) {
        long D = row_sums(A).sum();
        const CanonicalElem& ca = gs_canonical(A, D, cache);
        for (const auto& B : mats) {
            if (row_sums(B).sum() != D) continue;
            if (!(row_sums(B) == row_sums(A)) || !(col_sums(B) == col_sums(A))) continue;
            const CanonicalElem& cb = gs_canonical(B, D, cache);
            LaurentPoly p = detail::pair_presentation(ca, detail::expansion_elem(cb));
            if (A == B) p -= LaurentPoly::one();
            CHECK(p.in_vinv_z());
        }
    }
}

TEST_CASE("level stability of presentations") {
    CanonCache cache;
    StableCanonical fam = gs_stable(bprime(), cache);
    REQUIRE(fam.words.size() == 1);
    CHECK(fam.words.begin()->first == GenWord{GenSymbol::e(1), GenSymbol::e(2)});

    StableCanonical dg = gs_stable(PeriodicMatrix::diagonal(PeriodicVec{1, 1}), cache);
    CHECK(dg.words.size() == 1);
    CHECK(dg.words.begin()->first.empty());
}

TEST_CASE("positivity reports") {
    CanonCache cache;
    StableCanonical dg = gs_stable(PeriodicMatrix::diagonal(PeriodicVec{1, 1}), cache);
    PositivityReport r0 = positivity_report(dg, dg, 6);
    REQUIRE(r0.pass);
    CHECK(r0.coeffs[0] == 1);
    for (size_t k = 1; k < r0.coeffs.size(); ++k) CHECK(r0.coeffs[k] == 0);

    // the F-generator family pairs to the geometric series 1,0,1,0,...
    PeriodicMatrix F(2);
    F.set_entry(2, 2, 1);
    F.set_entry(2, 1, 1);
    StableCanonical ff = gs_stable(F, cache);
    PositivityReport r1 = positivity_report(ff, ff, 8);
    REQUIRE(r1.pass);
    for (size_t k = 0; k < r1.coeffs.size(); ++k)
        CHECK(r1.coeffs[k] == ((k % 2 == 0) ? 1 : 0));
}
