#include <catch2/catch_amalgamated.hpp>

#include "thetadft/qidentities.hpp"

using namespace thetadft;

TEST_CASE("Rogers-Ramanujan identity holds coefficient-exactly", "[qid][rr]") {
    const auto r = check_rogers_ramanujan(50, 10);
    REQUIRE(r.pass);
    REQUIRE_FALSE(r.first_mismatch.has_value());
}

TEST_CASE("Rogers-Ramanujan lowest-order coefficients", "[qid][rr]") {
    const ExponentLattice lat{1, 12, -6, 6};
    const LaurentSeries lhs1 =
        poch(1, 4, 0, 4, lat) * poch(-1, 1, 2, 4, lat) * poch(-1, 3, -2, 4, lat);
    const LaurentSeries lhs2 = LaurentSeries::monomial(lat, 1, 0, 1) *
                               (poch(1, 4, 0, 4, lat) * poch(-1, 3, 2, 4, lat) *
                                poch(-1, 1, -2, 4, lat));
    const LaurentSeries rhs =
        poch(1, 1, 0, 1, lat) * poch(-1, 0, 1, 1, lat) * poch(-1, 1, -1, 1, lat);
    // constant terms: all products start at 1; the z-term contributes nothing at z^0
    REQUIRE((lhs1 + lhs2).coeff(0, 0) == 1);
    REQUIRE(rhs.coeff(0, 0) == 1);
    // z^1 q^0: the (1 + q^0 z) factor on the right, the z * prod term on the left
    REQUIRE((lhs1 + lhs2).coeff(0, 1) == 1);
    REQUIRE(rhs.coeff(0, 1) == 1);
    // parity split: even z-degrees come from the first product, odd from the second
    for (const auto& [k, v] : lhs1.terms()) REQUIRE(k.ez % 2 == 0);
    for (const auto& [k, v] : lhs2.terms()) REQUIRE(k.ez % 2 != 0);
}

TEST_CASE("Rogers-Ramanujan window precondition is enforced", "[qid][rr][errors]") {
    REQUIRE(rr_required_halfwidth(50) == 10);
    REQUIRE_THROWS_AS(check_rogers_ramanujan(50, 9), std::invalid_argument);
    REQUIRE_THROWS_AS(rr_substitution_trace(50, 9), std::invalid_argument);
}

TEST_CASE("square-number identity with independent indicator check", "[qid][square]") {
    const auto r = check_square_identity(100);
    REQUIRE(r.pass);

    // independent of the check: the left side must be the square indicator
    const ExponentLattice lat{1, 100, 0, 0};
    LaurentSeries lhs(lat);
    for (long m = -10; m <= 10; ++m) lhs.add_term(m * m, 0, 1);
    for (long long e = 0; e <= 100; ++e) {
        const long r_ = isqrt_floor(e);
        const bool is_sq = r_ * static_cast<long long>(r_) == e;
        const BigInt expect = e == 0 ? 1 : (is_sq ? 2 : 0);
        REQUIRE(lhs.coeff(e, 0) == expect);
    }

    // right side spot values: 2q from the cross term, nothing at q^2
    const LaurentSeries p84 = poch(-1, 4, 0, 8, lat);
    const LaurentSeries p88 = poch(-1, 8, 0, 8, lat);
    const LaurentSeries rhs =
        poch(1, 8, 0, 8, lat) *
        (p84 * p84 + LaurentSeries::monomial(lat, 2, 1, 0) * p88 * p88);
    REQUIRE(rhs.coeff(1, 0) == 2);
    REQUIRE(rhs.coeff(2, 0) == 0);
}

TEST_CASE("square identity precondition", "[qid][square][errors]") {
    REQUIRE_THROWS_AS(check_square_identity(4), std::invalid_argument);
}

TEST_CASE("odd-square identity as printed (two-sided sum)", "[qid][oddsquare]") {
    const auto r = check_odd_square_identity(200);
    REQUIRE(r.pass);
    // the sum over all integers k hits each odd square twice, matching the
    // right side's leading q [1 + (1+q^8) ...] = 2q + ...
    const ExponentLattice lat{1, 60, 0, 0};
    LaurentSeries one_plus_q8 = LaurentSeries::one(lat);
    one_plus_q8.add_term(8, 0, 1);
    const LaurentSeries rhs = LaurentSeries::monomial(lat, 1, 1, 0) *
                              poch(1, 32, 0, 32, lat) * poch(-1, 24, 0, 32, lat) *
                              (poch(-1, 8, 0, 32, lat) + one_plus_q8 * poch(-1, 40, 0, 32, lat));
    REQUIRE(rhs.coeff(1, 0) == 2);
    REQUIRE(rhs.coeff(9, 0) == 2);
    REQUIRE(rhs.coeff(25, 0) == 2);
    REQUIRE(rhs.coeff(4, 0) == 0);
    REQUIRE_THROWS_AS(check_odd_square_identity(16), std::invalid_argument);
}

TEST_CASE("triangular identity on the 1/8 lattice", "[qid][triangular]") {
    const auto r = check_triangular_identity(64);
    REQUIRE(r.pass);

    // left-side sum: coefficient 1 exactly at the triangular numbers
    const ExponentLattice lat{8, 40, 0, 0};
    LaurentSeries tri(lat);
    for (long m = 0; m * (2 * m + 1) <= 40; ++m) tri.add_term(8LL * m * (2 * m + 1), 0, 1);
    for (long m = -1; (-m) * (-2 * m - 1) <= 40; --m) tri.add_term(8LL * m * (2 * m + 1), 0, 1);
    for (long long e = 0; e <= 40; ++e) {
        bool is_tri = false;
        for (long j = 0; j * (j + 1) / 2 <= e; ++j)
            if (j * (j + 1) / 2 == e) is_tri = true;
        REQUIRE(tri.coeff(8 * e, 0) == (is_tri ? 1 : 0));
    }

    // subtrahend (q^{1/4};q^{1/4})^2 (q^{1/8};q^{1/4})^4 starts at 1
    const LaurentSeries p14 = poch(1, 2, 0, 2, lat);
    const LaurentSeries p18 = poch(1, 1, 0, 2, lat);
    const LaurentSeries sub = p14 * p14 * p18 * p18 * p18 * p18;
    REQUIRE(sub.coeff(0, 0) == 1);
    REQUIRE(sub.terms().begin()->first.eq == 0);

    REQUIRE_THROWS_AS(check_triangular_identity(4), std::invalid_argument);
}

TEST_CASE("substitution trace reproduces the identity along the proof path",
          "[qid][trace]") {
    const auto tr = rr_substitution_trace(50, 10);
    REQUIRE(tr.chain.pass);
    REQUIRE(tr.a_step_identity_ok);
    REQUIRE(tr.aprime_matches_direct);
    REQUIRE(tr.bprime_matches_direct);
    REQUIRE(tr.cprime_matches_direct);
    REQUIRE(tr.steps.size() == 6);
    const char* names[] = {"A", "B", "C", "A'", "B'", "C'"};
    for (int i = 0; i < 6; ++i) REQUIRE(tr.steps[i].first == names[i]);
}

TEST_CASE("trace and direct check agree", "[qid][trace]") {
    for (long long q : {20, 50}) {
        const long zh = rr_required_halfwidth(q);
        const auto direct = check_rogers_ramanujan(q, zh);
        const auto tr = rr_substitution_trace(q, zh);
        REQUIRE(direct.pass == tr.chain.pass);
    }
}

TEST_CASE("trace steps: B' + C' - A' vanishes within the window", "[qid][trace]") {
    const auto tr = rr_substitution_trace(30, 8);
    const LaurentSeries& ap = tr.steps[3].second;
    const LaurentSeries& bp = tr.steps[4].second;
    const LaurentSeries& cp = tr.steps[5].second;
    const LaurentSeries diff = bp + cp - ap;
    for (const auto& [k, v] : diff.terms()) {
        // anything left must lie beyond the certified window
        REQUIRE(k.eq > diff.cert_t());
    }
}
