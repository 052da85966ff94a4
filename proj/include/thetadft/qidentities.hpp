#ifndef THETADFT_QIDENTITIES_HPP
#define THETADFT_QIDENTITIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "thetadft/laurent.hpp"

namespace thetadft {

// Verdict of one coefficient-exact check. PASS iff no mismatch within the
// declared window; no tolerance appears anywhere in this module.
struct QIdentityResult {
    std::string name;
    long long q_order = 0;
    long z_halfwidth = 0;
    bool pass = false;
    std::optional<SeriesMismatch> first_mismatch;
};

namespace detail {

inline void require_power_series(const LaurentSeries& s, const char* what) {
    if (!s.is_zero() && s.terms().begin()->first.eq < 0)
        throw std::logic_error(std::string(what) +
                               ": negative q-exponent in a final checked series");
}

inline QIdentityResult make_result(std::string name, long long q_order, long zh,
                                   const LaurentSeries& lhs, const LaurentSeries& rhs) {
    require_power_series(lhs, name.c_str());
    require_power_series(rhs, name.c_str());
    const SeriesEqResult eq = series_eq(lhs, rhs);
    QIdentityResult r;
    r.name = std::move(name);
    r.q_order = q_order;
    r.z_halfwidth = zh;
    r.pass = eq.equal;
    r.first_mismatch = eq.witness;
    return r;
}

}  // namespace detail

// Largest z-degree reachable at q-degree <= q_order in the Rogers-Ramanujan
// products: degree b costs b(b-1)/2 on the cheapest ladder, so truncating at
// this halfwidth cannot mask a mismatch inside the q window.
inline long rr_required_halfwidth(long long q_order) {
    long b = 1;
    while (static_cast<long long>(b + 1) * b / 2 <= q_order) ++b;
    return b;
}

// prod (1-q^{4n})(1+q^{4n-3}z^2)(1+q^{4n-1}z^-2)
//   + z prod (1-q^{4n})(1+q^{4n-1}z^2)(1+q^{4n-3}z^-2)
//   = prod (1-q^n)(1+q^{n-1}z)(1+q^n z^-1)
inline QIdentityResult check_rogers_ramanujan(long long q_order, long z_halfwidth) {
    if (q_order < 1) throw std::invalid_argument("check_rogers_ramanujan: q_order must be >= 1");
    const long need = rr_required_halfwidth(q_order);
    if (z_halfwidth < need)
        throw std::invalid_argument(
            "check_rogers_ramanujan: z window too narrow for q_order (need halfwidth " +
            std::to_string(need) + ")");
    const ExponentLattice lat{1, q_order, -z_halfwidth, z_halfwidth};
    const LaurentSeries b_term =
        poch(1, 4, 0, 4, lat) * poch(-1, 1, 2, 4, lat) * poch(-1, 3, -2, 4, lat);
    const LaurentSeries c_term = LaurentSeries::monomial(lat, 1, 0, 1) *
                                 (poch(1, 4, 0, 4, lat) * poch(-1, 3, 2, 4, lat) *
                                  poch(-1, 1, -2, 4, lat));
    const LaurentSeries rhs =
        poch(1, 1, 0, 1, lat) * poch(-1, 0, 1, 1, lat) * poch(-1, 1, -1, 1, lat);
    return detail::make_result("ROGERS_RAMANUJAN", q_order, z_halfwidth, b_term + c_term, rhs);
}

// sum_m q^{m^2} = prod(1-q^{8m+8}) [ prod(1+q^{8m+4})^2 + 2q prod(1+q^{8m+8})^2 ]
inline QIdentityResult check_square_identity(long long q_order) {
    if (q_order < 8) throw std::invalid_argument("check_square_identity: q_order must be >= 8");
    const ExponentLattice lat{1, q_order, 0, 0};
    LaurentSeries lhs(lat);
    for (long m = -isqrt_floor(q_order); m <= isqrt_floor(q_order); ++m)
        lhs.add_term(static_cast<long long>(m) * m, 0, 1);
    const LaurentSeries p84 = poch(-1, 4, 0, 8, lat);
    const LaurentSeries p88 = poch(-1, 8, 0, 8, lat);
    const LaurentSeries rhs =
        poch(1, 8, 0, 8, lat) *
        (p84 * p84 + LaurentSeries::monomial(lat, 2, 1, 0) * p88 * p88);
    return detail::make_result("SQUARE", q_order, 0, lhs, rhs);
}

// sum_{k in Z} q^{(2k+1)^2}
//   = q prod(1-q^{32k+32})(1+q^{32k+24}) [ prod(1+q^{32k+8})
//                                          + (1+q^8) prod(1+q^{32k+40}) ]
// Transcribed as printed; note the two-sided sum hits each odd square twice.
inline QIdentityResult check_odd_square_identity(long long q_order) {
    if (q_order < 32)
        throw std::invalid_argument("check_odd_square_identity: q_order must be >= 32");
    const ExponentLattice lat{1, q_order, 0, 0};
    LaurentSeries lhs(lat);
    for (long j = 1; static_cast<long long>(j) * j <= q_order; j += 2)
        lhs.add_term(static_cast<long long>(j) * j, 0, 2);
    LaurentSeries one_plus_q8 = LaurentSeries::one(lat);
    one_plus_q8.add_term(8, 0, 1);
    const LaurentSeries bracket =
        poch(-1, 8, 0, 32, lat) + one_plus_q8 * poch(-1, 40, 0, 32, lat);
    const LaurentSeries rhs = LaurentSeries::monomial(lat, 1, 1, 0) * poch(1, 32, 0, 32, lat) *
                              poch(-1, 24, 0, 32, lat) * bracket;
    return detail::make_result("ODD_SQUARE", q_order, 0, lhs, rhs);
}

// Cross-multiplied form of the triangular-number identity on the 1/8 lattice:
// sum_m q^{m(2m+1)} * 4 q^{1/8} (q^4;q^4)[(-q^2;q^4)^2 + 2 q^{1/2} (-q^4;q^4)^2]
//   = (q^2;q^2)^2 [(-q;q^2)^2 + 2 q^{1/4}(-q^2;q^2)^2]^2
//     - (q^{1/4};q^{1/4})^2 (q^{1/8};q^{1/4})^4
inline QIdentityResult check_triangular_identity(long long q_order) {
    if (q_order < 8)
        throw std::invalid_argument("check_triangular_identity: q_order must be >= 8");
    const int D = 8;
    const ExponentLattice lat{D, q_order, 0, 0};
    auto t = [&](long long eighths) { return eighths; };  // exponents given in t-units

    LaurentSeries tri_sum(lat);
    for (long m = 0; static_cast<long long>(m) * (2 * m + 1) <= q_order; ++m)
        tri_sum.add_term(t(8LL * m * (2 * m + 1)), 0, 1);
    for (long m = -1; static_cast<long long>(-m) * (-2 * m - 1) <= q_order; --m)
        tri_sum.add_term(t(8LL * m * (2 * m + 1)), 0, 1);

    const LaurentSeries pm_q2_q4 = poch(-1, t(16), 0, t(32), lat);   // (-q^2;q^4)
    const LaurentSeries pm_q4_q4 = poch(-1, t(32), 0, t(32), lat);   // (-q^4;q^4)
    const LaurentSeries lhs =
        tri_sum * LaurentSeries::monomial(lat, 4, t(1), 0) * poch(1, t(32), 0, t(32), lat) *
        (pm_q2_q4 * pm_q2_q4 +
         LaurentSeries::monomial(lat, 2, t(4), 0) * pm_q4_q4 * pm_q4_q4);

    const LaurentSeries p22 = poch(1, t(16), 0, t(16), lat);         // (q^2;q^2)
    const LaurentSeries pm_q_q2 = poch(-1, t(8), 0, t(16), lat);     // (-q;q^2)
    const LaurentSeries pm_q2_q2 = poch(-1, t(16), 0, t(16), lat);   // (-q^2;q^2)
    const LaurentSeries inner =
        pm_q_q2 * pm_q_q2 + LaurentSeries::monomial(lat, 2, t(2), 0) * pm_q2_q2 * pm_q2_q2;
    const LaurentSeries p_q14 = poch(1, t(2), 0, t(2), lat);         // (q^{1/4};q^{1/4})
    const LaurentSeries p_q18 = poch(1, t(1), 0, t(2), lat);         // (q^{1/8};q^{1/4})
    const LaurentSeries rhs =
        p22 * p22 * inner * inner - p_q14 * p_q14 * p_q18 * p_q18 * p_q18 * p_q18;
    return detail::make_result("TRIANGULAR", q_order, 0, lhs, rhs);
}

// Named intermediates of the substitution chain: A, B, C before the
// q^2 -> q, z -> z/q^{1/2} replacements, and A', B', C' after. The chain
// verdict re-derives the Rogers-Ramanujan identity along the proof's own
// path; each primed series is also matched against its directly-built
// product form.
struct RrTrace {
    std::vector<std::pair<std::string, LaurentSeries>> steps;
    QIdentityResult chain;      // B' + C' = A'
    bool a_step_identity_ok = false;   // theta + theta_{0,1/2} = 2 sum q^{4m^2} w^{4m}
    bool aprime_matches_direct = false;
    bool bprime_matches_direct = false;
    bool cprime_matches_direct = false;
};

inline RrTrace rr_substitution_trace(long long q_order, long z_halfwidth) {
    if (q_order < 1) throw std::invalid_argument("rr_substitution_trace: q_order must be >= 1");
    const long need = rr_required_halfwidth(q_order);
    if (z_halfwidth < need)
        throw std::invalid_argument(
            "rr_substitution_trace: z window too narrow for q_order (need halfwidth " +
            std::to_string(need) + ")");

    // the two scale-downs and the z-shift consume q-order; build with headroom
    const int D = 8;
    const long long work_order = 2 * q_order + z_halfwidth + 8;
    const ExponentLattice lat{D, work_order, -z_halfwidth, z_halfwidth};
    const Rational half(1, 2);

    // z counts powers of e^{4 pi i x}; the doubled product convention makes
    // theta(4x,16tau) land on z^2.
    LaurentSeries a_step(lat);
    for (long m = -isqrt_floor(work_order); m <= isqrt_floor(work_order); ++m)
        a_step.add_term(static_cast<long long>(D) * m * m, m, 1);
    const LaurentSeries b_step =
        subst_scale_q(theta_product_series(ThetaProductLine::Theta, lat, true), Rational(4));
    const LaurentSeries c_step =
        subst_scale_q(theta_product_series(ThetaProductLine::ThetaH0, lat, true), Rational(4));

    auto primed = [&](const LaurentSeries& s) {
        LaurentSeries p = subst_shift_z_by_q(subst_scale_q(s, half), half);
        p.restrict_cert(static_cast<long long>(D) * q_order);
        return p;
    };
    const LaurentSeries a_prime = primed(a_step);
    const LaurentSeries b_prime = primed(b_step);
    const LaurentSeries c_prime = primed(c_step);

    RrTrace tr;
    tr.chain = detail::make_result("RR_SUBSTITUTION_CHAIN", q_order, z_halfwidth,
                                   b_prime + c_prime, a_prime);

    // directly-built product forms of the primed series
    const LaurentSeries a_direct =
        poch(1, D, 0, D, lat) * poch(-1, 0, 1, D, lat) * poch(-1, D, -1, D, lat);
    const LaurentSeries b_direct = poch(1, 4 * D, 0, 4 * D, lat) *
                                   poch(-1, D, 2, 4 * D, lat) * poch(-1, 3 * D, -2, 4 * D, lat);
    const LaurentSeries c_direct = LaurentSeries::monomial(lat, 1, 0, 1) *
                                   poch(1, 4 * D, 0, 4 * D, lat) * poch(-1, 3 * D, 2, 4 * D, lat) *
                                   poch(-1, D, -2, 4 * D, lat);
    tr.aprime_matches_direct = series_eq(a_prime, a_direct).equal;
    tr.bprime_matches_direct = series_eq(b_prime, b_direct).equal;
    tr.cprime_matches_direct = series_eq(c_prime, c_direct).equal;

    // theta(x,tau) + theta_{0,1/2}(x,tau) = 2 sum q^{4m^2} e^{4 pi i m x},
    // asserted in w = e^{2 pi i x} units where both sides are integral
    // (e^{4 pi i m x} = w^{2m}).
    {
        const long ww = isqrt_floor(work_order);
        const ExponentLattice latw{D, work_order, -ww, ww};
        const LaurentSeries tw = theta_product_series(ThetaProductLine::Theta, latw, false);
        const LaurentSeries tw0h = theta_product_series(ThetaProductLine::Theta0h, latw, false);
        LaurentSeries rhsw(latw);
        for (long m = -ww / 2; m <= ww / 2; ++m)
            rhsw.add_term(static_cast<long long>(D) * 4 * m * m, 2 * m, 2);
        tr.a_step_identity_ok = series_eq(tw + tw0h, rhsw).equal;
    }

    tr.steps.emplace_back("A", a_step);
    tr.steps.emplace_back("B", b_step);
    tr.steps.emplace_back("C", c_step);
    tr.steps.emplace_back("A'", a_prime);
    tr.steps.emplace_back("B'", b_prime);
    tr.steps.emplace_back("C'", c_prime);
    return tr;
}

}  // namespace thetadft

#endif
