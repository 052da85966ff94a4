#ifndef THETADFT_THETA_HPP
#define THETADFT_THETA_HPP

#include <cmath>
#include <limits>
#include <utility>

#include "thetadft/core.hpp"
#include "thetadft/rational.hpp"

namespace thetadft {

// Rational characteristics (a,b); (0,0) reduces theta_{a,b} to theta.
struct Characteristics {
    Rational a;
    Rational b;
};

// Emitted with every evaluation: the summation range actually used and a
// bound on |returned value - exact sum| (series tail plus a floating-point
// allowance), guaranteed <= the requested eps.
struct TruncationCertificate {
    int m_max = 0;
    double tail_bound = 0.0;
};

struct ThetaResult {
    complex_t value;
    TruncationCertificate cert;
};

namespace detail {

inline wide_real even_pow(wide_real u, int nu) {
    // u^(2 nu) via (u*u)^nu
    wide_real p = u * u, r = 1.0L;
    for (int i = 0; i < nu; ++i) r *= p;
    return r;
}

inline constexpr int kThetaMmaxCap = 4096;

}  // namespace detail

// Upper bound on the discarded tail sum_{|m| > m_max} |term_m| for the
// theta_{a,b} series at `point`. Uses |term_m| <= exp(-pi Im(tau) (|m|-|a|)^(2 nu)
// + 2 pi (|m|+|a|) |Im x|) (b is real and does not enter), dominated by a
// geometric series once consecutive bounds are provably decreasing. Returns
// +infinity when the domination condition fails at this m_max. Monotone
// non-increasing in m_max.
inline double tail_bound(const ThetaPoint& point, const Characteristics& ch, int m_max) {
    if (m_max < 1) throw std::invalid_argument("tail_bound: m_max must be >= 1");
    const double inf = std::numeric_limits<double>::infinity();
    const wide_real t = point.tau.value().imag();
    const wide_real xi = std::fabs(static_cast<wide_real>(point.x.imag()));
    const wide_real al = std::fabs(ch.a.to_real<wide_real>());
    const int nu = point.nu;

    if (!(static_cast<wide_real>(m_max) + 1.0L - al > 0.0L)) return inf;

    auto log_term_bound = [&](wide_real M) {
        return -kPiW * t * detail::even_pow(M - al, nu) + 2.0L * kPiW * (M + al) * xi;
    };
    // Smallest decay exponent over the tail occurs at the first step.
    const wide_real log_rho = -kPiW * t *
                                  (detail::even_pow(m_max + 2.0L - al, nu) -
                                   detail::even_pow(m_max + 1.0L - al, nu)) +
                              2.0L * kPiW * xi;
    if (!(log_rho < 0.0L)) return inf;
    const wide_real rho = std::exp(log_rho);
    const wide_real bound = 2.0L * std::exp(log_term_bound(m_max + 1.0L)) / (1.0L - rho);
    return static_cast<double>(bound);
}

// theta_{a,b}(x, tau, nu) = sum_m exp(pi i tau (m+a)^(2 nu) + 2 pi i (m+a)(x+b))
// summed over m in [-m_max, m_max], pairing +m with -m and adding the
// smallest terms first. m_max grows geometrically from 8 until the series
// tail is below eps/2; the certificate adds an explicit allowance for
// rounding so the emitted bound covers the full numerical error.
inline ThetaResult theta_char(const Characteristics& ch, const ThetaPoint& point) {
    const double eps = point.eps;

    int m_max = 0;
    double series_tail = 0.0;
    for (int cand = 8; cand <= detail::kThetaMmaxCap; cand *= 2) {
        series_tail = tail_bound(point, ch, cand);
        if (series_tail <= eps / 2.0) { m_max = cand; break; }
    }
    if (m_max == 0)
        throw TruncationError(
            "theta: tail bound cannot be met within the m_max cap "
            "(eps too small or Im tau too small)");

    const wide_real a_w = ch.a.to_real<wide_real>();
    const wide_real b_w = ch.b.to_real<wide_real>();
    const wide_real tau_re = point.tau.value().real();
    const wide_real tau_im = point.tau.value().imag();
    const wide_real x_re = static_cast<wide_real>(point.x.real()) + b_w;
    const wide_real x_im = point.x.imag();
    const int nu = point.nu;

    wide_real sum_re = 0.0L, sum_im = 0.0L;
    wide_real abs_sum = 0.0L;    // sum of |term|
    wide_real scaled_sum = 0.0L; // sum of |term| (1 + |Re w| + |Im w|)

    auto add_term = [&](int m) {
        const wide_real u = static_cast<wide_real>(m) + a_w;
        const wide_real p = detail::even_pow(u, nu);
        const wide_real w_re = -kPiW * tau_im * p - 2.0L * kPiW * u * x_im;
        const wide_real w_im = kPiW * tau_re * p + 2.0L * kPiW * u * x_re;
        const wide_real mag = std::exp(w_re);
        sum_re += mag * std::cos(w_im);
        sum_im += mag * std::sin(w_im);
        abs_sum += mag;
        scaled_sum += mag * (1.0L + std::fabs(w_re) + std::fabs(w_im));
    };

    for (int m = m_max; m >= 1; --m) {
        add_term(m);
        add_term(-m);
    }
    add_term(0);

    const wide_real eps_w = std::numeric_limits<wide_real>::epsilon();
    const wide_real eps_d = std::numeric_limits<double>::epsilon();
    const double fp_allowance = static_cast<double>(
        (scaled_sum * 8.0L + abs_sum * (2.0L * m_max + 8.0L)) * eps_w +
        abs_sum * 4.0L * eps_d);

    const double total_bound = series_tail + fp_allowance;
    if (total_bound > eps)
        throw TruncationError("theta: requested eps is below the floating-point floor");

    const complex_t value(static_cast<double>(sum_re), static_cast<double>(sum_im));
    if (!is_finite(value)) throw std::range_error("theta: non-finite result");
    return ThetaResult{value, TruncationCertificate{m_max, total_bound}};
}

inline ThetaResult theta(const ThetaPoint& point) {
    return theta_char(Characteristics{}, point);
}

}  // namespace thetadft

#endif
