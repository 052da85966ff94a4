#ifndef THETADFT_TESTS_REFERENCE_ORACLES_HPP
#define THETADFT_TESTS_REFERENCE_ORACLES_HPP

// Test-side oracles, independent of the library's evaluation path: plain
// extended-precision direct summation with a fixed symmetric range, no
// pairing, no certificates.

#include <cmath>
#include <complex>

#include "thetadft/rational.hpp"

namespace oracle {

// sum_{m=-M}^{M} exp(pi i tau (m+a)^{2 nu} + 2 pi i (m+a)(x+b)) in long double
inline std::complex<long double> theta_direct(const thetadft::Rational& a,
                                              const thetadft::Rational& b,
                                              std::complex<double> x, std::complex<double> tau,
                                              int nu, int M = 200) {
    const long double pi = 3.141592653589793238462643383279502884L;
    const long double aw = a.to_real<long double>();
    const long double bw = b.to_real<long double>();
    const long double tr = tau.real(), ti = tau.imag();
    const long double xr = static_cast<long double>(x.real()) + bw;
    const long double xi = x.imag();
    std::complex<long double> sum(0.0L, 0.0L);
    for (int m = -M; m <= M; ++m) {
        const long double u = static_cast<long double>(m) + aw;
        long double p = 1.0L;
        const long double uu = u * u;
        for (int i = 0; i < nu; ++i) p *= uu;
        const long double wre = -pi * ti * p - 2.0L * pi * u * xi;
        const long double wim = pi * tr * p + 2.0L * pi * u * xr;
        sum += std::exp(wre) * std::complex<long double>(std::cos(wim), std::sin(wim));
    }
    return sum;
}

// partial sum over m in [-m_max, m_max] only (for tail-domination checks)
inline std::complex<long double> theta_partial(const thetadft::Rational& a,
                                               const thetadft::Rational& b,
                                               std::complex<double> x,
                                               std::complex<double> tau, int nu, int m_max) {
    std::complex<long double> full = theta_direct(a, b, x, tau, nu, m_max);
    return full;
}

}  // namespace oracle

#endif
