#ifndef THETADFT_CORE_HPP
#define THETADFT_CORE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace thetadft {

// All analytic evaluation goes through these aliases; evaluators are
// templated on the real type so a wider type can be swapped in behind the
// same contract. Accumulation uses wide_real (80-bit extended on x86-64).
using real_t = double;
using complex_t = std::complex<double>;
using wide_real = long double;
using wide_complex = std::complex<long double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr long double kPiW = 3.141592653589793238462643383279502884L;

class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_finite(complex_t v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// Quasi-period tau; construction is the single validation point for
// Im(tau) > 0, evaluation never re-checks.
class Tau {
public:
    explicit Tau(complex_t v) : value_(v) {
        if (!is_finite(v) || !(v.imag() > 0.0))
            throw std::invalid_argument("Tau: requires finite value with Im(tau) > 0");
    }
    complex_t value() const { return value_; }

private:
    complex_t value_;
};

struct ThetaPoint {
    complex_t x;
    Tau tau;
    int nu;
    double eps;

    ThetaPoint(complex_t x_, Tau tau_, int nu_ = 1, double eps_ = 1e-12)
        : x(x_), tau(tau_), nu(nu_), eps(eps_) {
        if (!is_finite(x)) throw std::invalid_argument("ThetaPoint: non-finite x");
        if (nu < 1) throw std::invalid_argument("ThetaPoint: nu must be >= 1");
        if (!(eps > 0.0)) throw std::invalid_argument("ThetaPoint: eps must be > 0");
    }
};

// Axis-aligned sampling box for evaluation points. Defaults keep
// |q| = e^{-pi Im tau} <= e^{-0.8 pi} so the series are well conditioned.
struct SampleRegion {
    double im_tau_min = 0.8;
    double im_tau_max = 2.0;
    double re_tau_halfwidth = 0.5;
    double x_box_halfwidth = 0.5;
    std::uint64_t seed = 42;

    void validate() const {
        if (!(im_tau_min > 0.0) || !(im_tau_min <= im_tau_max))
            throw std::invalid_argument("SampleRegion: need 0 < im_tau_min <= im_tau_max");
        if (re_tau_halfwidth < 0.0 || x_box_halfwidth < 0.0)
            throw std::invalid_argument("SampleRegion: negative halfwidth");
    }
};

namespace detail {

// std::uniform_real_distribution is not bit-portable; this mapping is.
inline double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double in_range(std::mt19937_64& rng, double lo, double hi) {
    return lo + unit_double(rng) * (hi - lo);
}

}  // namespace detail

// Deterministic for a fixed seed: mt19937_64 has a standard-mandated
// sequence and the [0,1) mapping above is exact IEEE arithmetic.
// Draw order per point: Re x, Im x, Re tau, Im tau.
inline std::vector<std::pair<complex_t, Tau>> sample_points(const SampleRegion& region,
                                                            std::size_t count) {
    region.validate();
    if (count == 0) throw std::invalid_argument("sample_points: empty request (count = 0)");
    std::mt19937_64 rng(region.seed);
    std::vector<std::pair<complex_t, Tau>> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        double xr = detail::in_range(rng, -region.x_box_halfwidth, region.x_box_halfwidth);
        double xi = detail::in_range(rng, -region.x_box_halfwidth, region.x_box_halfwidth);
        double tr = detail::in_range(rng, -region.re_tau_halfwidth, region.re_tau_halfwidth);
        double ti = detail::in_range(rng, region.im_tau_min, region.im_tau_max);
        pts.emplace_back(complex_t(xr, xi), Tau(complex_t(tr, ti)));
    }
    return pts;
}

inline long long ipow_ll(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace thetadft

#endif
