#ifndef THETADFT_DFT_HPP
#define THETADFT_DFT_HPP

#include <array>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "thetadft/core.hpp"
#include "thetadft/rational.hpp"
#include "thetadft/theta.hpp"

namespace thetadft {

// Fourth roots of unity by table; k is taken mod 4 so no floating powers
// introduce phase error.
inline complex_t i_pow(int k) {
    static const std::array<complex_t, 4> tbl = {complex_t(1, 0), complex_t(0, 1),
                                                 complex_t(-1, 0), complex_t(0, -1)};
    return tbl[((k % 4) + 4) % 4];
}
inline complex_t minus_i_pow(int k) { return i_pow(-k); }

// Dense DFT matrix A with A[j][k] = (1/sqrt(n)) e^{2 pi i jk / n}.
// Satisfies A A* = I, A^2 = index-negation permutation, A^4 = I.
class DftMatrix {
public:
    explicit DftMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
        if (n < 2) throw std::invalid_argument("DftMatrix: n must be >= 2");
        const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                // reduce jk mod n before the trig call to keep phases sharp
                const long long r = (static_cast<long long>(j) * k) % n;
                const double ang = 2.0 * kPi * static_cast<double>(r) / n;
                a_[idx(j, k)] = inv_sqrt_n * complex_t(std::cos(ang), std::sin(ang));
            }
        }
    }

    int n() const { return n_; }
    complex_t operator()(int j, int k) const { return a_[idx(j, k)]; }

    std::vector<complex_t> apply(const std::vector<complex_t>& v) const {
        if (static_cast<int>(v.size()) != n_)
            throw std::invalid_argument("DftMatrix::apply: dimension mismatch");
        std::vector<complex_t> out(n_, complex_t(0, 0));
        for (int j = 0; j < n_; ++j) {
            complex_t s(0, 0);
            for (int k = 0; k < n_; ++k) s += a_[idx(j, k)] * v[k];
            out[j] = s;
        }
        return out;
    }

private:
    std::size_t idx(int j, int k) const {
        return static_cast<std::size_t>(j) * n_ + k;
    }
    int n_;
    std::vector<complex_t> a_;
};

inline DftMatrix dft_matrix(int n) { return DftMatrix(n); }

// Analytic eigenvalue multiplicities of the order-n DFT for 1, -1, i, -i:
// floor((n+4)/4), floor((n+2)/4), floor((n+1)/4), floor((n-1)/4).
struct Multiplicities {
    int m_plus1 = 0;
    int m_minus1 = 0;
    int m_plus_i = 0;
    int m_minus_i = 0;

    int sum() const { return m_plus1 + m_minus1 + m_plus_i + m_minus_i; }
    int for_k(int k) const {
        switch (((k % 4) + 4) % 4) {
            case 0: return m_plus1;
            case 1: return m_plus_i;
            case 2: return m_minus1;
            default: return m_minus_i;
        }
    }
    friend bool operator==(const Multiplicities&, const Multiplicities&) = default;
};

inline Multiplicities multiplicities(int n) {
    if (n < 2) throw std::invalid_argument("multiplicities: n must be >= 2");
    return Multiplicities{(n + 4) / 4, (n + 2) / 4, (n + 1) / 4, (n - 1) / 4};
}

namespace detail {

// Cyclic Jacobi sweeps on a dense symmetric matrix; returns the eigenvalues.
// Only used for n <= 32ish, so no pivot strategy is needed.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> s, int n) {
    auto at = [&](int i, int j) -> double& { return s[static_cast<std::size_t>(i) * n + j]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::abs(at(p, q));
        if (off < 1e-14 * n) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta_r = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta_r >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta_r) + std::sqrt(theta_r * theta_r + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (int k = 0; k < n; ++k) {
                    const double skp = at(k, p), skq = at(k, q);
                    at(k, p) = c * skp - sn * skq;
                    at(k, q) = sn * skp + c * skq;
                }
                for (int k = 0; k < n; ++k) {
                    const double spk = at(p, k), sqk = at(q, k);
                    at(p, k) = c * spk - sn * sqk;
                    at(q, k) = sn * spk + c * sqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = at(i, i);
    return ev;
}

// Eigenvalues of a complex Hermitian matrix via the 2n-real symmetric
// embedding [[X, -Y], [Y, X]]; each eigenvalue appears twice.
inline std::vector<double> hermitian_eigenvalues(const std::vector<complex_t>& h, int n) {
    const int m = 2 * n;
    std::vector<double> s(static_cast<std::size_t>(m) * m, 0.0);
    auto at = [&](int i, int j) -> double& { return s[static_cast<std::size_t>(i) * m + j]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const complex_t v = h[static_cast<std::size_t>(i) * n + j];
            at(i, j) = v.real();
            at(n + i, n + j) = v.real();
            at(i, n + j) = -v.imag();
            at(n + i, j) = v.imag();
        }
    }
    return jacobi_eigenvalues(std::move(s), m);
}

inline int count_near(const std::vector<double>& ev, double target, double tol) {
    int c = 0;
    for (double v : ev)
        if (std::abs(v - target) <= tol) ++c;
    return c;
}

}  // namespace detail

// Numerically counted multiplicities of A's eigenvalues. A + A* and
// -i (A - A*) are Hermitian with eigenvalues 2 Re(lambda) and 2 Im(lambda);
// counting their spectra near +-2 recovers the four multiplicities without
// a nonsymmetric eigensolver. Eigenvalues are matched within `tol`.
inline Multiplicities counted_multiplicities(const DftMatrix& a, double tol = 1e-6) {
    const int n = a.n();
    std::vector<complex_t> re_part(static_cast<std::size_t>(n) * n);
    std::vector<complex_t> im_part(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            const complex_t ajk = a(j, k);
            const complex_t akj_conj = std::conj(a(k, j));
            re_part[static_cast<std::size_t>(j) * n + k] = ajk + akj_conj;
            im_part[static_cast<std::size_t>(j) * n + k] =
                complex_t(0, -1) * (ajk - akj_conj);
        }
    }
    const auto ev_re = detail::hermitian_eigenvalues(re_part, n);
    const auto ev_im = detail::hermitian_eigenvalues(im_part, n);
    // the embedding doubles every eigenvalue
    Multiplicities m;
    m.m_plus1 = detail::count_near(ev_re, 2.0, tol) / 2;
    m.m_minus1 = detail::count_near(ev_re, -2.0, tol) / 2;
    m.m_plus_i = detail::count_near(ev_im, 2.0, tol) / 2;
    m.m_minus_i = detail::count_near(ev_im, -2.0, tol) / 2;
    return m;
}

// The theta-built DFT eigenvector G(x, tau, nu, k) with claimed eigenvalue
// i^k. Component j:
//   theta_{j/n,0}(x,tau,nu) + (-1)^k theta_{-j/n,0}(x,tau,nu)
//   + (1/sqrt(n)) [ (-i)^k theta((j+x)/n, tau/n^{2 nu}, nu)
//                 + (-i)^{3k} theta((x-j)/n, tau/n^{2 nu}, nu) ]
struct EigenvectorG {
    int n = 0;
    int k = 0;
    complex_t x;
    complex_t tau;
    int nu = 1;
    std::vector<complex_t> components;

    double max_norm() const {
        double m = 0.0;
        for (const auto& c : components) m = std::max(m, std::abs(c));
        return m;
    }
};

inline EigenvectorG matveev_vector(int n, int k, complex_t x, const Tau& tau, int nu,
                                   double eps) {
    if (n < 2) throw std::invalid_argument("matveev_vector: n must be >= 2");
    if (!(eps > 0.0)) throw std::invalid_argument("matveev_vector: eps must be > 0");
    k = ((k % 4) + 4) % 4;

    const complex_t sign_k = i_pow(2 * k);  // (-1)^k
    const complex_t phase_a = minus_i_pow(k);
    const complex_t phase_b = minus_i_pow(3 * k);
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    const double scale = static_cast<double>(ipow_ll(n, 2 * nu));
    const Tau inner_tau(tau.value() / scale);
    const double each_eps = eps / 4.0;

    EigenvectorG g;
    g.n = n;
    g.k = k;
    g.x = x;
    g.tau = tau.value();
    g.nu = nu;
    g.components.resize(n);
    const double nd = static_cast<double>(n);
    for (int j = 0; j < n; ++j) {
        const complex_t t1 =
            theta_char({Rational(j, n), Rational(0)}, ThetaPoint(x, tau, nu, each_eps)).value;
        const complex_t t2 =
            theta_char({Rational(-j, n), Rational(0)}, ThetaPoint(x, tau, nu, each_eps)).value;
        const complex_t t3 =
            theta(ThetaPoint((static_cast<double>(j) + x) / nd, inner_tau, nu, each_eps)).value;
        const complex_t t4 =
            theta(ThetaPoint((x - static_cast<double>(j)) / nd, inner_tau, nu, each_eps)).value;
        g.components[j] = t1 + sign_k * t2 + inv_sqrt_n * (phase_a * t3 + phase_b * t4);
    }
    return g;
}

// || A G - i^k G ||_inf / max(1, ||G||_inf)
inline double eigen_residual(const DftMatrix& a, const EigenvectorG& g) {
    if (a.n() != g.n || static_cast<int>(g.components.size()) != g.n)
        throw std::invalid_argument("eigen_residual: dimension mismatch");
    const auto ag = a.apply(g.components);
    const complex_t lambda = i_pow(g.k);
    double num = 0.0;
    for (int j = 0; j < g.n; ++j) num = std::max(num, std::abs(ag[j] - lambda * g.components[j]));
    return num / std::max(1.0, g.max_norm());
}

}  // namespace thetadft

#endif
