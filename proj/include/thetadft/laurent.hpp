#ifndef THETADFT_LAURENT_HPP
#define THETADFT_LAURENT_HPP

#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thetadft/rational.hpp"

namespace thetadft {

// Exact truncated bivariate Laurent series over big integers, in
// t = q^(1/D) and z. q-exponents are stored as integers in 1/D units
// ("t-units"); the retained window is e_q <= D * q_order, z in
// [z_min, z_max]. Multiplication truncates, never rounds. Negative
// q-exponents are permitted transiently (substitutions can create them);
// identity checks assert non-negativity before comparing.
//
// Alongside the window each series carries cert_t: every coefficient with
// e_q <= cert_t is exact for the mathematical object the series denotes.
// Construction from products fills the whole window; the substitution
// endomorphisms shrink cert_t by exactly the amount of information they
// consume, so chained derivations stay honest about how far they are valid.

struct ExponentLattice {
    int D = 1;
    long long q_order = 1;  // whole-q units; window top is D * q_order t-units
    long z_min = 0;
    long z_max = 0;

    void validate() const {
        if (D < 1) throw std::invalid_argument("ExponentLattice: D must be >= 1");
        if (q_order < 1) throw std::invalid_argument("ExponentLattice: q_order must be >= 1");
        if (z_min > z_max) throw std::invalid_argument("ExponentLattice: z_min > z_max");
    }
    long long window_top_t() const { return static_cast<long long>(D) * q_order; }
    friend bool operator==(const ExponentLattice&, const ExponentLattice&) = default;
};

struct QzKey {
    long long eq;  // t-units
    long ez;
    auto operator<=>(const QzKey&) const = default;
};

struct SeriesMismatch {
    long long eq_t = 0;
    long ez = 0;
    BigInt lhs;
    BigInt rhs;
};

struct SeriesEqResult {
    bool equal = true;
    std::optional<SeriesMismatch> witness;
    long long compared_through_t = 0;
};

class LaurentSeries {
public:
    explicit LaurentSeries(ExponentLattice lat) : lat_(lat), cert_t_(lat.window_top_t()) {
        lat_.validate();
    }

    static LaurentSeries zero(const ExponentLattice& lat) { return LaurentSeries(lat); }
    static LaurentSeries one(const ExponentLattice& lat) {
        LaurentSeries s(lat);
        s.add_term(0, 0, 1);
        return s;
    }
    static LaurentSeries monomial(const ExponentLattice& lat, BigInt coef, long long eq_t,
                                  long ez) {
        LaurentSeries s(lat);
        s.add_term(eq_t, ez, std::move(coef));
        return s;
    }

    const ExponentLattice& lattice() const { return lat_; }
    long long cert_t() const { return cert_t_; }
    void restrict_cert(long long c) { cert_t_ = std::min(cert_t_, c); }
    long long dropped() const { return dropped_; }
    std::size_t term_count() const { return c_.size(); }
    const std::map<QzKey, BigInt>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    bool in_window(long long eq_t, long ez) const {
        return eq_t <= lat_.window_top_t() && ez >= lat_.z_min && ez <= lat_.z_max;
    }

    // Accumulate one monomial; terms outside the window are dropped.
    void add_term(long long eq_t, long ez, BigInt coef) {
        if (coef == 0) return;
        if (!in_window(eq_t, ez)) {
            ++dropped_;
            return;
        }
        auto it = c_.find(QzKey{eq_t, ez});
        if (it == c_.end()) {
            c_.emplace(QzKey{eq_t, ez}, std::move(coef));
        } else {
            it->second += coef;
            if (it->second == 0) c_.erase(it);
        }
    }

    BigInt coeff(long long eq_t, long ez) const {
        auto it = c_.find(QzKey{eq_t, ez});
        return it == c_.end() ? BigInt(0) : it->second;
    }

    long long min_eq_t() const { return c_.empty() ? cert_t_ + 1 : c_.begin()->first.eq; }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        require_same_lattice(a, b);
        LaurentSeries r = a;
        for (const auto& [k, v] : b.c_) r.add_term(k.eq, k.ez, v);
        r.cert_t_ = std::min(a.cert_t_, b.cert_t_);
        return r;
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        require_same_lattice(a, b);
        LaurentSeries r = a;
        for (const auto& [k, v] : b.c_) r.add_term(k.eq, k.ez, -v);
        r.cert_t_ = std::min(a.cert_t_, b.cert_t_);
        return r;
    }
    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (auto& [k, v] : r.c_) v = -v;
        return r;
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        require_same_lattice(a, b);
        LaurentSeries r(a.lat_);
        for (const auto& [ka, va] : a.c_) {
            for (const auto& [kb, vb] : b.c_) {
                const long long eq = ka.eq + kb.eq;
                const long ez = ka.ez + kb.ez;
                if (r.in_window(eq, ez)) r.add_term(eq, ez, va * vb);
            }
        }
        // coefficient at e is complete only while the unseen high-order part
        // of either factor cannot reach down to it
        r.cert_t_ = std::min({a.lat_.window_top_t(), a.cert_t_ + b.min_eq_t(),
                              b.cert_t_ + a.min_eq_t()});
        return r;
    }

    LaurentSeries scaled(const BigInt& c) const {
        LaurentSeries r(lat_);
        r.cert_t_ = cert_t_;
        if (c == 0) return r;
        for (const auto& [k, v] : c_) r.c_.emplace(k, v * c);
        return r;
    }

    // In-place multiply by (1 + c t^eq z^ez); the workhorse for Pochhammer
    // products, O(terms) per factor.
    void mul_binomial(const BigInt& c, long long eq_t, long ez) {
        std::vector<std::pair<QzKey, BigInt>> shifted;
        shifted.reserve(c_.size());
        for (const auto& [k, v] : c_) shifted.emplace_back(QzKey{k.eq + eq_t, k.ez + ez}, v * c);
        for (auto& [k, v] : shifted) add_term(k.eq, k.ez, std::move(v));
    }

    // Exact division of every coefficient by d.
    void exact_divide(const BigInt& d) {
        for (auto& [k, v] : c_) {
            if (v % d != 0)
                throw std::logic_error("LaurentSeries::exact_divide: coefficient not divisible");
            v /= d;
        }
    }

private:
    static void require_same_lattice(const LaurentSeries& a, const LaurentSeries& b) {
        if (a.lat_.D != b.lat_.D || a.lat_.z_min != b.lat_.z_min ||
            a.lat_.z_max != b.lat_.z_max || a.lat_.q_order != b.lat_.q_order)
            throw std::invalid_argument("LaurentSeries: incompatible lattices");
    }

    ExponentLattice lat_;
    long long cert_t_ = 0;
    long long dropped_ = 0;
    std::map<QzKey, BigInt> c_;
};

// (alpha; beta)_inf = prod_{k>=0} (1 - alpha beta^k) truncated to the
// window, with alpha = sign t^alpha_eq z^alpha_ez and beta = t^beta_eq.
// Factors whose q-exponent exceeds the window are 1 within it.
inline LaurentSeries poch(int sign, long long alpha_eq_t, long alpha_ez, long long beta_eq_t,
                          const ExponentLattice& lat) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("poch: sign must be +-1");
    if (beta_eq_t <= 0) throw std::invalid_argument("poch: nonpositive beta exponent");
    if (alpha_eq_t < 0) throw std::invalid_argument("poch: negative alpha q-exponent");
    LaurentSeries acc = LaurentSeries::one(lat);
    for (long long e = alpha_eq_t; e <= lat.window_top_t(); e += beta_eq_t)
        acc.mul_binomial(BigInt(-sign), e, alpha_ez);
    return acc;
}

enum class ThetaProductLine { Theta, ThetaMhh, ThetaH0, Theta0h };

// Exact product expansion of one line of the classical product formulas,
// with e^{2 pi i x} mapped to z. With doubled_z the z-exponent convention is
// one z per e^{pi i x}, which keeps the half-angle prefactors of the
// ThetaH0/ThetaMhh lines integral; those two lines require it, and require
// 4 | D for their q^{1/4} prefactor. The ThetaMhh series S carries the unit
// -i factored out: the 2 q^{1/4} sin(pi x)(...) line equals -i S. (That line
// is the expansion of -theta_{-1/2,1/2}, i.e. of the classical theta_1.)
inline LaurentSeries theta_product_series(ThetaProductLine which, const ExponentLattice& lat,
                                          bool doubled_z = false) {
    lat.validate();
    const long long D = lat.D;
    const long s = doubled_z ? 2 : 1;
    switch (which) {
        case ThetaProductLine::Theta:
            return poch(1, 2 * D, 0, 2 * D, lat) * poch(-1, D, s, 2 * D, lat) *
                   poch(-1, D, -s, 2 * D, lat);
        case ThetaProductLine::Theta0h:
            return poch(1, 2 * D, 0, 2 * D, lat) * poch(1, D, s, 2 * D, lat) *
                   poch(1, D, -s, 2 * D, lat);
        case ThetaProductLine::ThetaH0:
        case ThetaProductLine::ThetaMhh: {
            if (!doubled_z)
                throw std::invalid_argument(
                    "theta_product_series: this line needs the doubled-z convention");
            if (lat.D % 4 != 0)
                throw std::invalid_argument("theta_product_series: lattice D must be divisible by 4");
            LaurentSeries pre(lat);
            pre.add_term(D / 4, 1, 1);
            pre.add_term(D / 4, -1, which == ThetaProductLine::ThetaH0 ? 1 : -1);
            const int zsign = which == ThetaProductLine::ThetaH0 ? -1 : 1;
            return pre * poch(1, 2 * D, 0, 2 * D, lat) * poch(zsign, 2 * D, 2, 2 * D, lat) *
                   poch(zsign, 2 * D, -2, 2 * D, lat);
        }
    }
    throw std::logic_error("theta_product_series: unreachable");
}

// q -> q^factor on every exponent; coefficients unchanged. Errors if any
// retained exponent leaves the 1/D lattice.
inline LaurentSeries subst_scale_q(const LaurentSeries& s, const Rational& factor) {
    if (!(Rational(0) < factor)) throw std::invalid_argument("subst_scale_q: factor must be > 0");
    const long long p = factor.num().convert_to<long long>();
    const long long r = factor.den().convert_to<long long>();
    LaurentSeries out(s.lattice());
    for (const auto& [k, v] : s.terms()) {
        const long long scaled_num = k.eq * p;
        if (scaled_num % r != 0)
            throw std::invalid_argument("subst_scale_q: off-lattice result at e_q(t)=" +
                                        std::to_string(k.eq));
        out.add_term(scaled_num / r, k.ez, v);
    }
    // first unknown source exponent is the smallest e > cert with e p = 0 mod r
    const long long g = std::gcd(p, r);
    const long long step = r / g;
    const long long first_unknown = (s.cert_t() / step + 1) * step;
    out.restrict_cert(first_unknown * p / r - 1);
    return out;
}

// z -> z / q^half_power: monomial map q^e z^b -> q^{e - b*half_power} z^b.
// Exponents pushed above the window are dropped (plain truncation); negative
// q-exponents may appear and stay representable.
inline LaurentSeries subst_shift_z_by_q(const LaurentSeries& s, const Rational& half_power) {
    const ExponentLattice& lat = s.lattice();
    const Rational shift_per_z = half_power * Rational(lat.D);  // t-units per z power
    LaurentSeries out(lat);
    for (const auto& [k, v] : s.terms()) {
        const Rational delta = shift_per_z * Rational(k.ez);
        if (!delta.is_integer())
            throw std::invalid_argument("subst_shift_z_by_q: off-lattice exponent at e_z=" +
                                        std::to_string(k.ez));
        out.add_term(k.eq - delta.num().convert_to<long long>(), k.ez, v);
    }
    // sources for (e, z) sit at e + z*shift; the worst case over the window
    // determines how far the result stays certified
    Rational worst(0);
    for (const Rational cand : {shift_per_z * Rational(lat.z_min), shift_per_z * Rational(lat.z_max)})
        if (worst < cand) worst = cand;
    const long long up =
        (worst.num() + worst.den() - 1).convert_to<long long>() / worst.den().convert_to<long long>();
    out.restrict_cert(s.cert_t() - up);
    return out;
}

// Exact coefficient comparison on the intersection of the certified windows;
// returns the first differing (e_q, e_z) in lexicographic order.
inline SeriesEqResult series_eq(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.lattice().D != b.lattice().D)
        throw std::invalid_argument("series_eq: incompatible lattices (different D)");
    const long long top = std::min(a.cert_t(), b.cert_t());
    const long zl = std::max(a.lattice().z_min, b.lattice().z_min);
    const long zh = std::min(a.lattice().z_max, b.lattice().z_max);

    SeriesEqResult res;
    res.compared_through_t = top;
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    auto relevant = [&](const QzKey& k) { return k.eq <= top && k.ez >= zl && k.ez <= zh; };
    while (ia != ea || ib != eb) {
        while (ia != ea && !relevant(ia->first)) ++ia;
        while (ib != eb && !relevant(ib->first)) ++ib;
        if (ia == ea && ib == eb) break;
        QzKey ka = ia != ea ? ia->first : QzKey{top + 1, 0};
        QzKey kb = ib != eb ? ib->first : QzKey{top + 1, 0};
        if (ka == kb) {
            if (ia->second != ib->second) {
                res.equal = false;
                res.witness = SeriesMismatch{ka.eq, ka.ez, ia->second, ib->second};
                return res;
            }
            ++ia;
            ++ib;
        } else if (ka < kb) {
            res.equal = false;
            res.witness = SeriesMismatch{ka.eq, ka.ez, ia->second, BigInt(0)};
            return res;
        } else {
            res.equal = false;
            res.witness = SeriesMismatch{kb.eq, kb.ez, BigInt(0), ib->second};
            return res;
        }
    }
    return res;
}

struct TripleProductResult {
    bool ok = false;
    std::optional<SeriesMismatch> witness;
};

inline long isqrt_floor(long long v) {
    long r = 0;
    while (static_cast<long long>(r + 1) * (r + 1) <= v) ++r;
    return r;
}

// sum_m q^{m^2} z^m = prod_{n>=1} (1-q^{2n})(1+q^{2n-1}z)(1+q^{2n-1}z^{-1}),
// both sides expanded independently and compared coefficient-exactly.
// z-degree m costs q-degree m^2, so the window must cover |m| <= sqrt(q_order).
inline TripleProductResult triple_product_check(const ExponentLattice& lat) {
    lat.validate();
    const long need = isqrt_floor(lat.q_order);
    if (lat.z_max < need || lat.z_min > -need)
        throw std::invalid_argument(
            "triple_product_check: z window too narrow for q_order (need halfwidth " +
            std::to_string(need) + ")");
    LaurentSeries lhs(lat);
    for (long m = -need; m <= need; ++m)
        lhs.add_term(static_cast<long long>(lat.D) * m * m, m, 1);
    const LaurentSeries rhs = poch(1, 2 * lat.D, 0, 2 * lat.D, lat) *
                              poch(-1, lat.D, 1, 2 * lat.D, lat) *
                              poch(-1, lat.D, -1, 2 * lat.D, lat);
    const SeriesEqResult eq = series_eq(lhs, rhs);
    return TripleProductResult{eq.equal, eq.witness};
}

}  // namespace thetadft

#endif
