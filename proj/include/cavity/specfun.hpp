#pragma once

// Spherical Bessel functions j_l, y_l and Legendre polynomials P_l.
//
// The recurrence kernels are templates over the floating-point type so the
// same code serves double precision and the extended-precision limit sweeps
// in spectra (boost::multiprecision types work through ADL).

#include <cavity/error.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace cavity {

namespace generic {

template <class Real>
Real sph_j0(Real x) {
    using std::sin;
    return sin(x) / x;
}

template <class Real>
Real sph_j1(Real x) {
    using std::cos;
    using std::sin;
    return sin(x) / (x * x) - cos(x) / x;
}

template <class Real>
Real sph_y0(Real x) {
    using std::cos;
    return -cos(x) / x;
}

template <class Real>
Real sph_y1(Real x) {
    using std::cos;
    using std::sin;
    return -cos(x) / (x * x) - sin(x) / x;
}

/// First order from which a downward recurrence reproduces j_0..j_l to
/// working precision. A probe runs the (unstable, growing) upward
/// recurrence from max(l, x) until it has grown by ~1/eps; the minimal
/// solution is then negligible relative to the dominant one at that order.
template <class Real>
int miller_start(int l, Real x) {
    using std::abs;
    using std::ceil;
    const Real threshold = Real(10) / std::numeric_limits<Real>::epsilon();
    int k = std::max(l, static_cast<int>(ceil(x)));
    Real p_prev = 0;
    Real p = 1;
    while (abs(p) < threshold) {
        const Real p_next = Real(2 * k + 1) / x * p - p_prev;
        p_prev = p;
        p = p_next;
        ++k;
    }
    return k + 4;
}

/// j_0(x)..j_l(x). Upward recurrence when l <= x, Miller's downward
/// recurrence normalized against the closed form of j_0 (or j_1 near the
/// zeros of j_0) when l > x.
template <class Real>
std::vector<Real> sph_bessel_j_table(int l, Real x) {
    using std::abs;
    std::vector<Real> out(static_cast<std::size_t>(l) + 1);
    const Real j0 = sph_j0(x);
    out[0] = j0;
    if (l == 0) return out;

    if (Real(l) <= x) {
        out[1] = sph_j1(x);
        for (int k = 1; k < l; ++k)
            out[k + 1] = Real(2 * k + 1) / x * out[k] - out[k - 1];
        return out;
    }

    const Real big = Real(1e100);
    const int start = miller_start(l, x);
    Real f_next = 0;
    Real f = Real(1e-100);
    for (int k = start; k >= 1; --k) {
        const Real f_prev = Real(2 * k + 1) / x * f - f_next;
        f_next = f;
        f = f_prev;
        if (k - 1 <= l) out[k - 1] = f;
        if (abs(f) > big) {
            const Real s = Real(1) / big;
            f *= s;
            f_next *= s;
            for (int i = std::max(k - 1, 0); i <= l; ++i) out[i] *= s;
        }
    }
    const Real j1 = sph_j1(x);
    const Real scale = abs(j0) >= abs(j1) ? j0 / out[0] : j1 / out[1];
    for (auto& v : out) v *= scale;
    out[0] = j0;
    return out;
}

/// y_0(x)..y_l(x) by upward recurrence (the stable direction for y).
template <class Real>
std::vector<Real> sph_bessel_y_table(int l, Real x) {
    std::vector<Real> out(static_cast<std::size_t>(l) + 1);
    out[0] = sph_y0(x);
    if (l == 0) return out;
    out[1] = sph_y1(x);
    for (int k = 1; k < l; ++k)
        out[k + 1] = Real(2 * k + 1) / x * out[k] - out[k - 1];
    return out;
}

template <class Real>
Real sph_bessel_j(int l, Real x) {
    if (l == 0) return sph_j0(x);
    return sph_bessel_j_table(l, x).back();
}

template <class Real>
Real sph_bessel_y(int l, Real x) {
    if (l == 0) return sph_y0(x);
    return sph_bessel_y_table(l, x).back();
}

}  // namespace generic

enum class SpecialKind { BesselJ, BesselY, Legendre };

/// An evaluated special function together with its order and argument.
struct SpecialValue {
    SpecialKind kind;
    int order;
    double argument;
    double value;
};

/// j_l(x) for x > 0.
double sph_bessel_j(int l, double x);
/// y_l(x) for x > 0.
double sph_bessel_y(int l, double x);

/// Derivatives through f_l' = f_{l-1} - (l+1)/x f_l (and j_0' = -j_1).
double sph_bessel_j_derivative(int l, double x);
double sph_bessel_y_derivative(int l, double x);

/// j_0(x)..j_{l_max}(x) in one recurrence pass.
std::vector<double> sph_bessel_j_array(int l_max, double x);
std::vector<double> sph_bessel_y_array(int l_max, double x);

/// Ordinary Legendre polynomial P_l(u), |u| <= 1, via Bonnet's recurrence.
double legendre_p(int l, double u);
std::vector<double> legendre_p_array(int l_max, double u);

SpecialValue evaluate(SpecialKind kind, int l, double argument);

}  // namespace cavity
