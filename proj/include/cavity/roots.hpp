#pragma once

// Bracketed root finding and the table of positive zeros of j_l.

#include <cavity/error.hpp>
#include <cavity/specfun.hpp>

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

namespace cavity {

template <class Real>
struct BasicBracket {
    Real lo;
    Real hi;
    Real f_lo;
    Real f_hi;
};

using Bracket = BasicBracket<double>;

/// Evaluates f at both ends; find_root validates the sign change.
template <class Real, class F>
BasicBracket<Real> make_bracket(F&& f, Real lo, Real hi) {
    BasicBracket<Real> b{lo, hi, f(lo), f(hi)};
    return b;
}

inline constexpr double kDefaultRootTol = 1e-12;
inline constexpr int kDefaultRootMaxIter = 200;

/// Brent's method: inverse quadratic / secant steps safeguarded by
/// bisection. Returns a point x* such that a sign change of f lies within
/// [x* - tol, x* + tol]. The tolerance is floored at a few ulps of x*.
template <class Real, class F>
Real find_root(F&& f, BasicBracket<Real> bracket, Real tol,
               int max_iter = kDefaultRootMaxIter) {
    using std::abs;
    if (!(bracket.lo < bracket.hi) || !(bracket.f_lo * bracket.f_hi < 0)) {
        std::ostringstream msg;
        msg << "invalid bracket [" << bracket.lo << ", " << bracket.hi
            << "]: f values " << bracket.f_lo << ", " << bracket.f_hi;
        throw DomainError(msg.str());
    }
    if (!(tol > 0)) throw DomainError("find_root: tol must be > 0");

    const Real eps = std::numeric_limits<Real>::epsilon();
    Real a = bracket.lo, b = bracket.hi, c = bracket.hi;
    Real fa = bracket.f_lo, fb = bracket.f_hi, fc = fb;
    Real d = b - a, e = d;

    for (int iter = 0; iter < max_iter; ++iter) {
        if ((fb > 0 && fc > 0) || (fb < 0 && fc < 0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (abs(fc) < abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const Real tol1 = std::max(Real(0.5) * tol, Real(2) * eps * abs(b));
        const Real xm = Real(0.5) * (c - b);
        if (abs(xm) <= tol1 || fb == 0) return b;

        if (abs(e) >= tol1 && abs(fa) > abs(fb)) {
            Real p, q;
            const Real s = fb / fa;
            if (a == c) {
                p = Real(2) * xm * s;
                q = Real(1) - s;
            } else {
                const Real qa = fa / fc;
                const Real r = fb / fc;
                p = s * (Real(2) * xm * qa * (qa - r) - (b - a) * (r - Real(1)));
                q = (qa - Real(1)) * (r - Real(1)) * (s - Real(1));
            }
            if (p > 0) q = -q;
            p = abs(p);
            const Real min1 = Real(3) * xm * q - abs(tol1 * q);
            const Real min2 = abs(e * q);
            if (Real(2) * p < std::min(min1, min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += abs(d) > tol1 ? d : (xm > 0 ? tol1 : -tol1);
        fb = f(b);
    }
    std::ostringstream msg;
    msg << "find_root did not converge in " << max_iter << " iterations near " << b;
    throw NumericError(msg.str());
}

/// n-th positive zero x of j_l, and beta = x / pi.
struct BesselZero {
    int n;
    int l;
    double x;
    double beta;
};

namespace generic {

/// Zeros of j_l lying between consecutive zeros of j_{l-1} (interlacing).
/// Produces prev.size() - 1 zeros.
template <class Real>
std::vector<Real> next_zero_level(int l, const std::vector<Real>& prev, Real tol) {
    std::vector<Real> out;
    if (prev.size() < 2) return out;
    out.reserve(prev.size() - 1);
    auto f = [l](Real x) { return sph_bessel_j(l, x); };
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
        auto bracket = make_bracket<Real>(f, prev[i], prev[i + 1]);
        out.push_back(find_root<Real>(f, bracket, tol));
    }
    return out;
}

/// The first `count` positive zeros of j_l, built level by level from the
/// exact zeros k*pi of j_0.
template <class Real>
std::vector<Real> bessel_zeros(int l, int count, Real tol) {
    const Real pi = boost::math::constants::pi<Real>();
    std::vector<Real> level(static_cast<std::size_t>(count + l));
    for (int k = 0; k < count + l; ++k) level[k] = Real(k + 1) * pi;
    for (int m = 1; m <= l; ++m) level = next_zero_level<Real>(m, level, tol);
    return level;
}

}  // namespace generic

/// n-th positive zero of j_l (memoized, thread-safe).
BesselZero bessel_zero(int n, int l);

/// The first `count` zeros of j_l.
std::vector<BesselZero> bessel_zeros(int l, int count);

}  // namespace cavity
