#pragma once

// Axial partial-wave expansion of a plane wave:
//   exp(i kr cos(theta)) = sum_l (2l + 1) i^l j_l(kr) P_l(cos(theta)).

#include <cavity/specfun.hpp>

#include <limits>

namespace cavity {

struct ExpansionPoint {
    double kr;
    double cos_theta;
};

struct TruncatedSum {
    int order;         ///< truncation order L
    double real_part;
    double imag_part;
    /// Bound on |sum - exp(i kr cos(theta))|: the tail estimate from
    /// |j_l(x)| <= x^l / (2l+1)!! plus a rounding allowance.
    double tail_bound;
    /// tail_bound <= the requested tolerance.
    bool converged;
};

/// Partial sum through order L. kr = 0 gives exactly 1 + 0i.
TruncatedSum expand_plane_wave(ExpansionPoint point, int L,
                               double tolerance = std::numeric_limits<double>::infinity());

/// |partial sum - exp(i kr cos(theta))| evaluated directly.
double expansion_error(ExpansionPoint point, int L);

/// Max error over a grid x grid lattice of kr in [0, kr_max] and
/// cos(theta) in [-1, 1] (endpoints included). Rows are evaluated in parallel.
double max_identity_error(double kr_max, int grid, int L);
/// Serial reference for max_identity_error().
double max_identity_error_serial(double kr_max, int grid, int L);

inline constexpr int kProfileAngles = 41;

/// Smallest L whose error is <= tolerance at every cos(theta) of a uniform
/// 41-point grid. Throws NumericError if l_max() is not enough.
int truncation_profile(double kr, double tolerance);

}  // namespace cavity
