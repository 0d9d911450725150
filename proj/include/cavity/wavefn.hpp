#pragma once

// Normalized reduced radial functions chi_l(r) = r R_l(r) for cavity modes,
// and the shell-density relation |R_l|^2 = |chi_l|^2 / (4 pi r^2).

#include <cavity/spectra.hpp>

#include <functional>

namespace cavity {

/// A normalized mode on [r_min, r_max]. `shape` is the unnormalized chi and
/// `shape_over_r` is shape / r, kept separately so R_l is finite at r = 0.
struct ChiFunction {
    int l;
    double k;
    double r_min;
    double r_max;
    double norm_constant;
    std::function<double(double)> shape;
    std::function<double(double)> shape_over_r;

    double operator()(double r) const { return norm_constant * shape(r); }
    /// R_l(r) = chi(r) / (sqrt(4 pi) r)
    double radial(double r) const;
    /// |R_l(r)|^2
    double density(double r) const;
};

inline constexpr int kQuadraturePanels = 10000;
inline constexpr int kNodeSamples = 10000;

/// Composite Simpson rule with an even number of panels.
double simpson(const std::function<double(double)>& f, double a, double b, int panels);

/// chi for the given mode:
///   core, l = 0:     sin(k (r - eps))
///   no core:         r j_l(k r)
///   core, l > 0:     r [j_l(kr) y_l(k eps) - y_l(kr) j_l(k eps)]
/// normalized to unit line integral with chi'(r_min+) > 0. Throws
/// DomainError when chi(R) does not vanish (k is not an eigenvalue).
ChiFunction build_mode_chi(const CavitySpec& spec, const EigenMode& mode);

/// max | |R|^2 4 pi r^2 - |chi|^2 | / |chi|^2 over a sample grid.
double density_relation_check(const ChiFunction& chi);

/// Interior sign changes of chi on a 10^4-point grid.
int count_nodes(const ChiFunction& chi);

/// Integral of chi_a chi_b over the common domain.
double overlap(const ChiFunction& a, const ChiFunction& b);

/// Integral of |R_l|^2 4 pi r^2 over the domain.
double shell_normalization(const ChiFunction& chi);

}  // namespace cavity
