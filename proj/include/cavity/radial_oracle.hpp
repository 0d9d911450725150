#pragma once

// Finite-difference eigensolver for the reduced radial equation
//   -chi'' + l(l+1)/r^2 chi = k^2 chi,  chi(r_min) = chi(r_max) = 0,
// with units 2M/hbar^2 = 1 so the eigenvalue is k^2. Shares no code with
// the special-function or root-finding paths it validates.

#include <cavity/spectra.hpp>

#include <span>
#include <vector>

namespace cavity {

/// Uniform grid of interior nodes; the Dirichlet endpoints are excluded.
struct RadialGrid {
    double r_min;
    double r_max;
    int points;

    double spacing() const { return (r_max - r_min) / (points + 1); }
    double node(int i) const { return r_min + (i + 1) * spacing(); }
    void validate() const;
};

inline constexpr int kMinGridPoints = 16;

/// Symmetric tridiagonal matrix; off_diagonal[i] couples rows i and i+1.
struct TridiagonalOperator {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;

    int size() const { return static_cast<int>(diagonal.size()); }
};

TridiagonalOperator build_operator(int l, const RadialGrid& grid);

/// Number of eigenvalues strictly below lambda (Sturm sequence count).
int sturm_count(const TridiagonalOperator& op, double lambda);

/// The `count` smallest eigenvalues in increasing order, by Sturm bisection.
/// Each eigenvalue is bisected independently, in parallel.
std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op, int count);
/// Serial reference for lowest_eigenvalues().
std::vector<double> lowest_eigenvalues_serial(const TridiagonalOperator& op, int count);

/// Unit eigenvector for an eigenvalue of op (inverse iteration).
std::vector<double> eigenvector(const TridiagonalOperator& op, double lambda);

/// Strict sign changes in a sampled function, ignoring |v| < floor.
int count_sign_changes(std::span<const double> values, double floor = 1e-12);

/// Modes of the cavity on [eps, R] with provenance FiniteDifference. With
/// richardson, eigenvalues from grids h and h/2 are combined as
/// (4 lambda_{h/2} - lambda_h) / 3; the fine grid has 2*points + 1 nodes.
std::vector<EigenMode> oracle_spectrum(const CavitySpec& spec, int l, int count, int points,
                                       bool richardson);

/// Least-squares slope of log(error) against log(h).
double convergence_slope(std::span<const double> spacing, std::span<const double> error);

}  // namespace cavity
