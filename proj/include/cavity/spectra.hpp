#pragma once

// Eigenvalues of a particle in a hard-walled spherical cavity, with and
// without a hard core at the centre, in the three conventions compared by
// this library. Energies are dimensionless, in units of h^2 / (8 M R^2),
// so that E = (kR / pi)^2.

#include <cavity/error.hpp>
#include <cavity/roots.hpp>
#include <cavity/specfun.hpp>

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace cavity {

enum class Convention {
    CavityI,               ///< hard core of radius eps at the centre
    CavityIIConventional,  ///< empty sphere, textbook Bessel-zero spectrum
    CavityIIPaper,         ///< empty sphere, nodes spaced by the diameter D = 2R
};

enum class Provenance { Analytic, CrossProduct, FiniteDifference };

std::string_view to_string(Convention c);
std::string_view to_string(Provenance p);
/// Accepts "i", "ii-conv", "ii-paper".
Convention parse_convention(std::string_view text);

struct CavitySpec {
    double outer_radius = 1.0;
    double core_radius = 0.0;
    Convention convention = Convention::CavityI;

    /// Always derived; never set independently.
    double diameter() const { return 2.0 * outer_radius; }
    /// Throws DomainError on 0 <= eps < R violations or a core in Cavity-(ii).
    void validate() const;
};

struct EigenMode {
    int n;
    int l;
    double kR;
    double energy;  ///< units of h^2 / (8 M R^2)
    Provenance provenance;
};

struct SpectrumRow {
    int n;
    int l;
    double e_i;
    double e_ii_conventional;
    double e_ii_paper;
    double ratio_paper_over_conventional;
    std::optional<double> oracle_error;  ///< relative kR error of the FD oracle
};

inline constexpr std::string_view kEnergyUnits = "h^2/(8 M R^2)";

struct SpectrumReport {
    double outer_radius;
    double core_radius;
    std::string units{kEnergyUnits};
    std::vector<SpectrumRow> rows;
};

struct SweepPoint {
    double eps;
    double kR;
    double error;  ///< |kR - beta_{n,l} pi|
};

/// Hard-walled annulus a < r < R, l = 0: k = n pi / (R - a).
double annulus_k_l0(int n, double R, double a);

namespace generic {

/// Cross product j_l(ka) y_l(kR) - y_l(ka) j_l(kR), divided by the positive
/// factor |j_l(ka)| + |y_l(ka)| to keep it O(1) for tiny cores.
template <class Real>
Real annulus_cross_product(int l, Real k, Real R, Real a) {
    using std::abs;
    const Real ja = sph_bessel_j(l, k * a);
    const Real ya = sph_bessel_y(l, k * a);
    const Real jR = sph_bessel_j(l, k * R);
    const Real yR = sph_bessel_y(l, k * R);
    return (ja * yR - ya * jR) / (abs(ja) + abs(ya));
}

/// n-th root of the annulus cross product. Sign changes are located by
/// scanning k (R - a) in steps of pi/8, then refined with find_root.
template <class Real>
Real annulus_k(int n, int l, Real R, Real a, Real tol) {
    using std::isfinite;
    const Real pi = boost::math::constants::pi<Real>();
    const Real step = pi / (Real(8) * (R - a));
    auto f = [&](Real k) { return annulus_cross_product(l, k, R, a); };

    // The n-th root lies below (n + l/2 + 1) pi / (R - a).
    const int max_steps = 8 * (n + l + 4);
    Real k_lo = step;
    Real f_lo = f(k_lo);
    int found = 0;
    for (int i = 0; i < max_steps; ++i) {
        const Real k_hi = k_lo + step;
        const Real f_hi = f(k_hi);
        if (!isfinite(static_cast<double>(f_hi)))
            throw NumericError("annulus cross product is not finite at k = " +
                               std::to_string(static_cast<double>(k_hi)));
        if (f_hi == 0) {
            if (++found == n) return k_hi;
        } else if (f_lo * f_hi < 0) {
            if (++found == n)
                return find_root<Real>(f, BasicBracket<Real>{k_lo, k_hi, f_lo, f_hi}, tol);
        }
        k_lo = k_hi;
        f_lo = f_hi;
    }
    std::ostringstream msg;
    msg << "annulus root n=" << n << " l=" << l << " not bracketed: scanned k in ["
        << static_cast<double>(step) << ", " << static_cast<double>(k_lo) << "], found "
        << found;
    throw NumericError(msg.str());
}

}  // namespace generic

/// n-th eigen-wavenumber of the annulus a < r < R for any l; a > 0.
double annulus_k_general(int n, int l, double R, double a);

/// beta_{n,l}^2: the hard-core cavity in the eps -> 0 limit.
double energy_cavity_i(int n, int l, double R);
/// The textbook empty-sphere spectrum, evaluated through its own path.
double energy_cavity_ii_conventional(int n, int l, double R);
/// beta_{n,l}^2 h^2 / (8 M D^2) with D = 2R, expressed in h^2 / (8 M R^2).
double energy_cavity_ii_paper(int n, int l, double R);

/// Single mode of the given cavity. Cavity-(i) with eps > 0 solves the
/// annulus; eps = 0 uses the Bessel zeros.
EigenMode eigenmode(const CavitySpec& spec, int n, int l);

/// All modes for l = 0..l_max, n = 1..n_max, ordered by (l, n). Grid points
/// are evaluated in parallel.
std::vector<EigenMode> spectrum(const CavitySpec& spec, int n_max, int l_max);
/// Serial reference for spectrum().
std::vector<EigenMode> spectrum_serial(const CavitySpec& spec, int n_max, int l_max);

/// Side-by-side table of the three conventions. eps > 0 moves the
/// Cavity-(i) column onto the finite-core annulus. oracle_points > 0 adds
/// the relative kR error of the finite-difference solver for Cavity-(i).
SpectrumReport compare_conventions(int n_max, int l_max, double R, double eps = 0.0,
                                   int oracle_points = 0);

/// Annulus kR against beta_{n,l} pi for each core radius, computed in
/// extended precision so that shifts far below double resolution are
/// resolved. Parallel over eps; output in input order.
std::vector<SweepPoint> eps_convergence_sweep(int n, int l, double R,
                                              std::span<const double> eps_list);
std::vector<SweepPoint> eps_convergence_sweep_serial(int n, int l, double R,
                                                     std::span<const double> eps_list);

/// Dimensionless energy converted to joules for mass M [kg] and radius R [m].
double energy_joules(double dimensionless, double mass_kg, double radius_m);

}  // namespace cavity
