#include <cavity/radial_oracle.hpp>
#include <cavity/spectra.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <numbers>

namespace cavity {

namespace {

using Quad = boost::multiprecision::cpp_bin_float_quad;

constexpr double kPi = std::numbers::pi;

void check_n(int n) {
    if (n < 1) throw DomainError("n must be >= 1, got " + std::to_string(n));
}

void check_radius(double R) {
    if (!(R > 0.0) || !std::isfinite(R))
        throw DomainError("outer radius R must be finite and > 0");
}

void check_core(double R, double a) {
    check_radius(R);
    if (!(a >= 0.0) || !(a < R))
        throw DomainError("core radius must satisfy 0 <= a < R, got a=" + std::to_string(a) +
                          " R=" + std::to_string(R));
}

SweepPoint sweep_point(int n, int l, double R, double eps, const Quad& target) {
    if (!(eps > 0.0) || !(eps < R))
        throw DomainError("sweep eps must lie in (0, R), got " + std::to_string(eps));
    const Quad tol = Quad(R) * Quad(1e-30);
    const Quad k = generic::annulus_k<Quad>(n, l, Quad(R), Quad(eps), tol);
    const Quad kR = k * Quad(R);
    return {eps, static_cast<double>(kR), static_cast<double>(abs(kR - target))};
}

Quad quad_zero(int n, int l) {
    return generic::bessel_zeros<Quad>(l, n, Quad(1e-30)).at(n - 1);
}

}  // namespace

std::string_view to_string(Convention c) {
    switch (c) {
    case Convention::CavityI: return "i";
    case Convention::CavityIIConventional: return "ii-conv";
    case Convention::CavityIIPaper: return "ii-paper";
    }
    return "?";
}

std::string_view to_string(Provenance p) {
    switch (p) {
    case Provenance::Analytic: return "analytic";
    case Provenance::CrossProduct: return "cross-product";
    case Provenance::FiniteDifference: return "finite-difference";
    }
    return "?";
}

Convention parse_convention(std::string_view text) {
    if (text == "i") return Convention::CavityI;
    if (text == "ii-conv") return Convention::CavityIIConventional;
    if (text == "ii-paper") return Convention::CavityIIPaper;
    throw DomainError("unknown convention '" + std::string(text) + "'");
}

void CavitySpec::validate() const {
    check_core(outer_radius, core_radius);
    if (convention != Convention::CavityI && core_radius != 0.0)
        throw DomainError("Cavity-(ii) conventions require core radius 0");
}

double annulus_k_l0(int n, double R, double a) {
    check_n(n);
    check_core(R, a);
    return n * kPi / (R - a);
}

double annulus_k_general(int n, int l, double R, double a) {
    check_n(n);
    check_order(l);
    check_core(R, a);
    if (a == 0.0)
        throw DomainError("annulus_k_general needs a > 0; use the Bessel zeros for a = 0");
    return generic::annulus_k<double>(n, l, R, a, kDefaultRootTol / R);
}

double energy_cavity_i(int n, int l, double R) {
    check_n(n);
    check_radius(R);
    const double beta = bessel_zero(n, l).beta;
    return beta * beta;
}

double energy_cavity_ii_conventional(int n, int l, double R) {
    check_n(n);
    check_radius(R);
    // k R = x_{n,l}, E = (kR / pi)^2
    const double kR = bessel_zero(n, l).x;
    return (kR / kPi) * (kR / kPi);
}

double energy_cavity_ii_paper(int n, int l, double R) {
    check_n(n);
    check_radius(R);
    const double beta = bessel_zero(n, l).beta;
    const double D = 2.0 * R;
    // beta^2 h^2 / (8 M D^2) in units of h^2 / (8 M R^2)
    return beta * beta * (R / D) * (R / D);
}

EigenMode eigenmode(const CavitySpec& spec, int n, int l) {
    spec.validate();
    check_n(n);
    check_order(l);
    const double R = spec.outer_radius;
    const double eps = spec.core_radius;
    double kR = 0.0;
    Provenance provenance = Provenance::Analytic;
    switch (spec.convention) {
    case Convention::CavityI:
        if (eps == 0.0) {
            kR = bessel_zero(n, l).x;
        } else if (l == 0) {
            kR = annulus_k_l0(n, R, eps) * R;
        } else {
            kR = annulus_k_general(n, l, R, eps) * R;
            provenance = Provenance::CrossProduct;
        }
        break;
    case Convention::CavityIIConventional:
        kR = bessel_zero(n, l).x;
        break;
    case Convention::CavityIIPaper:
        // k D = beta pi
        kR = bessel_zero(n, l).x * R / spec.diameter();
        break;
    }
    const double e = (kR / kPi) * (kR / kPi);
    return {n, l, kR, e, provenance};
}

std::vector<EigenMode> spectrum(const CavitySpec& spec, int n_max, int l_max) {
    spec.validate();
    if (n_max < 1 || l_max < 0) throw DomainError("spectrum needs n_max >= 1, l_max >= 0");
    check_order(l_max);
    const int total = n_max * (l_max + 1);
    std::vector<EigenMode> out(total);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < total; ++i) {
        try {
            out[i] = eigenmode(spec, i % n_max + 1, i / n_max);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<EigenMode> spectrum_serial(const CavitySpec& spec, int n_max, int l_max) {
    spec.validate();
    if (n_max < 1 || l_max < 0) throw DomainError("spectrum needs n_max >= 1, l_max >= 0");
    check_order(l_max);
    std::vector<EigenMode> out;
    out.reserve(n_max * (l_max + 1));
    for (int l = 0; l <= l_max; ++l)
        for (int n = 1; n <= n_max; ++n) out.push_back(eigenmode(spec, n, l));
    return out;
}

SpectrumReport compare_conventions(int n_max, int l_max, double R, double eps,
                                   int oracle_points) {
    if (n_max < 1 || l_max < 0) throw DomainError("report needs n_max >= 1, l_max >= 0");
    check_core(R, eps);
    const CavitySpec cavity_i{R, eps, Convention::CavityI};
    const auto modes_i = spectrum(cavity_i, n_max, l_max);

    SpectrumReport report{R, eps, std::string(kEnergyUnits), {}};
    report.rows.reserve(modes_i.size());
    for (const auto& mode : modes_i) {
        SpectrumRow row{};
        row.n = mode.n;
        row.l = mode.l;
        row.e_i = mode.energy;
        row.e_ii_conventional = energy_cavity_ii_conventional(mode.n, mode.l, R);
        row.e_ii_paper = energy_cavity_ii_paper(mode.n, mode.l, R);
        row.ratio_paper_over_conventional = row.e_ii_paper / row.e_ii_conventional;
        report.rows.push_back(row);
    }

    if (oracle_points > 0) {
        for (int l = 0; l <= l_max; ++l) {
            const auto fd = oracle_spectrum(cavity_i, l, n_max, oracle_points, true);
            for (int n = 1; n <= n_max; ++n) {
                auto& row = report.rows[l * n_max + (n - 1)];
                const double exact = modes_i[l * n_max + (n - 1)].kR;
                row.oracle_error = std::abs(fd[n - 1].kR - exact) / exact;
            }
        }
    }
    return report;
}

std::vector<SweepPoint> eps_convergence_sweep(int n, int l, double R,
                                              std::span<const double> eps_list) {
    check_n(n);
    check_order(l);
    check_radius(R);
    const Quad target = quad_zero(n, l);
    const int count = static_cast<int>(eps_list.size());
    std::vector<SweepPoint> out(count);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) {
        try {
            out[i] = sweep_point(n, l, R, eps_list[i], target);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<SweepPoint> eps_convergence_sweep_serial(int n, int l, double R,
                                                     std::span<const double> eps_list) {
    check_n(n);
    check_order(l);
    check_radius(R);
    const Quad target = quad_zero(n, l);
    std::vector<SweepPoint> out;
    out.reserve(eps_list.size());
    for (double eps : eps_list) out.push_back(sweep_point(n, l, R, eps, target));
    return out;
}

double energy_joules(double dimensionless, double mass_kg, double radius_m) {
    if (!(mass_kg > 0.0) || !(radius_m > 0.0))
        throw DomainError("mass and radius must be > 0 for SI conversion");
    constexpr double planck = 6.62607015e-34;  // J s, exact in SI
    return dimensionless * planck * planck / (8.0 * mass_kg * radius_m * radius_m);
}

}  // namespace cavity
