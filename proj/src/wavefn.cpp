#include <cavity/wavefn.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cavity {

namespace {

constexpr double kBoundaryResidual = 1e-8;
const double kSqrt4Pi = std::sqrt(4.0 * std::numbers::pi);

// Sample r_min < r < r_max excluding the endpoints.
double interior_sample(const ChiFunction& chi, int i, int samples) {
    return chi.r_min + (chi.r_max - chi.r_min) * (i + 1) / (samples + 1);
}

}  // namespace

double ChiFunction::radial(double r) const {
    return norm_constant * shape_over_r(r) / kSqrt4Pi;
}

double ChiFunction::density(double r) const {
    const double v = radial(r);
    return v * v;
}

double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    if (panels < 2 || panels % 2 != 0) throw DomainError("simpson needs an even panel count");
    const double h = (b - a) / panels;
    double odd = 0.0, even = 0.0;
    for (int i = 1; i < panels; ++i) {
        const double v = f(a + i * h);
        (i % 2 == 1 ? odd : even) += v;
    }
    return h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

ChiFunction build_mode_chi(const CavitySpec& spec, const EigenMode& mode) {
    spec.validate();
    const double R = spec.outer_radius;
    const double eps = spec.core_radius;
    const int l = mode.l;
    const double k = mode.kR / R;
    if (!(k > 0.0)) throw DomainError("mode wavenumber must be > 0");

    ChiFunction chi{l, k, eps, R, 1.0, {}, {}};
    if (eps > 0.0 && l == 0) {
        chi.shape = [k, eps](double r) { return r <= eps ? 0.0 : std::sin(k * (r - eps)); };
        chi.shape_over_r = [k, eps](double r) {
            return r <= eps ? 0.0 : std::sin(k * (r - eps)) / r;
        };
    } else if (eps == 0.0) {
        chi.shape = [k, l](double r) { return r <= 0.0 ? 0.0 : r * sph_bessel_j(l, k * r); };
        chi.shape_over_r = [k, l](double r) {
            if (r <= 0.0) return l == 0 ? 1.0 : 0.0;
            return sph_bessel_j(l, k * r);
        };
    } else {
        const double j_core = sph_bessel_j(l, k * eps);
        const double y_core = sph_bessel_y(l, k * eps);
        // Scale the cross combination to O(1) amplitude before normalizing.
        const double s = 1.0 / (std::abs(j_core) + std::abs(y_core));
        auto over_r = [k, l, eps, j_core, y_core, s](double r) {
            if (r <= eps) return 0.0;
            return s * (sph_bessel_j(l, k * r) * y_core - sph_bessel_y(l, k * r) * j_core);
        };
        chi.shape_over_r = over_r;
        chi.shape = [over_r](double r) { return r * over_r(r); };
    }

    const auto square = [&chi](double r) {
        const double v = chi.shape(r);
        return v * v;
    };
    const double norm2 = simpson(square, eps, R, kQuadraturePanels);
    const double norm2_fine = simpson(square, eps, R, 2 * kQuadraturePanels);
    if (!(norm2 > 0.0)) throw NumericError("mode has zero norm");
    if (std::abs(norm2_fine - norm2) > 1e-10 * norm2)
        throw NumericError("normalization quadrature not converged");

    double peak = 0.0;
    int first_significant = -1;
    std::vector<double> samples(kNodeSamples);
    for (int i = 0; i < kNodeSamples; ++i) samples[i] = chi.shape(interior_sample(chi, i, kNodeSamples));
    for (double v : samples) peak = std::max(peak, std::abs(v));
    for (int i = 0; i < kNodeSamples && first_significant < 0; ++i)
        if (std::abs(samples[i]) > 1e-6 * peak) first_significant = i;

    const double residual = std::abs(chi.shape(R)) / peak;
    if (residual > kBoundaryResidual)
        throw DomainError("k is not an eigenvalue of this cavity: |chi(R)|/max|chi| = " +
                          std::to_string(residual));

    if (first_significant >= 0 && samples[first_significant] < 0.0) {
        chi.shape = [f = std::move(chi.shape)](double r) { return -f(r); };
        chi.shape_over_r = [f = std::move(chi.shape_over_r)](double r) { return -f(r); };
    }
    chi.norm_constant = 1.0 / std::sqrt(norm2);
    return chi;
}

double density_relation_check(const ChiFunction& chi) {
    constexpr double pi = std::numbers::pi;
    double worst = 0.0;
    for (int i = 0; i < kNodeSamples; ++i) {
        const double r = interior_sample(chi, i, kNodeSamples);
        const double c = chi(r);
        const double c2 = c * c;
        if (c2 < 1e-24) continue;
        const double shell = chi.density(r) * 4.0 * pi * r * r;
        worst = std::max(worst, std::abs(shell - c2) / c2);
    }
    return worst;
}

int count_nodes(const ChiFunction& chi) {
    std::vector<double> values(kNodeSamples);
    for (int i = 0; i < kNodeSamples; ++i) values[i] = chi(interior_sample(chi, i, kNodeSamples));
    int changes = 0;
    int last_sign = 0;
    for (double v : values) {
        if (std::abs(v) < 1e-12) continue;
        const int sign = v > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) ++changes;
        last_sign = sign;
    }
    return changes;
}

double overlap(const ChiFunction& a, const ChiFunction& b) {
    const double lo = std::max(a.r_min, b.r_min);
    const double hi = std::min(a.r_max, b.r_max);
    return simpson([&](double r) { return a(r) * b(r); }, lo, hi, kQuadraturePanels);
}

double shell_normalization(const ChiFunction& chi) {
    constexpr double pi = std::numbers::pi;
    return simpson([&](double r) { return chi.density(r) * 4.0 * pi * r * r; }, chi.r_min,
                   chi.r_max, kQuadraturePanels);
}

}  // namespace cavity
