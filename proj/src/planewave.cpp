#include <cavity/planewave.hpp>

#include <algorithm>
#include <cmath>
#include <complex>

namespace cavity {

namespace {

void check_point(ExpansionPoint p) {
    if (!(p.kr >= 0.0) || !std::isfinite(p.kr)) throw DomainError("kr must be finite and >= 0");
    if (!(std::abs(p.cos_theta) <= 1.0)) throw DomainError("cos(theta) must lie in [-1, 1]");
}

// Sum over l > L of (2l+1) x^l / (2l+1)!!, which bounds the discarded terms.
double tail_estimate(double x, int L) {
    if (x == 0.0) return 0.0;
    // u = x^l / (2l+1)!! at l = L + 1
    double log_u = 0.0;
    for (int l = 1; l <= L + 1; ++l) log_u += std::log(x / (2 * l + 1));
    double u = std::exp(log_u);
    double sum = 0.0;
    for (int l = L + 1;; ++l) {
        const double term = (2 * l + 1) * u;
        sum += term;
        const double ratio = x / (2 * l + 1);  // term_{l+1} / term_l
        if (ratio <= 0.5) {
            sum += term * ratio / (1.0 - ratio);
            break;
        }
        u *= x / (2 * l + 3);
    }
    return sum;
}

// Partial sums S_0..S_L at one point.
std::vector<std::complex<double>> partial_sums(ExpansionPoint p, int L, double* abs_terms) {
    std::vector<std::complex<double>> out(static_cast<std::size_t>(L) + 1);
    if (p.kr == 0.0) {
        std::fill(out.begin(), out.end(), std::complex<double>(1.0, 0.0));
        if (abs_terms) *abs_terms = 0.0;  // exact
        return out;
    }
    const auto j = sph_bessel_j_array(L, p.kr);
    const auto P = legendre_p_array(L, p.cos_theta);
    static constexpr std::complex<double> i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::complex<double> sum = 0.0;
    double total = 0.0;
    for (int l = 0; l <= L; ++l) {
        const double a = (2 * l + 1) * j[l] * P[l];
        sum += i_pow[l % 4] * a;
        total += std::abs(a);
        out[l] = sum;
    }
    if (abs_terms) *abs_terms = total;
    return out;
}

double row_max_error(double kr, int grid, int L) {
    double worst = 0.0;
    for (int c = 0; c < grid; ++c) {
        const double u = -1.0 + 2.0 * c / (grid - 1);
        worst = std::max(worst, expansion_error({kr, u}, L));
    }
    return worst;
}

void check_grid(double kr_max, int grid) {
    if (grid < 2) throw DomainError("grid needs >= 2 points per axis");
    if (!(kr_max >= 0.0)) throw DomainError("kr_max must be >= 0");
}

}  // namespace

TruncatedSum expand_plane_wave(ExpansionPoint point, int L, double tolerance) {
    check_point(point);
    check_order(L);
    double abs_terms = 0.0;
    const auto sums = partial_sums(point, L, &abs_terms);
    const double rounding = 8.0 * (L + 1) * std::numeric_limits<double>::epsilon() * abs_terms;
    const double bound = tail_estimate(point.kr, L) + rounding;
    return {L, sums.back().real(), sums.back().imag(), bound, bound <= tolerance};
}

double expansion_error(ExpansionPoint point, int L) {
    check_point(point);
    check_order(L);
    const auto sums = partial_sums(point, L, nullptr);
    const double phase = point.kr * point.cos_theta;
    return std::abs(sums.back() - std::complex<double>(std::cos(phase), std::sin(phase)));
}

double max_identity_error(double kr_max, int grid, int L) {
    check_grid(kr_max, grid);
    check_order(L);
    std::vector<double> rows(grid);
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < grid; ++r) rows[r] = row_max_error(kr_max * r / (grid - 1), grid, L);
    return *std::max_element(rows.begin(), rows.end());
}

double max_identity_error_serial(double kr_max, int grid, int L) {
    check_grid(kr_max, grid);
    check_order(L);
    double worst = 0.0;
    for (int r = 0; r < grid; ++r)
        worst = std::max(worst, row_max_error(kr_max * r / (grid - 1), grid, L));
    return worst;
}

int truncation_profile(double kr, double tolerance) {
    if (!(kr >= 0.0) || kr > 100.0) throw DomainError("truncation_profile needs 0 <= kr <= 100");
    if (!(tolerance > 0.0)) throw DomainError("tolerance must be > 0");
    if (kr == 0.0) return 0;
    const int cap = l_max();
    std::vector<double> worst(cap + 1, 0.0);
    for (int c = 0; c < kProfileAngles; ++c) {
        const ExpansionPoint p{kr, -1.0 + 2.0 * c / (kProfileAngles - 1)};
        const auto sums = partial_sums(p, cap, nullptr);
        const double phase = p.kr * p.cos_theta;
        const std::complex<double> exact(std::cos(phase), std::sin(phase));
        for (int L = 0; L <= cap; ++L) worst[L] = std::max(worst[L], std::abs(sums[L] - exact));
    }
    for (int L = 0; L <= cap; ++L)
        if (worst[L] <= tolerance) return L;
    throw NumericError("truncation order cap " + std::to_string(cap) +
                       " insufficient for kr=" + std::to_string(kr));
}

}  // namespace cavity
