#include <cavity/radial_oracle.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace cavity {

namespace {

struct Bounds {
    double lo;
    double hi;
};

Bounds gershgorin(const TridiagonalOperator& op) {
    const int n = op.size();
    double lo = std::numeric_limits<double>::max();
    double hi = std::numeric_limits<double>::lowest();
    for (int i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(op.off_diagonal[i - 1]);
        if (i + 1 < n) radius += std::abs(op.off_diagonal[i]);
        lo = std::min(lo, op.diagonal[i] - radius);
        hi = std::max(hi, op.diagonal[i] + radius);
    }
    return {lo, hi};
}

double pivot_floor(const TridiagonalOperator& op) {
    double b2 = 1.0;
    for (double b : op.off_diagonal) b2 = std::max(b2, b * b);
    return std::numeric_limits<double>::min() * b2;
}

// k-th (0-based) eigenvalue: bisect until the interval stops shrinking.
double bisect_eigenvalue(const TridiagonalOperator& op, int k, Bounds bounds) {
    double lo = bounds.lo;
    double hi = bounds.hi;
    constexpr double rel_tol = 4.0 * std::numeric_limits<double>::epsilon();
    for (int iter = 0; iter < 400; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (hi - lo <= rel_tol * std::max(std::abs(lo), std::abs(hi))) break;
        if (sturm_count(op, mid) > k)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

void check_count(const TridiagonalOperator& op, int count) {
    if (count < 0 || count > op.size())
        throw DomainError("eigenvalue count " + std::to_string(count) +
                          " exceeds matrix dimension " + std::to_string(op.size()));
}

}  // namespace

void RadialGrid::validate() const {
    if (points < kMinGridPoints)
        throw DomainError("grid too coarse: " + std::to_string(points) + " points, need >= " +
                          std::to_string(kMinGridPoints));
    if (!(r_min >= 0.0) || !(r_max > r_min))
        throw DomainError("grid needs 0 <= r_min < r_max");
}

TridiagonalOperator build_operator(int l, const RadialGrid& grid) {
    check_order(l);
    grid.validate();
    const double h = grid.spacing();
    const double inv_h2 = 1.0 / (h * h);
    const double centrifugal = static_cast<double>(l) * (l + 1);
    TridiagonalOperator op;
    op.diagonal.resize(grid.points);
    op.off_diagonal.assign(grid.points - 1, -inv_h2);
    for (int i = 0; i < grid.points; ++i) {
        const double r = grid.node(i);
        op.diagonal[i] = 2.0 * inv_h2 + centrifugal / (r * r);
    }
    return op;
}

int sturm_count(const TridiagonalOperator& op, double lambda) {
    const double floor = pivot_floor(op);
    int count = 0;
    double d = op.diagonal[0] - lambda;
    for (int i = 0;; ++i) {
        if (std::abs(d) < floor) d = -floor;
        if (d < 0.0) ++count;
        if (i + 1 == op.size()) break;
        const double b = op.off_diagonal[i];
        d = op.diagonal[i + 1] - lambda - b * b / d;
    }
    return count;
}

std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op, int count) {
    check_count(op, count);
    const Bounds bounds = gershgorin(op);
    std::vector<double> out(count);
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < count; ++k) out[k] = bisect_eigenvalue(op, k, bounds);
    return out;
}

std::vector<double> lowest_eigenvalues_serial(const TridiagonalOperator& op, int count) {
    check_count(op, count);
    const Bounds bounds = gershgorin(op);
    std::vector<double> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) out.push_back(bisect_eigenvalue(op, k, bounds));
    return out;
}

std::vector<double> eigenvector(const TridiagonalOperator& op, double lambda) {
    const int n = op.size();
    // Shift just off the eigenvalue so the factorization stays nonsingular.
    const double shift = lambda - 1e-10 * std::max(1.0, std::abs(lambda));
    const double floor = pivot_floor(op);

    // LDL^T of (T - shift I), reused across iterations.
    std::vector<double> d(n), m(n > 1 ? n - 1 : 0);
    d[0] = op.diagonal[0] - shift;
    for (int i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) < floor) d[i] = -floor;
        m[i] = op.off_diagonal[i] / d[i];
        d[i + 1] = op.diagonal[i + 1] - shift - m[i] * op.off_diagonal[i];
    }
    if (std::abs(d[n - 1]) < floor) d[n - 1] = -floor;

    std::vector<double> x(n, 1.0);
    for (int iter = 0; iter < 3; ++iter) {
        for (int i = 1; i < n; ++i) x[i] -= m[i - 1] * x[i - 1];
        for (int i = 0; i < n; ++i) x[i] /= d[i];
        for (int i = n - 2; i >= 0; --i) x[i] -= m[i] * x[i + 1];
        double norm = 0.0;
        for (double v : x) norm += v * v;
        norm = std::sqrt(norm);
        for (double& v : x) v /= norm;
    }
    // Deterministic sign: first significant component positive.
    for (double v : x) {
        if (std::abs(v) > 1e-8) {
            if (v < 0.0)
                for (double& w : x) w = -w;
            break;
        }
    }
    return x;
}

int count_sign_changes(std::span<const double> values, double floor) {
    int changes = 0;
    int last_sign = 0;
    for (double v : values) {
        if (std::abs(v) < floor) continue;
        const int sign = v > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) ++changes;
        last_sign = sign;
    }
    return changes;
}

std::vector<EigenMode> oracle_spectrum(const CavitySpec& spec, int l, int count, int points,
                                       bool richardson) {
    spec.validate();
    if (spec.convention == Convention::CavityIIPaper)
        throw DomainError("the finite-difference oracle has no boundary-value problem for the "
                          "diameter-spaced Cavity-(ii) spectrum");
    if (count < 1) throw DomainError("oracle count must be >= 1");
    const double R = spec.outer_radius;
    const RadialGrid coarse{spec.core_radius, R, points};
    const auto lambda = lowest_eigenvalues(build_operator(l, coarse), count);

    std::vector<double> extrapolated = lambda;
    if (richardson) {
        const RadialGrid fine{spec.core_radius, R, 2 * points + 1};
        const auto lambda_fine = lowest_eigenvalues(build_operator(l, fine), count);
        for (int i = 0; i < count; ++i)
            extrapolated[i] = (4.0 * lambda_fine[i] - lambda[i]) / 3.0;
    }

    constexpr double pi = std::numbers::pi;
    std::vector<EigenMode> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double kR = R * std::sqrt(extrapolated[i]);
        out.push_back({i + 1, l, kR, (kR / pi) * (kR / pi), Provenance::FiniteDifference});
    }
    return out;
}

double convergence_slope(std::span<const double> spacing, std::span<const double> error) {
    if (spacing.size() != error.size() || spacing.size() < 2)
        throw DomainError("convergence_slope needs >= 2 matching samples");
    const double n = static_cast<double>(spacing.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < spacing.size(); ++i) {
        const double x = std::log(spacing[i]);
        const double y = std::log(error[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace cavity
