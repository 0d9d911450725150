#include <cavity/specfun.hpp>

#include <cstdlib>
#include <string>

namespace cavity {

namespace {

int read_l_max() {
    const char* env = std::getenv("CAVITYSPEC_LMAX");
    if (env == nullptr || *env == '\0') return kDefaultLMax;
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 1 || value > 10000) return kDefaultLMax;
    return static_cast<int>(value);
}

void check_positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError(std::string(what) + ": argument must be finite and > 0, got " +
                          std::to_string(x));
}

}  // namespace

int l_max() {
    static const int value = read_l_max();
    return value;
}

void check_order(int l) {
    if (l < 0 || l > l_max())
        throw DomainError("order l=" + std::to_string(l) + " outside [0, " +
                          std::to_string(l_max()) + "]");
}

double sph_bessel_j(int l, double x) {
    check_order(l);
    check_positive(x, "sph_bessel_j");
    return generic::sph_bessel_j(l, x);
}

double sph_bessel_y(int l, double x) {
    check_order(l);
    check_positive(x, "sph_bessel_y");
    return generic::sph_bessel_y(l, x);
}

double sph_bessel_j_derivative(int l, double x) {
    check_order(l);
    check_positive(x, "sph_bessel_j_derivative");
    if (l == 0) return -generic::sph_j1(x);
    const auto j = generic::sph_bessel_j_table(l, x);
    return j[l - 1] - (l + 1) / x * j[l];
}

double sph_bessel_y_derivative(int l, double x) {
    check_order(l);
    check_positive(x, "sph_bessel_y_derivative");
    if (l == 0) return -generic::sph_y1(x);
    const auto y = generic::sph_bessel_y_table(l, x);
    return y[l - 1] - (l + 1) / x * y[l];
}

std::vector<double> sph_bessel_j_array(int l, double x) {
    check_order(l);
    check_positive(x, "sph_bessel_j_array");
    return generic::sph_bessel_j_table(l, x);
}

std::vector<double> sph_bessel_y_array(int l, double x) {
    check_order(l);
    check_positive(x, "sph_bessel_y_array");
    return generic::sph_bessel_y_table(l, x);
}

std::vector<double> legendre_p_array(int l, double u) {
    check_order(l);
    if (!(std::abs(u) <= 1.0))
        throw DomainError("legendre_p: |u| must be <= 1, got " + std::to_string(u));
    std::vector<double> p(static_cast<std::size_t>(l) + 1);
    p[0] = 1.0;
    if (l >= 1) p[1] = u;
    for (int k = 1; k < l; ++k)
        p[k + 1] = ((2 * k + 1) * u * p[k] - k * p[k - 1]) / (k + 1);
    return p;
}

double legendre_p(int l, double u) {
    if (u == 1.0) {
        check_order(l);
        return 1.0;
    }
    return legendre_p_array(l, u).back();
}

SpecialValue evaluate(SpecialKind kind, int l, double argument) {
    double value = 0.0;
    switch (kind) {
    case SpecialKind::BesselJ: value = sph_bessel_j(l, argument); break;
    case SpecialKind::BesselY: value = sph_bessel_y(l, argument); break;
    case SpecialKind::Legendre: value = legendre_p(l, argument); break;
    }
    return {kind, l, argument, value};
}

}  // namespace cavity
