#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cavity/wavefn.hpp>

#include <cmath>
#include <numbers>

using namespace cavity;

namespace {

constexpr double pi = std::numbers::pi;

ChiFunction mode_chi(double eps, int l, int n, double R = 1.0) {
    const CavitySpec spec{R, eps, Convention::CavityI};
    return build_mode_chi(spec, eigenmode(spec, n, l));
}

double max_abs(const ChiFunction& chi) {
    double m = 0.0;
    for (int i = 0; i <= 2000; ++i)
        m = std::max(m, std::abs(chi(chi.r_min + (chi.r_max - chi.r_min) * i / 2000.0)));
    return m;
}

}  // namespace

TEST_CASE("simpson integrates cubics exactly") {
    CHECK(simpson([](double x) { return x * x * x - 2 * x; }, 0.0, 2.0, 2) == doctest::Approx(0.0));
    CHECK(simpson([](double x) { return std::sin(x); }, 0.0, pi, 1000) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(simpson([](double) { return 1.0; }, 0.0, 1.0, 3), DomainError);
}

TEST_CASE("l = 0 modes of the empty cavity") {
    const auto chi = mode_chi(0.0, 0, 1);
    CHECK(chi(0.5) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
    for (double r : {0.1, 0.37, 0.8}) CHECK(chi(r) == doctest::Approx(std::sqrt(2.0) * std::sin(pi * r)).epsilon(1e-8));
    CHECK(std::abs(mode_chi(0.0, 0, 2)(0.5)) < 1e-12);
    // R_l(0) is finite for l = 0
    CHECK(chi.radial(0.0) == doctest::Approx(std::sqrt(2.0) * pi / std::sqrt(4 * pi)).epsilon(1e-8));
}

TEST_CASE("l = 0 mode with a core: antinode at the annulus midpoint") {
    const auto chi = mode_chi(0.2, 0, 1);
    const double N = std::sqrt(2.0 / 0.8);
    CHECK(chi.norm_constant == doctest::Approx(N).epsilon(1e-8));
    CHECK(chi(0.6) == doctest::Approx(N).epsilon(1e-8));
    CHECK(chi(0.1) == 0.0);
    CHECK(chi.radial(0.15) == 0.0);
}

TEST_CASE("boundary residuals, sign convention and normalization") {
    for (double eps : {0.0, 0.1, 0.3})
        for (int l = 0; l <= 3; ++l)
            for (int n = 1; n <= 6; ++n) {
                CAPTURE(eps);
                CAPTURE(l);
                CAPTURE(n);
                const auto chi = mode_chi(eps, l, n);
                const double peak = max_abs(chi);
                CHECK(std::abs(chi(chi.r_min)) <= 1e-10 * peak);
                CHECK(std::abs(chi(chi.r_max)) <= 1e-10 * peak);
                CHECK(chi.norm_constant > 0.0);
                CHECK(chi(chi.r_min + 1e-3 * (chi.r_max - chi.r_min)) > 0.0);
                const double norm = simpson([&](double r) { return chi(r) * chi(r); }, chi.r_min,
                                            chi.r_max, kQuadraturePanels);
                CHECK(std::abs(norm - 1.0) <= 1e-8);
                CHECK(std::abs(shell_normalization(chi) - 1.0) <= 1e-8);
            }
}

TEST_CASE("normalization is independent of R") {
    const auto chi = mode_chi(0.5, 2, 2, 2.5);
    CHECK(std::abs(shell_normalization(chi) - 1.0) <= 1e-8);
    CHECK(chi.k * 2.5 == doctest::Approx(eigenmode({2.5, 0.5, Convention::CavityI}, 2, 2).kR));
}

TEST_CASE("shell-density identity") {
    for (double eps : {0.0, 0.2})
        for (int l = 0; l <= 3; ++l) CHECK(density_relation_check(mode_chi(eps, l, 2)) <= 1e-12);

    // scale-free
    auto doubled = mode_chi(0.0, 1, 1);
    doubled.norm_constant *= 2.0;
    CHECK(density_relation_check(doubled) <= 1e-12);
}

TEST_CASE("orthogonality at fixed l") {
    for (double eps : {0.0, 0.25})
        for (int l = 0; l <= 3; ++l)
            for (int m = 1; m <= 4; ++m)
                for (int n = m + 1; n <= 4; ++n) {
                    CAPTURE(eps);
                    CAPTURE(l);
                    CHECK(std::abs(overlap(mode_chi(eps, l, m), mode_chi(eps, l, n))) <= 1e-8);
                }
}

TEST_CASE("node counts") {
    CHECK(count_nodes(mode_chi(0.0, 0, 1)) == 0);
    CHECK(count_nodes(mode_chi(0.0, 0, 3)) == 2);
    const auto chi = mode_chi(0.0, 1, 2);
    CHECK(chi.k == doctest::Approx(7.72525184).epsilon(1e-9));
    CHECK(count_nodes(chi) == 1);
    for (double eps : {0.0, 0.1})
        for (int l = 0; l <= 3; ++l)
            for (int n = 1; n <= 6; ++n) CHECK(count_nodes(mode_chi(eps, l, n)) == n - 1);
}

TEST_CASE("non-eigen wavenumbers are rejected") {
    const CavitySpec spec{1.0, 0.0, Convention::CavityI};
    EigenMode wrong{1, 0, 3.0, 0.0, Provenance::Analytic};
    CHECK_THROWS_AS(build_mode_chi(spec, wrong), DomainError);
    // the diameter-spaced spectrum is not an eigenvalue of the radial problem
    const CavitySpec paper{1.0, 0.0, Convention::CavityIIPaper};
    CHECK_THROWS_AS(build_mode_chi(paper, eigenmode(paper, 1, 0)), DomainError);
}
