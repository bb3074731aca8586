#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "relspec/multipole.hpp"
#include "relspec/specfun.hpp"
#include "relspec/xi.hpp"

using namespace relspec;
namespace mp = relspec::multipole;

TEST_CASE("Bessel sequences match the scalar implementations and references") {
    for (double z : {0.3, 1.0, 4.0, 12.0}) {
        const auto I = mp::bessel_i_seq(10, z);
        const auto K = mp::bessel_k_seq(10, z);
        REQUIRE(I.size() == 11);
        REQUIRE(K.size() == 11);
        CHECK(I[0] == doctest::Approx(specfun::bessel_i0(z)).epsilon(1e-13));
        CHECK(I[1] == doctest::Approx(specfun::bessel_i1(z)).epsilon(1e-13));
        CHECK(K[0] == doctest::Approx(specfun::bessel_k0(z)).epsilon(1e-13));
        CHECK(K[1] == doctest::Approx(specfun::bessel_k1(z)).epsilon(1e-13));
        // Wronskian I_n K_{n+1} + I_{n+1} K_n = 1/z for every order.
        for (int n = 0; n < 10; ++n) {
            CHECK(z * (I[static_cast<std::size_t>(n)] * K[static_cast<std::size_t>(n) + 1] +
                       I[static_cast<std::size_t>(n) + 1] * K[static_cast<std::size_t>(n)]) ==
                  doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    // High-precision spot checks for higher orders.
    CHECK(mp::bessel_k_seq(3, 2.0)[3] == doctest::Approx(0.64738539094863415).epsilon(1e-13));
    CHECK(mp::bessel_k_seq(7, 0.5)[7] == doctest::Approx(5837182.0103522149).epsilon(1e-13));
    CHECK(mp::bessel_k_seq(12, 10.0)[12] ==
          doctest::Approx(0.010278998056493336).epsilon(1e-13));
}

TEST_CASE("disc mode values reproduce the Bessel closed forms") {
    const double kappa = 1.3, r = 0.8, z = kappa * r;
    const auto m = mp::circle_mode_values(kappa, r, 6);
    const auto I = mp::bessel_i_seq(8, z);
    const auto K = mp::bessel_k_seq(8, z);
    for (int n = 0; n <= 6; ++n) {
        CAPTURE(n);
        const auto i = static_cast<std::size_t>(m.L + n);
        const auto nn = static_cast<std::size_t>(n);
        const double In = I[nn], Kn = K[nn];
        const double Ip = (n == 0 ? I[1] : I[nn - 1] - (n / z) * In);
        const double Kp = (n == 0 ? -K[1] : -K[nn - 1] - (n / z) * Kn);
        CHECK(m.S[i] == doctest::Approx(r * In * Kn).epsilon(1e-13));
        CHECK(m.N[i] == doctest::Approx(kappa * kappa * r * Ip * Kp).epsilon(1e-12));
        CHECK(m.Q[i] == doctest::Approx(kappa * Ip / In).epsilon(1e-13));
        // Symmetry in the mode index.
        CHECK(m.S[i] == m.S[static_cast<std::size_t>(m.L - n)]);
    }
}

TEST_CASE("xi_discs: validation and trivial cases") {
    const std::vector<Point2> centers = {{-2, 0}, {2, 0}};
    const std::vector<double> radii = {1.0, 1.0};
    // Single disc: nothing relative to subtract.
    CHECK(mp::xi_discs(1.0, {{0, 0}}, {1.0}, BoundaryCondition::Dirichlet).value == 0.0);
    // Overlapping discs are rejected.
    CHECK_THROWS_AS(mp::xi_discs(1.0, {{0, 0}, {1, 0}}, {1.0, 1.0},
                                 BoundaryCondition::Dirichlet),
                    std::invalid_argument);
    // Transmission has no multipole oracle.
    CHECK_THROWS_AS(mp::xi_discs(1.0, centers, radii, BoundaryCondition::Transmission),
                    std::invalid_argument);
}

TEST_CASE("xi_discs converges and reports its truncation") {
    const std::vector<Point2> centers = {{-2, 0}, {2, 0}};
    const std::vector<double> radii = {1.0, 1.0};
    const auto r = mp::xi_discs(1.0, centers, radii, BoundaryCondition::Dirichlet);
    CHECK(r.L >= 24);
    CHECK(std::abs(r.tail) < 1e-12);
    CHECK(r.value < 0.0);
}

TEST_CASE("xi_discs stays finite across extreme kappa") {
    // K_{2L}(kappa * separation) overflows double at small kappa; the
    // extended-precision internals must keep the assembled value finite.
    const std::vector<Point2> centers = {{-2, 0}, {2, 0}};
    const std::vector<double> radii = {1.0, 1.0};
    for (double kappa : {1e-6, 1e-3, 0.1, 10.0, 20.0}) {
        CAPTURE(kappa);
        const auto r = mp::xi_discs(kappa, centers, radii, BoundaryCondition::Dirichlet);
        CHECK(std::isfinite(r.value));
        if (kappa >= 10.0) CHECK(std::abs(r.value) < 1e-10); // deep decay regime
    }
}

TEST_CASE("asymmetric pair: oracle matches BEM") {
    Configuration cfg;
    cfg.components.push_back(CircleCurve{{-1.5, 0.0}, 0.6});
    cfg.components.push_back(CircleCurve{{1.5, 0.3}, 1.1});
    const BoundaryMesh mesh = discretize(cfg, {64, 64});
    const std::vector<Point2> centers = {{-1.5, 0.0}, {1.5, 0.3}};
    const std::vector<double> radii = {0.6, 1.1};
    for (double kappa : {0.7, 1.4}) {
        CAPTURE(kappa);
        const double d =
            mp::xi_discs(kappa, centers, radii, BoundaryCondition::Dirichlet).value;
        const double n = mp::xi_discs(kappa, centers, radii, BoundaryCondition::Neumann).value;
        CHECK(std::abs(xi_dirichlet(mesh, Kappa(kappa)) - d) < 1e-8);
        CHECK(std::abs(xi_neumann(mesh, Kappa(kappa)) - n) < 1e-8);
    }
}

TEST_CASE("three discs: oracle matches BEM") {
    Configuration cfg;
    cfg.components.push_back(CircleCurve{{-3.0, 0.0}, 1.0});
    cfg.components.push_back(CircleCurve{{3.0, 0.0}, 1.0});
    cfg.components.push_back(CircleCurve{{0.0, 3.0}, 0.8});
    const BoundaryMesh mesh = discretize(cfg, {64, 64, 64});
    const std::vector<Point2> centers = {{-3, 0}, {3, 0}, {0, 3}};
    const std::vector<double> radii = {1.0, 1.0, 0.8};
    const double kappa = 1.0;
    const double d = mp::xi_discs(kappa, centers, radii, BoundaryCondition::Dirichlet).value;
    CHECK(std::abs(xi_dirichlet(mesh, Kappa(kappa)) - d) < 1e-8);
}
