#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "relspec/multipole.hpp"
#include "relspec/xi.hpp"
#include "test_helpers.hpp"

using namespace relspec;

namespace {

const TransmissionParams kMedia{/*kappa_plus=*/1.0, /*kappa_minus=*/0.5,
                                /*nu0=*/1.0, /*nu1=*/4.0};

BoundaryMesh pair_mesh(int n = 64) { return discretize(testing::two_discs(), {n, n}); }

} // namespace

TEST_CASE("frozen regressions: gap-2 unit disc pair at n = 64") {
    // Values pinned from a converged run; the multipole oracle agrees to
    // ~1e-13 (see the oracle test below), so drift here means a kernel bug.
    const BoundaryMesh mesh = pair_mesh();
    struct Row {
        double kappa, d, n, t;
    };
    const Row rows[] = {
        {0.5, -0.038525848695826426, -0.0059550886963393168, -0.014721407280447352},
        {1.0, -0.0044665337040328268, -0.0013479751781915184, -0.0021969868460303132},
        {2.0, -7.2851575168897398e-05, -3.5501245548630322e-05, -3.962004915081252e-05},
    };
    for (const Row& r : rows) {
        CAPTURE(r.kappa);
        CHECK(xi_dirichlet(mesh, Kappa(r.kappa)) == doctest::Approx(r.d).epsilon(1e-9));
        CHECK(xi_neumann(mesh, Kappa(r.kappa)) == doctest::Approx(r.n).epsilon(1e-9));
        CHECK(xi_transmission(mesh, Kappa(r.kappa), kMedia) ==
              doctest::Approx(r.t).epsilon(1e-9));
    }
}

TEST_CASE("xi_value dispatches to the per-condition implementations") {
    const BoundaryMesh mesh = pair_mesh(32);
    const Kappa k(0.8);
    CHECK(xi_value(BoundaryCondition::Dirichlet, mesh, k, std::nullopt) ==
          xi_dirichlet(mesh, k));
    CHECK(xi_value(BoundaryCondition::Neumann, mesh, k, std::nullopt) == xi_neumann(mesh, k));
    CHECK(xi_value(BoundaryCondition::Transmission, mesh, k, kMedia) ==
          xi_transmission(mesh, k, kMedia));
    CHECK_THROWS(xi_value(BoundaryCondition::Transmission, mesh, k, std::nullopt));
}

TEST_CASE("BEM xi matches the multipole oracle for the disc pair") {
    const BoundaryMesh mesh = pair_mesh();
    const std::vector<Point2> centers = {{-2, 0}, {2, 0}};
    const std::vector<double> radii = {1.0, 1.0};
    for (double kappa : {0.5, 1.0, 2.0}) {
        CAPTURE(kappa);
        const double d_or = multipole::xi_discs(kappa, centers, radii,
                                                BoundaryCondition::Dirichlet)
                                .value;
        const double n_or =
            multipole::xi_discs(kappa, centers, radii, BoundaryCondition::Neumann).value;
        CHECK(std::abs(xi_dirichlet(mesh, Kappa(kappa)) - d_or) < 1e-10);
        CHECK(std::abs(xi_neumann(mesh, Kappa(kappa)) - n_or) < 1e-10);
    }
}

TEST_CASE("xi_derivative agrees with central differences, all conditions") {
    const BoundaryMesh mesh = pair_mesh();
    // h balances truncation against log-determinant round-off in the quotient.
    const double kappa = 1.0, h = 1e-4;
    for (BoundaryCondition bc :
         {BoundaryCondition::Dirichlet, BoundaryCondition::Neumann,
          BoundaryCondition::Transmission}) {
        const std::optional<TransmissionParams> p =
            bc == BoundaryCondition::Transmission ? std::optional(kMedia) : std::nullopt;
        const double der = xi_derivative(bc, mesh, Kappa(kappa), p);
        const double fd = (xi_value(bc, mesh, Kappa(kappa + h), p) -
                           xi_value(bc, mesh, Kappa(kappa - h), p)) /
                          (2.0 * h);
        CHECK(der == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("transparent media give vanishing transmission xi") {
    const BoundaryMesh mesh = pair_mesh();
    TransmissionParams one; // identical media, unit trace jumps
    CHECK(std::abs(xi_transmission(mesh, Kappa(1.0), one)) < 1e-8);
}

TEST_CASE("xi decays exponentially in kappa") {
    const BoundaryMesh mesh = pair_mesh();
    // |Xi| ~ e^{-2 delta kappa} for the round trip across the gap delta = 2.
    const double x1 = std::abs(xi_dirichlet(mesh, Kappa(2.0)));
    const double x2 = std::abs(xi_dirichlet(mesh, Kappa(3.0)));
    const double slope = std::log(x2 / x1);
    CHECK(slope < -1.8); // at least the analytic e^{-0.9 delta kappa} rate
}

TEST_CASE("xi_curve_csv prints 17 significant digits") {
    XiCurve curve;
    curve.samples.push_back({0.5, -0.038525848695826426});
    curve.samples.push_back({1.0, -1.0 / 3.0});
    const std::string csv = xi_curve_csv(curve);
    CHECK(csv.find("kappa,xi") == 0);
    CHECK(csv.find("-0.038525848695826426") != std::string::npos);
    CHECK(csv.find("-0.33333333333333331") != std::string::npos);
}
