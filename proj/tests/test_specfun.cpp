#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "relspec/specfun.hpp"

using namespace relspec;
namespace sf = relspec::specfun;

namespace {
// Reference values computed with 30-digit arbitrary-precision arithmetic.
struct Ref {
    double x, i0, i1, k0, k1;
};
const Ref kRefs[] = {
    {1e-3, 1.0000002500000156, 5.0000006250000260e-4, 7.0236888005623813, 999.99623815608557},
    {0.1, 1.0025015629340956, 5.0062526047092692e-2, 2.4270690247020166, 9.8538447808706061},
    {1.0, 1.2660658777520083, 5.6515910399248503e-1, 4.2102443824070833e-1, 6.0190723019723457e-1},
    {2.5, 3.2898391440501230, 2.5167162452886984, 6.2347553200366186e-2, 7.3890816347747064e-2},
    {10.0, 2.8157166284662545e3, 2.6709883037012547e3, 1.7780062316167652e-5, 1.8648773453825585e-5},
    {50.0, 2.9325537838493363e20, 2.9030785901035568e20, 3.4101677497894955e-23, 3.4441022267175556e-23},
};
} // namespace

TEST_CASE("modified Bessel functions match high-precision references") {
    for (const Ref& r : kRefs) {
        CAPTURE(r.x);
        CHECK(sf::bessel_i0(r.x) == doctest::Approx(r.i0).epsilon(1e-14));
        CHECK(sf::bessel_i1(r.x) == doctest::Approx(r.i1).epsilon(1e-14));
        CHECK(sf::bessel_k0(r.x) == doctest::Approx(r.k0).epsilon(1e-14));
        CHECK(sf::bessel_k1(r.x) == doctest::Approx(r.k1).epsilon(1e-14));
    }
}

TEST_CASE("exponentially scaled variants stay finite at large argument") {
    // e^{-x} I_nu(x), e^{x} K_nu(x) at x = 200 and 700 (unscaled overflow).
    CHECK(sf::bessel_i0e(200.0) == doctest::Approx(2.8227159949111916e-2).epsilon(1e-14));
    CHECK(sf::bessel_i1e(200.0) == doctest::Approx(2.8156503394832918e-2).epsilon(1e-14));
    CHECK(sf::bessel_k0e(200.0) == doctest::Approx(8.8567458339296658e-2).epsilon(1e-14));
    CHECK(sf::bessel_k1e(200.0) == doctest::Approx(8.8788601585003680e-2).epsilon(1e-14));
    CHECK(sf::bessel_i0e(700.0) == doctest::Approx(1.5081295651531358e-2).epsilon(1e-14));
    CHECK(sf::bessel_i1e(700.0) == doctest::Approx(1.5070519444716847e-2).epsilon(1e-14));
    CHECK(sf::bessel_k0e(700.0) == doctest::Approx(4.7362369454613572e-2).epsilon(1e-14));
    CHECK(sf::bessel_k1e(700.0) == doctest::Approx(4.7396187653494544e-2).epsilon(1e-14));
}

TEST_CASE("scaled and unscaled variants are consistent in the overlap") {
    for (double x : {0.5, 2.0, 8.0, 30.0}) {
        CHECK(sf::bessel_k0e(x) == doctest::Approx(sf::bessel_k0(x) * std::exp(x)).epsilon(1e-13));
        CHECK(sf::bessel_k1e(x) == doctest::Approx(sf::bessel_k1(x) * std::exp(x)).epsilon(1e-13));
        CHECK(sf::bessel_i0e(x) == doctest::Approx(sf::bessel_i0(x) * std::exp(-x)).epsilon(1e-13));
        CHECK(sf::bessel_i1e(x) == doctest::Approx(sf::bessel_i1(x) * std::exp(-x)).epsilon(1e-13));
    }
}

TEST_CASE("Wronskian I0(x)K1(x) + I1(x)K0(x) = 1/x") {
    for (double x : {1e-3, 0.1, 0.7, 1.9, 2.1, 5.0, 20.0, 80.0}) {
        const double w = sf::bessel_i0(x) * sf::bessel_k1(x) + sf::bessel_i1(x) * sf::bessel_k0(x);
        CHECK(w * x == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("regular parts reproduce the K0/K1 log splits on [0, 2]") {
    for (double x : {1e-6, 1e-3, 0.05, 0.4, 1.0, 1.7, 2.0}) {
        CAPTURE(x);
        const double k0 = -std::log(0.5 * x) * sf::bessel_i0(x) + sf::bessel_k0_reg(x);
        const double k1 =
            1.0 / x + std::log(0.5 * x) * sf::bessel_i1(x) + x * sf::bessel_k1_reg(x);
        CHECK(k0 == doctest::Approx(sf::bessel_k0(x)).epsilon(1e-13));
        CHECK(k1 == doctest::Approx(sf::bessel_k1(x)).epsilon(1e-13));
    }
}

TEST_CASE("Green's function values on the imaginary axis") {
    const Kappa k(1.3);
    const Point2 x{0.2, -0.4}, y{1.1, 0.5};
    const double r = std::hypot(x.x - y.x, x.y - y.y);

    // d = 2: (1/2pi) K0(kappa r).
    CHECK(green(2, k, x, y).value ==
          doctest::Approx(sf::bessel_k0(k.value * r) / (2.0 * M_PI)).epsilon(1e-14));
    // d = 1: e^{-kappa|x-y|}/(2 kappa) using the first coordinate.
    CHECK(green(1, k, {0.3, 0.0}, {2.0, 0.0}).value ==
          doctest::Approx(std::exp(-k.value * 1.7) / (2.0 * k.value)).epsilon(1e-14));
    // d = 3: e^{-kappa r}/(4 pi r).
    CHECK(green(3, k, x, y).value ==
          doctest::Approx(std::exp(-k.value * r) / (4.0 * M_PI * r)).epsilon(1e-14));
}

TEST_CASE("Green gradient and normal derivative match finite differences") {
    const Kappa k(0.9);
    const Point2 x{0.15, -0.3}, y{1.2, 0.8};
    const double h = 1e-6;

    const GreenEval g = green(2, k, x, y);
    const double dx = (green(2, k, {x.x + h, x.y}, y).value -
                       green(2, k, {x.x - h, x.y}, y).value) /
                      (2.0 * h);
    const double dy = (green(2, k, {x.x, x.y + h}, y).value -
                       green(2, k, {x.x, x.y - h}, y).value) /
                      (2.0 * h);
    CHECK(g.grad_x[0] == doctest::Approx(dx).epsilon(1e-8));
    CHECK(g.grad_x[1] == doctest::Approx(dy).epsilon(1e-8));

    const Point2 nu{0.6, 0.8};
    const double dn = (green(2, k, x, {y.x + h * nu.x, y.y + h * nu.y}).value -
                       green(2, k, x, {y.x - h * nu.x, y.y - h * nu.y}).value) /
                      (2.0 * h);
    CHECK(green_dn(2, k, x, y, nu) == doctest::Approx(dn).epsilon(1e-8));

    // Mixed Hessian entry d^2/dx0 dnu_y via nested differences.
    const auto gdn = [&](Point2 xx) { return green_dn(2, k, xx, y, nu); };
    const double hxy = (gdn({x.x + h, x.y}) - gdn({x.x - h, x.y})) / (2.0 * h);
    const double hess = g.hess_xy[0][0] * nu.x + g.hess_xy[0][1] * nu.y;
    CHECK(hess == doctest::Approx(hxy).epsilon(1e-6));
}

TEST_CASE("imaginary-axis kernel decays monotonically in distance") {
    const Kappa k(2.0);
    double prev = green(2, k, {0, 0}, {0.3, 0}).value;
    for (double r = 0.5; r < 8.0; r += 0.25) {
        const double cur = green(2, k, {0, 0}, {r, 0}).value;
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("Kappa rejects non-positive values") {
    CHECK_THROWS_AS(Kappa(0.0), std::domain_error);
    CHECK_THROWS_AS(Kappa(-1.0), std::domain_error);
}
