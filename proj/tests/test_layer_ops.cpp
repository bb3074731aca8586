#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "relspec/layer_ops.hpp"
#include "relspec/multipole.hpp"
#include "test_helpers.hpp"

using namespace relspec;
using testing::density_residual;
using testing::fourier_densities;

// Operator identities are measured by their action on smooth Fourier test
// densities rather than by entrywise matrix norms: the Nystroem derivative
// quadrature annihilates the Nyquist mode, so products such as A^2 - 1/4
// carry an O(1) defect on that single mode at any n, while their action on
// resolved densities converges spectrally.

namespace {

BoundaryMesh single_circle(double radius, int n) {
    Configuration cfg;
    cfg.components.push_back(CircleCurve{{0.25, -0.75}, radius});
    return discretize(cfg, {n});
}

// Residual of (M - eig*I) applied to the sampled mode cos/sin(m t).
double mode_residual(const Eigen::MatrixXd& M, const BoundaryMesh& mesh, int m, double eig) {
    const auto n = static_cast<Eigen::Index>(mesh.size());
    double worst = 0.0;
    for (int phase = 0; phase < (m == 0 ? 1 : 2); ++phase) {
        Eigen::VectorXd v(n);
        for (Eigen::Index i = 0; i < n; ++i)
            v[i] = phase == 0 ? std::cos(m * mesh.param[i]) : std::sin(m * mesh.param[i]);
        worst = std::max(worst, (M * v - eig * v).cwiseAbs().maxCoeff());
    }
    return worst;
}

} // namespace

TEST_CASE("disc Fourier modes diagonalize S, D, N") {
    const double radius = 1.2, kappa = 0.8;
    const BoundaryMesh mesh = single_circle(radius, 64);
    const Kappa k(kappa);
    const auto modes = multipole::circle_mode_values(kappa, radius, 8);
    const Eigen::MatrixXd S = assemble_S(mesh, k).matrix;
    const Eigen::MatrixXd D = assemble_D(mesh, k).matrix;
    const Eigen::MatrixXd Dp = assemble_Dp(mesh, k).matrix;
    const Eigen::MatrixXd N = assemble_N(mesh, k).matrix;
    for (int m = 0; m <= 6; ++m) {
        CAPTURE(m);
        const double Sm = modes.S[static_cast<std::size_t>(modes.L + m)];
        const double Nm = modes.N[static_cast<std::size_t>(modes.L + m)];
        const double Qm = modes.Q[static_cast<std::size_t>(modes.L + m)];
        const double Dm = Sm * Qm - 0.5; // from Q^- = S^{-1}(1/2 + D)
        CHECK(mode_residual(S, mesh, m, Sm) < 1e-12);
        CHECK(mode_residual(D, mesh, m, Dm) < 1e-12);
        CHECK(mode_residual(Dp, mesh, m, Dm) < 1e-12); // D = D' on a circle
        CHECK(mode_residual(N, mesh, m, Nm) < 1e-11);
    }
}

TEST_CASE("multitrace square and Calderon algebra on the disc pair") {
    const Configuration cfg = testing::two_discs();
    const Kappa k(1.0);
    double prev_sq = 0.0, prev_pp = 0.0;
    for (int n : {32, 64}) {
        const BoundaryMesh mesh = discretize(cfg, {n, n});
        const auto vs = fourier_densities(mesh, 4);
        const auto A = multitrace(mesh, k);
        const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(A.blocks.rows(), A.blocks.cols());
        const double r_sq = density_residual(A.blocks * A.blocks - 0.25 * I, vs);

        const auto Pp = calderon(mesh, k, +1);
        const auto Pm = calderon(mesh, k, -1);
        double r_pp = density_residual(Pp.blocks * Pp.blocks - Pp.blocks, vs);
        r_pp = std::max(r_pp, density_residual(Pm.blocks * Pm.blocks - Pm.blocks, vs));
        r_pp = std::max(r_pp, density_residual(Pp.blocks * Pm.blocks, vs));

        if (n == 64) {
            CHECK(r_sq < 1e-10);
            CHECK(r_pp < 1e-10);
            // Spectral convergence: at least 10x decay per refinement.
            CHECK(r_sq < 0.1 * prev_sq);
            CHECK(r_pp < 0.1 * prev_pp);
        }
        prev_sq = r_sq;
        prev_pp = r_pp;
    }
}

TEST_CASE("hypersingular factorization N S = D'^2 - 1/4 on densities") {
    const Configuration cfg = testing::two_discs();
    const BoundaryMesh mesh = discretize(cfg, {64, 64});
    const Kappa k(0.7);
    const auto vs = fourier_densities(mesh, 4);
    const Eigen::MatrixXd S = assemble_S(mesh, k).matrix;
    const Eigen::MatrixXd Dp = assemble_Dp(mesh, k).matrix;
    const Eigen::MatrixXd N = assemble_N(mesh, k).matrix;
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(S.rows(), S.cols());
    CHECK(density_residual(N * S + (0.5 * I + Dp) * (0.5 * I - Dp), vs) < 1e-10);
}

TEST_CASE("Dirichlet-to-Neumann sum rule S (Q^- + Q^+) = I") {
    const Configuration cfg = testing::two_discs();
    const BoundaryMesh mesh = discretize(cfg, {48, 48});
    const Kappa k(1.3);
    const Eigen::MatrixXd S = assemble_S(mesh, k).matrix;
    const Eigen::MatrixXd Qm = dtn_minus(mesh, k).matrix;
    const Eigen::MatrixXd Qp = dtn_plus(mesh, k).matrix;
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(S.rows(), S.cols());
    CHECK((S * (Qm + Qp) - I).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("diag_part zeroes exactly the cross-component blocks") {
    const Configuration cfg = testing::two_discs();
    const BoundaryMesh mesh = discretize(cfg, {16, 24});
    const auto S = assemble_S(mesh, Kappa(1.0));
    const auto Sd = diag_part(S);
    for (Eigen::Index i = 0; i < S.matrix.rows(); ++i) {
        for (Eigen::Index j = 0; j < S.matrix.cols(); ++j) {
            const bool same = mesh.component_id[static_cast<std::size_t>(i)] ==
                              mesh.component_id[static_cast<std::size_t>(j)];
            if (same) {
                CHECK(Sd.matrix(i, j) == S.matrix(i, j));
            } else {
                CHECK(Sd.matrix(i, j) == 0.0);
            }
        }
    }
}

TEST_CASE("cross-component S block decays like exp(-kappa * separation)") {
    // Off-diagonal entries are bounded by the kernel at the gap distance.
    const Configuration cfg = testing::two_discs(2.0);
    const BoundaryMesh mesh = discretize(cfg, {32, 32});
    for (double kappa : {1.0, 2.0, 4.0}) {
        const Eigen::MatrixXd S = assemble_S(mesh, Kappa(kappa)).matrix;
        const double off = S.block(0, 32, 32, 32).cwiseAbs().maxCoeff();
        // C e^{-kappa delta'} with delta' = 0.9 * delta and generous C.
        CHECK(off < 10.0 * std::exp(-kappa * 0.9 * 2.0));
    }
}

TEST_CASE("arclength derivative is spectral on resolved Fourier modes") {
    const double radius = 1.4;
    const BoundaryMesh mesh = single_circle(radius, 32);
    const Eigen::MatrixXd T = arclength_derivative(mesh);
    const auto n = static_cast<Eigen::Index>(mesh.size());
    for (int m : {1, 3, 6}) {
        Eigen::VectorXd v(n), want(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            v[i] = std::cos(m * mesh.param[i]);
            // d/ds cos(m t) = -m sin(m t) / |gamma'|.
            want[i] = -m * std::sin(m * mesh.param[i]) / mesh.speed[static_cast<std::size_t>(i)];
        }
        CHECK((T * v - want).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("reduced transmission operator matches its definition") {
    const Configuration cfg = testing::two_discs();
    const BoundaryMesh mesh = discretize(cfg, {32, 32});
    TransmissionParams media;
    media.kappa_plus = 1.0;
    media.kappa_minus = 2.0;
    media.nu0 = 1.0;
    media.nu1 = 0.25; // (kappa_-/kappa_+)^{-2} convention is up to the caller
    const double kappa = 0.9;
    const auto H = transmission_reduced(mesh, Kappa(kappa), media);

    const Kappa k_out(kappa / media.kappa_plus), k_in(kappa / media.kappa_minus);
    Eigen::MatrixXd S = assemble_S(mesh, k_out).matrix;
    Eigen::MatrixXd D = assemble_D(mesh, k_out).matrix;
    const Eigen::MatrixXd Qm = dtn_minus(mesh, k_in).matrix;
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(S.rows(), S.cols());
    const Eigen::MatrixXd want = -media.nu0 * (0.5 * I - D) - media.nu1 * S * Qm;
    CHECK((H.full.matrix - want).cwiseAbs().maxCoeff() < 1e-12);
    // Diagonal counterpart: cross-component exterior blocks removed, same Q^-.
    auto zero_cross = [&](Eigen::MatrixXd& m) {
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                if (mesh.component_id[static_cast<std::size_t>(i)] !=
                    mesh.component_id[static_cast<std::size_t>(j)])
                    m(i, j) = 0.0;
    };
    zero_cross(S);
    zero_cross(D);
    const Eigen::MatrixXd want_diag = -media.nu0 * (0.5 * I - D) - media.nu1 * S * Qm;
    CHECK((H.diag.matrix - want_diag).cwiseAbs().maxCoeff() < 1e-12);
}
