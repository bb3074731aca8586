#pragma once

#include <vector>

#include "relspec/specfun.hpp"
#include "relspec/xi.hpp"

// Semi-analytic reference for circular obstacles: Fourier-Bessel
// diagonalization of the single-disc operators plus Graf-addition-theorem
// translation matrices between centers.  Shares no assembly code with the
// Nystrom path; only the scalar Bessel routines are common.

namespace relspec::multipole {

/// I_0(z) .. I_n(z) by Miller's downward recurrence, normalized through
/// e^z = I_0 + 2 sum I_m.
std::vector<double> bessel_i_seq(int n, double z);

/// K_0(z) .. K_n(z) by upward recurrence from K_0, K_1.
std::vector<double> bessel_k_seq(int n, double z);

struct CircleModes {
    int L = 0;
    std::vector<double> S;  ///< S_m = r I_m(kr) K_m(kr), m = -L..L
    std::vector<double> N;  ///< N_m = k^2 r I'_m(kr) K'_m(kr)
    std::vector<double> Q;  ///< Q^-_m = k I'_m(kr) / I_m(kr)
};

/// Per-Fourier-mode eigenvalues of the single-disc layer operators at
/// imaginary wavenumber.  N is built through the factorization
/// N = -(1/2 - D') Q^-.
CircleModes circle_mode_values(double kappa, double radius, int L);

struct MultipoleResult {
    double value = 0.0;
    int L = 0;           ///< truncation order at which the value converged
    double tail = 0.0;   ///< magnitude of the last truncation increment
};

/// Xi of a collection of disjoint discs by mode-space determinants.
/// Raises on non-convergence at L = 64.
MultipoleResult xi_discs(double kappa, const std::vector<Point2>& centers,
                         const std::vector<double>& radii, BoundaryCondition bc,
                         int L_start = 24);

} // namespace relspec::multipole
