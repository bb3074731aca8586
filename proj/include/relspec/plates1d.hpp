#pragma once

#include <Eigen/Dense>

#include "relspec/layer_ops.hpp"
#include "relspec/trace_formula.hpp"

// Closed-form 1D parallel-plate machinery: point-plate boundary operators,
// finite-slab transmission Xi with dimensional reduction to plates in R^3,
// the Lifshitz (thick-slab) limit, and a brute-force Cauchy-data
// determinant oracle on the four slab endpoints.

namespace relspec {

struct PlateLayers1D {
    Eigen::Matrix2d S;
    Eigen::Matrix2d D;
    Eigen::Matrix2d N;
};

/// Boundary layer operators for the two-point obstacle {-a/2, a/2} at
/// imaginary wavenumber kappa.  Satisfies S*N = D^2 - 1/4.
PlateLayers1D layer_matrices_1d(double kappa, double a_gap);

/// Xi for 1D point plates; identical for Dirichlet and Neumann:
/// log(1 - e^{-2 kappa a}).
double xi_point_plates(double kappa, double a_gap);

/// 1D Casimir energy of point plates at separation a_gap with mass m.
/// Exact value at m = 0 is -pi/(24 a).
EnergyResult energy_point_plates(double a_gap, double m, const TraceOptions& opts = {});

/// Casimir energy per unit area of Dirichlet plates in R^3 at separation
/// a_gap, from the dimensionally reduced weight
///   tr = -1/(2 pi Gamma(-s) Gamma(1+s)) int_m^inf l (l^2-m^2)^s Xi(il) dl.
/// Exact value at m = 0, s = 1/2 is -pi^2/(1440 a^3).
EnergyResult energy_plates_per_area(double a_gap, double m, double s,
                                    const TraceOptions& opts = {});

/// eta_pm(t, xi) = sqrt((t/kappa_pm)^2 + xi^2), the reduced exponent of the
/// transverse-momentum decomposition.
double slab_eta(double t, double kappa_medium, double xi);

/// Reflection coefficient of a dielectric half-space,
/// R = (km^2 eta_m - kp^2 eta_p) / (km^2 eta_m + kp^2 eta_p).
double reflection_coefficient(double t, double xi, const TransmissionParams& media);

/// Reduced transmission Xi of two parallel slabs of thickness a separated
/// by gap d, at spectral point (it, xi).
double xi_slabs(double t, double xi, double d_gap, double a_thickness,
                const TransmissionParams& media);

/// Thick-slab (Lifshitz) limit log(1 - R^2 e^{-2 d eta_plus}).
double xi_slabs_lifshitz(double t, double xi, double d_gap, const TransmissionParams& media);

/// Independent 4x4 Cauchy-data determinant on the slab endpoints: exterior
/// S, D at eta_plus, interior two-point DtN at eta_minus, assembled into the
/// reduced transmission operator.  Shares no algebra with xi_slabs.
double cauchy_oracle_slabs(double t, double xi, double d_gap, double a_thickness,
                           const TransmissionParams& media);

/// Casimir energy per unit area of the two-slab configuration,
/// E = (1/8 pi^3) int dl int_{R^2} dxi Xi_T, radially reduced.
EnergyResult casimir_per_area_slabs(double d_gap, double a_thickness,
                                    const TransmissionParams& media, bool lifshitz = false,
                                    const TraceOptions& opts = {});

/// Diagonal of the relative Neumann resolvent for point plates at 0 and
/// a_gap, built from e^{-kappa|x-y|}/(2 kappa) kernels with image charges.
/// Integrating over x recovers -Xi'(i kappa)/(2 i kappa).
double resolvent_rel_diag_neumann_1d(double kappa, double a_gap, double x);

} // namespace relspec
