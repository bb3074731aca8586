#pragma once

#include <functional>
#include <string>
#include <vector>

// Integration of Xi(i kappa) against the trace-formula weight:
//   tr(R_s) = (2s/pi) sin(pi s) * int_m^inf  k (k^2-m^2)^{s-1} Xi(i k) dk
// with adaptive Gauss-Kronrod quadrature, an endpoint substitution
// removing the (k^2-m^2)^{s-1} singularity and an exponential tail model.

namespace relspec {

struct EnergyResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    double kappa_max = 0.0;
    long n_evaluations = 0;
    std::vector<std::string> warnings;
};

struct TraceOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    double kappa_min = 1e-6; // lower cutoff for m = 0
    double kappa_max = 0.0;  // 0 = choose from fitted decay
    int max_depth = 48;
};

/// Adaptive Gauss-Kronrod (G7,K15) on [a,b]; returns the estimate and
/// accumulates an error estimate and evaluation count.
double adaptive_gk(const std::function<double(double)>& f, double a, double b,
                   double rel_tol, double abs_tol, int max_depth, double& err_out,
                   long& n_eval);

/// tr(R_s) for Xi sampled on the positive imaginary axis.  xi_fn(kappa)
/// must decay exponentially; the fitted decay rate determines truncation
/// and the tail bound is added to abs_error_estimate.
EnergyResult trace_rs(const std::function<double(double)>& xi_fn, double s, double m,
                      const TraceOptions& opts = {});

/// Casimir energy 1/2 tr(R_{1/2}).
EnergyResult casimir_energy_from_xi(const std::function<double(double)>& xi_fn, double m,
                                    const TraceOptions& opts = {});

} // namespace relspec

#include "relspec/xi.hpp"

namespace relspec {

/// Casimir energy of a meshed configuration: 1/2 tr(R_{1/2}) over the
/// boundary-element Xi.  Operator assemblies are cached per kappa.
EnergyResult casimir_energy(BoundaryCondition bc, const Configuration& config,
                            const std::vector<int>& n_per_component,
                            const std::optional<TransmissionParams>& params, double m,
                            const TraceOptions& opts = {});

} // namespace relspec
