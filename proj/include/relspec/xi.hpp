#pragma once

#include "relspec/layer_ops.hpp"

#include <optional>
#include <string>
#include <vector>

// The relative spectral functions Xi = log det(O O_diag^{-1}) for
// O in {S, N, H~}, and their derivative via the Jacobi trace formula.

namespace relspec {

enum class BoundaryCondition { Dirichlet, Neumann, Transmission };

struct XiSample {
    double kappa;
    double xi;
};

struct XiCurve {
    BoundaryCondition bc;
    std::optional<TransmissionParams> params;
    std::vector<XiSample> samples;
    int mesh_resolution = 0;
    std::string config_hash;
};

/// Thrown when a determinant comes out with the wrong sign or a solve
/// breaks down; carries condition diagnostics in what().
struct NumericalBreakdown : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double xi_dirichlet(const BoundaryMesh& mesh, Kappa kappa);
double xi_neumann(const BoundaryMesh& mesh, Kappa kappa);
double xi_transmission(const BoundaryMesh& mesh, Kappa kappa, const TransmissionParams& params);

double xi_value(BoundaryCondition bc, const BoundaryMesh& mesh, Kappa kappa,
                const std::optional<TransmissionParams>& params = std::nullopt);

/// d Xi / d kappa via the Jacobi trace formula
///   Xi' = tr(O' O^{-1} - O'_diag O_diag^{-1}),
/// with O' by central finite differences in kappa.
double xi_derivative(BoundaryCondition bc, const BoundaryMesh& mesh, Kappa kappa,
                     const std::optional<TransmissionParams>& params = std::nullopt);

/// Small-kappa warning threshold for the Neumann condition number.
inline constexpr double kKappaWarnNeumann = 1e-2;

/// Serialize as CSV with header "kappa,xi", 17 significant digits.
std::string xi_curve_csv(const XiCurve& curve);

} // namespace relspec
