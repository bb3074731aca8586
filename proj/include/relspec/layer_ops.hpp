#pragma once

#include "relspec/geometry.hpp"
#include "relspec/linalg.hpp"

#include <Eigen/Dense>

// Nystroem discretizations of the boundary layer operators S, D, D', N at
// imaginary wavenumber, the multitrace/Calderon block operators, the
// Dirichlet-to-Neumann maps and the reduced transmission operator.
//
// Same-component blocks use Martensen-Kussmaul log-singularity quadrature
// (spectrally accurate on smooth curves); cross-component blocks use the
// periodic trapezoid rule (kernels analytic there).  Matrices act on nodal
// density values and include the quadrature weights, so a matrix-vector
// product approximates the boundary integral.

namespace relspec {

enum class SobolevTag { HalfPlus, HalfMinus };

struct BoundaryOperator {
    Eigen::MatrixXd matrix;
    const BoundaryMesh* mesh = nullptr;
    double kappa = 0.0;
    SobolevTag row_space = SobolevTag::HalfPlus;
    SobolevTag col_space = SobolevTag::HalfMinus;
};

/// 2x2 block operator on discrete Cauchy data (Dirichlet row, Neumann row).
struct CauchyBlockOperator {
    Eigen::MatrixXd blocks; // 2n x 2n

    Eigen::Index n() const { return blocks.rows() / 2; }
};

/// Media/trace-jump parameters of the transmission problem.
struct TransmissionParams {
    double kappa_plus = 1.0;  // exterior wave speed factor
    double kappa_minus = 1.0; // interior wave speed factor
    double nu0 = 1.0;         // Dirichlet trace jump
    double nu1 = 1.0;         // Neumann trace jump
};

// Toggle OpenMP row-parallel assembly (default: on when compiled with
// OpenMP).  The serial path is kept as a reference for testing.
void set_parallel_assembly(bool enabled);
bool parallel_assembly_enabled();

BoundaryOperator assemble_S(const BoundaryMesh& mesh, Kappa kappa);
BoundaryOperator assemble_D(const BoundaryMesh& mesh, Kappa kappa);
BoundaryOperator assemble_Dp(const BoundaryMesh& mesh, Kappa kappa);
BoundaryOperator assemble_N(const BoundaryMesh& mesh, Kappa kappa);

/// Zeroes all cross-component blocks.
BoundaryOperator diag_part(const BoundaryOperator& op);

/// A = [[-D, S], [-N, D']].
CauchyBlockOperator multitrace(const BoundaryMesh& mesh, Kappa kappa);

/// P^+ = 1/2 - A, P^- = 1/2 + A.
CauchyBlockOperator calderon(const BoundaryMesh& mesh, Kappa kappa, int sign);

/// Interior Dirichlet-to-Neumann map Q^- = S^{-1}(1/2 + D), computed by a
/// dense solve.  Throws (with a condition estimate in the message) if the
/// solve is unreliable.
BoundaryOperator dtn_minus(const BoundaryMesh& mesh, Kappa kappa);

/// Exterior map Q^+ = S^{-1}(1/2 - D).
BoundaryOperator dtn_plus(const BoundaryMesh& mesh, Kappa kappa);

struct TransmissionOperators {
    BoundaryOperator full; // H~
    BoundaryOperator diag; // H~_diag
};

/// Reduced transmission operator H~ = -nu0 (1/2 - D_{k/k+}) - nu1 S_{k/k+} Q^-_{k/k-}
/// and its diagonal counterpart (S_diag, D_diag, same Q^-).
TransmissionOperators transmission_reduced(const BoundaryMesh& mesh, Kappa kappa,
                                           const TransmissionParams& params);

/// Spectral arclength differentiation matrix (block diagonal over
/// components; smooth components only).
Eigen::MatrixXd arclength_derivative(const BoundaryMesh& mesh);

} // namespace relspec
