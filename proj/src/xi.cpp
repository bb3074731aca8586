#include "relspec/xi.hpp"

#include <cmath>
#include <sstream>

namespace relspec {

namespace {

double log_det_ratio(const Eigen::MatrixXd& full, const Eigen::MatrixXd& diag) {
    const LogDet lf = log_abs_det(full);
    const LogDet ld = log_abs_det(diag);
    if (lf.sign == 0 || ld.sign == 0 || lf.sign * ld.sign != 1) {
        std::ostringstream os;
        os << "xi: non-positive determinant ratio (signs " << lf.sign << ", " << ld.sign
           << "; cond full " << condition_estimate(full) << ", cond diag "
           << condition_estimate(diag) << ")";
        throw NumericalBreakdown(os.str());
    }
    return lf.log_abs - ld.log_abs;
}

Eigen::MatrixXd op_matrix(BoundaryCondition bc, const BoundaryMesh& mesh, Kappa kappa,
                          const std::optional<TransmissionParams>& params, bool diag) {
    switch (bc) {
    case BoundaryCondition::Dirichlet: {
        BoundaryOperator s = assemble_S(mesh, kappa);
        return diag ? diag_part(s).matrix : s.matrix;
    }
    case BoundaryCondition::Neumann: {
        BoundaryOperator n = assemble_N(mesh, kappa);
        return diag ? diag_part(n).matrix : n.matrix;
    }
    case BoundaryCondition::Transmission: {
        const TransmissionOperators h = transmission_reduced(mesh, kappa, params.value());
        return diag ? h.diag.matrix : h.full.matrix;
    }
    }
    throw std::logic_error("xi: unknown boundary condition");
}

} // namespace

double xi_dirichlet(const BoundaryMesh& mesh, Kappa kappa) {
    if (mesh.n_components() < 2) return 0.0;
    const BoundaryOperator s = assemble_S(mesh, kappa);
    return log_det_ratio(s.matrix, diag_part(s).matrix);
}

double xi_neumann(const BoundaryMesh& mesh, Kappa kappa) {
    if (mesh.n_components() < 2) return 0.0;
    const BoundaryOperator n = assemble_N(mesh, kappa);
    return log_det_ratio(n.matrix, diag_part(n).matrix);
}

double xi_transmission(const BoundaryMesh& mesh, Kappa kappa, const TransmissionParams& params) {
    if (mesh.n_components() < 2) return 0.0;
    const TransmissionOperators h = transmission_reduced(mesh, kappa, params);
    return log_det_ratio(h.full.matrix, h.diag.matrix);
}

double xi_value(BoundaryCondition bc, const BoundaryMesh& mesh, Kappa kappa,
                const std::optional<TransmissionParams>& params) {
    switch (bc) {
    case BoundaryCondition::Dirichlet: return xi_dirichlet(mesh, kappa);
    case BoundaryCondition::Neumann: return xi_neumann(mesh, kappa);
    case BoundaryCondition::Transmission: return xi_transmission(mesh, kappa, params.value());
    }
    throw std::logic_error("xi_value: unknown boundary condition");
}

double xi_derivative(BoundaryCondition bc, const BoundaryMesh& mesh, Kappa kappa,
                     const std::optional<TransmissionParams>& params) {
    if (mesh.n_components() < 2) return 0.0;
    const double k = kappa.value;
    const double h = 1e-4 * std::max(1.0, k);
    const Eigen::MatrixXd full = op_matrix(bc, mesh, kappa, params, false);
    const Eigen::MatrixXd diag = op_matrix(bc, mesh, kappa, params, true);
    const Eigen::MatrixXd dfull =
        (op_matrix(bc, mesh, Kappa(k + h), params, false) -
         op_matrix(bc, mesh, Kappa(k - h), params, false)) /
        (2.0 * h);
    const Eigen::MatrixXd ddiag =
        (op_matrix(bc, mesh, Kappa(k + h), params, true) -
         op_matrix(bc, mesh, Kappa(k - h), params, true)) /
        (2.0 * h);
    const Eigen::MatrixXd a = Eigen::PartialPivLU<Eigen::MatrixXd>(full).solve(dfull);
    const Eigen::MatrixXd b = Eigen::PartialPivLU<Eigen::MatrixXd>(diag).solve(ddiag);
    return a.trace() - b.trace();
}

std::string xi_curve_csv(const XiCurve& curve) {
    std::ostringstream os;
    os.precision(17);
    os << "kappa,xi\n";
    for (const XiSample& s : curve.samples) os << s.kappa << "," << s.xi << "\n";
    return os.str();
}

} // namespace relspec
