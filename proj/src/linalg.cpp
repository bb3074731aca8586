#include "relspec/linalg.hpp"

#include <cmath>

namespace relspec {

LogDet log_abs_det(const Eigen::MatrixXd& m) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
    const auto& u = lu.matrixLU();
    double log_abs = 0.0;
    int sign = lu.permutationP().determinant();
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        const double d = u(i, i);
        if (d == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
        if (d < 0.0) sign = -sign;
        log_abs += std::log(std::abs(d));
    }
    return {log_abs, sign};
}

LogDet log_abs_det(const Eigen::MatrixXcd& m) {
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
    const auto& u = lu.matrixLU();
    double log_abs = 0.0;
    std::complex<double> phase = static_cast<double>(lu.permutationP().determinant());
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        const std::complex<double> d = u(i, i);
        const double a = std::abs(d);
        if (a == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
        phase *= d / a;
        log_abs += std::log(a);
    }
    return {log_abs, phase.real() >= 0.0 ? 1 : -1};
}

Eigen::MatrixXd weight_symmetrize(const Eigen::MatrixXd& m, const Eigen::VectorXd& w) {
    const Eigen::ArrayXd s = w.array().sqrt();
    return (s.matrix().asDiagonal() * m * s.inverse().matrix().asDiagonal());
}

double condition_estimate(const Eigen::MatrixXd& m) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
    const Eigen::MatrixXd inv = lu.inverse();
    auto norm1 = [](const Eigen::MatrixXd& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); };
    return norm1(m) * norm1(inv);
}

} // namespace relspec
