#pragma once

#include <Eigen/Dense>

namespace relspec {

/// log|det M| with the determinant sign, via LU with partial pivoting.
struct LogDet {
    double log_abs;
    int sign; // +1, -1, or 0 for (numerically) singular
};

LogDet log_abs_det(const Eigen::MatrixXd& m);
LogDet log_abs_det(const Eigen::MatrixXcd& m); // sign of the real part

/// W^{1/2} M W^{-1/2} for a positive weight vector w.
Eigen::MatrixXd weight_symmetrize(const Eigen::MatrixXd& m, const Eigen::VectorXd& w);

/// 1-norm condition estimate via LU (exact column norms of the inverse).
double condition_estimate(const Eigen::MatrixXd& m);

} // namespace relspec
