#include "relspec/layer_ops.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace relspec {

namespace {

std::atomic<bool> g_parallel{true};

constexpr double kInv2Pi = 1.0 / (2.0 * M_PI);

// Kress weights for int_0^{2pi} f(s) log(4 sin^2((t-s)/2)) ds on an even
// equispaced grid; R[k] is the weight at parameter offset k*h.
std::vector<double> kress_weights(int n) {
    std::vector<double> R(n);
    for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int m = 1; m < n / 2; ++m)
            s += std::cos(2.0 * M_PI * m * k / n) / m;
        R[k] = -(4.0 * M_PI / n) * s - (2.0 * M_PI / (n * n)) * std::cos(M_PI * k);
    }
    return R;
}

using KernelSplit = void (*)(const BoundaryMesh&, std::size_t, std::size_t, double,
                             double& m1, double& m2_smooth);

// Kernel of S: (1/2pi) K0(kappa r).  Log split
//   kernel = M1(t,s) log(4 sin^2((t-s)/2)) + M2(t,s),
//   M1 = -(1/4pi) I0(kappa r).
void split_S(const BoundaryMesh& mesh, std::size_t i, std::size_t j, double kappa,
             double& m1, double& m2) {
    if (i == j) {
        m1 = -0.25 * kInv2Pi * 2.0; // -(1/4pi)
        m2 = kInv2Pi * (-std::log(0.5 * kappa * mesh.speed[i]) - 0.5772156649015328606);
        return;
    }
    const Point2 d = mesh.nodes[i] - mesh.nodes[j];
    const double r = std::sqrt(dot(d, d));
    const double z = kappa * r;
    m1 = -0.5 * kInv2Pi * specfun::bessel_i0(z);
    const double dt = mesh.param[i] - mesh.param[j];
    const double logw = std::log(4.0 * std::pow(std::sin(0.5 * dt), 2));
    m2 = kInv2Pi * specfun::bessel_k0(z) - m1 * logw;
}

// Kernel of D: dG/dnu_y = (kappa/2pi) K1(kappa r) (nu_y . (x-y)) / r.
// K1(z) = 1/z + log(z/2) I1(z) + smooth, so the log factor carries
// M1 = +(kappa/4pi)(nu_y.(x-y)/r) I1(kappa r); the diagonal limit of the
// remainder is the Laplace double-layer value -curv(t)/(4pi).
void split_D(const BoundaryMesh& mesh, std::size_t i, std::size_t j, double kappa,
             double& m1, double& m2) {
    if (i == j) {
        m1 = 0.0;
        m2 = -mesh.curvature[i] / (4.0 * M_PI);
        return;
    }
    const Point2 d = mesh.nodes[i] - mesh.nodes[j];
    const double r = std::sqrt(dot(d, d));
    const double z = kappa * r;
    const double ndotr = dot(mesh.normals[j], d) / r;
    const double full = kappa * kInv2Pi * specfun::bessel_k1(z) * ndotr;
    m1 = 0.5 * kappa * kInv2Pi * ndotr * specfun::bessel_i1(z);
    const double dt = mesh.param[i] - mesh.param[j];
    const double logw = std::log(4.0 * std::pow(std::sin(0.5 * dt), 2));
    m2 = full - m1 * logw;
}

// Kernel of the nu.nu'-weighted single layer V used by the Maue identity:
// (1/2pi) K0(kappa r) (nu_x . nu_y).
void split_V(const BoundaryMesh& mesh, std::size_t i, std::size_t j, double kappa,
             double& m1, double& m2) {
    if (i == j) {
        m1 = -0.5 * kInv2Pi;
        m2 = kInv2Pi * (-std::log(0.5 * kappa * mesh.speed[i]) - 0.5772156649015328606);
        return;
    }
    split_S(mesh, i, j, kappa, m1, m2);
    const double nn = dot(mesh.normals[i], mesh.normals[j]);
    m1 *= nn;
    m2 *= nn;
}

double plain_kernel_S(const BoundaryMesh& mesh, std::size_t i, std::size_t j, double kappa) {
    const Point2 d = mesh.nodes[i] - mesh.nodes[j];
    const double r = std::sqrt(dot(d, d));
    return kInv2Pi * specfun::bessel_k0(kappa * r);
}

double plain_kernel_D(const BoundaryMesh& mesh, std::size_t i, std::size_t j, double kappa) {
    const Point2 d = mesh.nodes[i] - mesh.nodes[j];
    const double r = std::sqrt(dot(d, d));
    return kappa * kInv2Pi * specfun::bessel_k1(kappa * r) * dot(mesh.normals[j], d) / r;
}

double plain_kernel_V(const BoundaryMesh& mesh, std::size_t i, std::size_t j, double kappa) {
    return plain_kernel_S(mesh, i, j, kappa) * dot(mesh.normals[i], mesh.normals[j]);
}

using PlainKernel = double (*)(const BoundaryMesh&, std::size_t, std::size_t, double);

// Row assembly: same-component blocks via Kress quadrature on smooth
// components (plain panels with a log-corrected diagonal on polygons);
// cross-component blocks via the component's native weights.
void assemble_row(const BoundaryMesh& mesh, double kappa, std::size_t i,
                  KernelSplit split, PlainKernel plain, bool polygon_selfsingular,
                  const std::vector<std::vector<double>>& kress_per_comp,
                  Eigen::MatrixXd& out) {
    const int ci = mesh.component_id[i];
    for (std::size_t c = 0; c < mesh.n_components(); ++c) {
        const auto [b, e] = mesh.component_ranges[c];
        if (static_cast<int>(c) == ci && mesh.component_smooth[c]) {
            const int n = static_cast<int>(e - b);
            const auto& R = kress_per_comp[c];
            for (std::size_t j = b; j < e; ++j) {
                double m1, m2;
                split(mesh, i, j, kappa, m1, m2);
                const int k = (static_cast<int>(i - b) - static_cast<int>(j - b) + n) % n;
                out(i, j) = (R[k] * m1 + (2.0 * M_PI / n) * m2) * mesh.speed[j];
            }
        } else if (static_cast<int>(c) == ci) {
            // polygon self block: plain panel quadrature, log-corrected diagonal
            for (std::size_t j = b; j < e; ++j) {
                if (j == i) {
                    if (polygon_selfsingular) {
                        const double w = mesh.weights[i];
                        out(i, j) = kInv2Pi * w *
                                    (-std::log(0.25 * kappa * w) + 1.0 - 0.5772156649015328606);
                    } else {
                        out(i, j) = 0.0;
                    }
                } else {
                    out(i, j) = plain(mesh, i, j, kappa) * mesh.weights[j];
                }
            }
        } else {
            for (std::size_t j = b; j < e; ++j)
                out(i, j) = plain(mesh, i, j, kappa) * mesh.weights[j];
        }
    }
}

Eigen::MatrixXd assemble(const BoundaryMesh& mesh, double kappa, KernelSplit split,
                         PlainKernel plain, bool polygon_selfsingular) {
    const std::size_t n = mesh.size();
    std::vector<std::vector<double>> kress_per_comp(mesh.n_components());
    for (std::size_t c = 0; c < mesh.n_components(); ++c)
        if (mesh.component_smooth[c]) {
            const auto [b, e] = mesh.component_ranges[c];
            kress_per_comp[c] = kress_weights(static_cast<int>(e - b));
        }
    Eigen::MatrixXd out(n, n);
#ifdef _OPENMP
    if (g_parallel.load()) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
            assemble_row(mesh, kappa, static_cast<std::size_t>(i), split, plain,
                         polygon_selfsingular, kress_per_comp, out);
        return out;
    }
#endif
    for (std::size_t i = 0; i < n; ++i)
        assemble_row(mesh, kappa, i, split, plain, polygon_selfsingular, kress_per_comp, out);
    return out;
}

void require_smooth(const BoundaryMesh& mesh, const char* what) {
    for (bool s : mesh.component_smooth)
        if (!s) {
            std::ostringstream os;
            os << what << ": polygon components are unsupported";
            throw std::invalid_argument(os.str());
        }
}

} // namespace

void set_parallel_assembly(bool enabled) { g_parallel.store(enabled); }
bool parallel_assembly_enabled() { return g_parallel.load(); }

BoundaryOperator assemble_S(const BoundaryMesh& mesh, Kappa kappa) {
    BoundaryOperator op;
    op.matrix = assemble(mesh, kappa.value, split_S, plain_kernel_S, true);
    op.mesh = &mesh;
    op.kappa = kappa.value;
    op.row_space = SobolevTag::HalfPlus;
    op.col_space = SobolevTag::HalfMinus;
    return op;
}

BoundaryOperator assemble_D(const BoundaryMesh& mesh, Kappa kappa) {
    BoundaryOperator op;
    op.matrix = assemble(mesh, kappa.value, split_D, plain_kernel_D, false);
    op.mesh = &mesh;
    op.kappa = kappa.value;
    op.row_space = SobolevTag::HalfPlus;
    op.col_space = SobolevTag::HalfPlus;
    return op;
}

BoundaryOperator assemble_Dp(const BoundaryMesh& mesh, Kappa kappa) {
    // D' = W^{-1} D^T W, exactly, so the discrete transpose relation holds
    // by construction.
    BoundaryOperator d = assemble_D(mesh, kappa);
    Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(mesh.weights.data(), mesh.size());
    BoundaryOperator op;
    op.matrix = w.asDiagonal().inverse() * d.matrix.transpose() * w.asDiagonal();
    op.mesh = &mesh;
    op.kappa = kappa.value;
    op.row_space = SobolevTag::HalfMinus;
    op.col_space = SobolevTag::HalfMinus;
    return op;
}

Eigen::MatrixXd arclength_derivative(const BoundaryMesh& mesh) {
    require_smooth(mesh, "arclength_derivative");
    const std::size_t n = mesh.size();
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t c = 0; c < mesh.n_components(); ++c) {
        const auto [b, e] = mesh.component_ranges[c];
        const int m = static_cast<int>(e - b);
        for (std::size_t i = b; i < e; ++i)
            for (std::size_t j = b; j < e; ++j) {
                if (i == j) continue;
                const double dt = mesh.param[i] - mesh.param[j];
                const double sgn = ((i - b + j - b) % 2 == 0) ? 1.0 : -1.0;
                T(i, j) = 0.5 * sgn / std::tan(0.5 * dt) / mesh.speed[i];
                (void)m;
            }
    }
    return T;
}

BoundaryOperator assemble_N(const BoundaryMesh& mesh, Kappa kappa) {
    require_smooth(mesh, "assemble_N");
    const Eigen::MatrixXd T = arclength_derivative(mesh);
    const Eigen::MatrixXd S = assemble(mesh, kappa.value, split_S, plain_kernel_S, true);
    const Eigen::MatrixXd V = assemble(mesh, kappa.value, split_V, plain_kernel_V, true);
    BoundaryOperator op;
    // Maue identity at lambda = i kappa: N = T S T - kappa^2 V.
    op.matrix = T * S * T - kappa.value * kappa.value * V;
    op.mesh = &mesh;
    op.kappa = kappa.value;
    op.row_space = SobolevTag::HalfMinus;
    op.col_space = SobolevTag::HalfPlus;
    return op;
}

BoundaryOperator diag_part(const BoundaryOperator& op) {
    BoundaryOperator out = op;
    const BoundaryMesh& mesh = *op.mesh;
    for (std::size_t i = 0; i < mesh.size(); ++i)
        for (std::size_t j = 0; j < mesh.size(); ++j)
            if (mesh.component_id[i] != mesh.component_id[j]) out.matrix(i, j) = 0.0;
    return out;
}

CauchyBlockOperator multitrace(const BoundaryMesh& mesh, Kappa kappa) {
    const std::size_t n = mesh.size();
    const Eigen::MatrixXd S = assemble_S(mesh, kappa).matrix;
    const Eigen::MatrixXd D = assemble_D(mesh, kappa).matrix;
    const Eigen::MatrixXd Dp = assemble_Dp(mesh, kappa).matrix;
    const Eigen::MatrixXd N = assemble_N(mesh, kappa).matrix;
    CauchyBlockOperator a;
    a.blocks.resize(2 * n, 2 * n);
    a.blocks.topLeftCorner(n, n) = -D;
    a.blocks.topRightCorner(n, n) = S;
    a.blocks.bottomLeftCorner(n, n) = -N;
    a.blocks.bottomRightCorner(n, n) = Dp;
    return a;
}

CauchyBlockOperator calderon(const BoundaryMesh& mesh, Kappa kappa, int sign) {
    CauchyBlockOperator a = multitrace(mesh, kappa);
    const double s = sign >= 0 ? -1.0 : 1.0; // P^+- = 1/2 -+ A
    CauchyBlockOperator p;
    p.blocks = 0.5 * Eigen::MatrixXd::Identity(a.blocks.rows(), a.blocks.cols()) + s * a.blocks;
    return p;
}

namespace {

BoundaryOperator dtn_impl(const BoundaryMesh& mesh, Kappa kappa, double dsign) {
    const Eigen::MatrixXd S = assemble_S(mesh, kappa).matrix;
    const Eigen::MatrixXd D = assemble_D(mesh, kappa).matrix;
    const std::size_t n = mesh.size();
    const Eigen::MatrixXd rhs =
        0.5 * Eigen::MatrixXd::Identity(n, n) + dsign * D;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(S);
    const Eigen::MatrixXd q = lu.solve(rhs);
    const double resid = (S * q - rhs).cwiseAbs().maxCoeff();
    if (!(resid < 1e-6)) {
        std::ostringstream os;
        os << "dtn: unreliable solve, residual " << resid << ", cond estimate "
           << condition_estimate(S);
        throw std::runtime_error(os.str());
    }
    BoundaryOperator op;
    op.matrix = q;
    op.mesh = &mesh;
    op.kappa = kappa.value;
    op.row_space = SobolevTag::HalfMinus;
    op.col_space = SobolevTag::HalfPlus;
    return op;
}

} // namespace

BoundaryOperator dtn_minus(const BoundaryMesh& mesh, Kappa kappa) {
    return dtn_impl(mesh, kappa, +1.0); // Q^- = S^{-1}(1/2 + D)
}

BoundaryOperator dtn_plus(const BoundaryMesh& mesh, Kappa kappa) {
    return dtn_impl(mesh, kappa, -1.0); // Q^+ = S^{-1}(1/2 - D)
}

TransmissionOperators transmission_reduced(const BoundaryMesh& mesh, Kappa kappa,
                                           const TransmissionParams& p) {
    if (!(p.kappa_plus > 0 && p.kappa_minus > 0 && p.nu0 > 0 && p.nu1 > 0))
        throw std::invalid_argument("transmission_reduced: parameters must be positive");
    const Kappa kp(kappa.value / p.kappa_plus);
    const Kappa km(kappa.value / p.kappa_minus);
    const Eigen::MatrixXd S = assemble_S(mesh, kp).matrix;
    const Eigen::MatrixXd D = assemble_D(mesh, kp).matrix;
    const Eigen::MatrixXd Q = dtn_minus(mesh, km).matrix;
    const std::size_t n = mesh.size();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);

    auto zero_cross = [&](Eigen::MatrixXd m) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (mesh.component_id[i] != mesh.component_id[j]) m(i, j) = 0.0;
        return m;
    };

    TransmissionOperators out;
    out.full.matrix = -p.nu0 * (0.5 * id - D) - p.nu1 * S * Q;
    out.diag.matrix = -p.nu0 * (0.5 * id - zero_cross(D)) - p.nu1 * zero_cross(S) * Q;
    out.full.mesh = out.diag.mesh = &mesh;
    out.full.kappa = out.diag.kappa = kappa.value;
    return out;
}

} // namespace relspec
