#include "relspec/multipole.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "relspec/linalg.hpp"

namespace relspec::multipole {

namespace {

// Sequences are carried in long double: for small kappa*b the translation
// coefficients K_m(kappa b) overflow double long before the bounded
// products I_m I_n K_{m-n} are formed.
std::vector<long double> i_seq(int n, double z) {
    const int start = std::max(n + 1, static_cast<int>(z)) + 30 + n / 2;
    std::vector<long double> work(start + 2, 0.0L);
    work[start + 1] = 0.0L;
    work[start] = 1e-280L;
    for (int m = start; m >= 1; --m) {
        work[m - 1] = work[m + 1] + (2.0L * m / z) * work[m];
        if (work[m - 1] > 1e250L) {
            for (int q = m - 1; q <= start + 1; ++q) work[q] *= 1e-250L;
        }
    }
    long double norm = work[0];
    for (int m = 1; m <= start; ++m) norm += 2.0L * work[m];
    const long double scale = std::exp(static_cast<long double>(z)) / norm;
    work.resize(n + 1);
    for (auto& v : work) v *= scale;
    return work;
}

std::vector<long double> k_seq(int n, double z) {
    std::vector<long double> out(std::max(n + 1, 2));
    out[0] = specfun::bessel_k0(z);
    out[1] = specfun::bessel_k1(z);
    for (int m = 1; m < n; ++m) out[m + 1] = out[m - 1] + (2.0L * m / z) * out[m];
    out.resize(n + 1);
    return out;
}

long double bessel_ip(const std::vector<long double>& I, int m, double z) {
    return (m == 0) ? I[1] : I[m - 1] - (static_cast<long double>(m) / z) * I[m];
}

long double bessel_kp(const std::vector<long double>& K, int m, double z) {
    return (m == 0) ? -K[1] : -K[m - 1] - (static_cast<long double>(m) / z) * K[m];
}

struct Disc {
    double radius;
    std::vector<long double> f;  // outgoing-to-boundary factor per mode 0..L
    std::vector<long double> g;  // regular-to-boundary factor per mode 0..L
    std::vector<long double> diag;
};

// Xi at fixed truncation L for n_d discs; complex block determinant with
// Graf phases e^{-i(m-n) alpha} between centers.
double xi_fixed_L(double kappa, const std::vector<Point2>& centers,
                  const std::vector<double>& radii, BoundaryCondition bc, int L) {
    const int nd = static_cast<int>(centers.size());
    const int nm = 2 * L + 1;
    const double fac = (bc == BoundaryCondition::Neumann) ? kappa * kappa : 1.0;

    std::vector<Disc> discs(nd);
    for (int a = 0; a < nd; ++a) {
        const double z = kappa * radii[a];
        const std::vector<long double> I = i_seq(L + 1, z);
        const std::vector<long double> K = k_seq(L + 1, z);
        Disc& d = discs[a];
        d.radius = radii[a];
        d.f.resize(L + 1);
        d.g.resize(L + 1);
        d.diag.resize(L + 1);
        for (int m = 0; m <= L; ++m) {
            if (bc == BoundaryCondition::Neumann) {
                d.f[m] = bessel_ip(I, m, z);
                d.diag[m] = static_cast<long double>(fac) * radii[a] * bessel_ip(I, m, z) *
                            bessel_kp(K, m, z);
            } else {
                d.f[m] = I[m];
                d.diag[m] = static_cast<long double>(radii[a]) * I[m] * K[m];
            }
            d.g[m] = d.f[m];
        }
    }

    const int dim = nd * nm;
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd Ad = Eigen::MatrixXcd::Zero(dim, dim);
    for (int a = 0; a < nd; ++a)
        for (int i = 0; i < nm; ++i) {
            const int m = i - L;
            A(a * nm + i, a * nm + i) = static_cast<double>(discs[a].diag[std::abs(m)]);
            Ad(a * nm + i, a * nm + i) = static_cast<double>(discs[a].diag[std::abs(m)]);
        }

    for (int a = 0; a < nd; ++a) {
        for (int b = 0; b < nd; ++b) {
            if (a == b) continue;
            const double dx = centers[b].x - centers[a].x;
            const double dy = centers[b].y - centers[a].y;
            const double sep = std::hypot(dx, dy);
            const double alpha = std::atan2(dy, dx);
            const std::vector<long double> Kt = k_seq(2 * L, kappa * sep);
            for (int i = 0; i < nm; ++i) {
                const int m = i - L;
                for (int j = 0; j < nm; ++j) {
                    const int n = j - L;
                    const long double par = (n % 2 == 0) ? 1.0L : -1.0L;
                    const double mag = static_cast<double>(
                        par * discs[b].radius * fac *
                        (discs[a].f[std::abs(m)] * Kt[std::abs(m - n)]) *
                        discs[b].g[std::abs(n)]);
                    const std::complex<double> ph =
                        std::polar(1.0, -static_cast<double>(m - n) * alpha);
                    A(a * nm + i, b * nm + j) = mag * ph;
                }
            }
        }
    }

    const LogDet la = log_abs_det(A);
    const LogDet ld = log_abs_det(Ad);
    if (la.sign * ld.sign <= 0) throw std::runtime_error("multipole: determinant sign mismatch");
    return la.log_abs - ld.log_abs;
}

} // namespace

std::vector<double> bessel_i_seq(int n, double z) {
    if (!(z > 0.0)) throw std::invalid_argument("bessel_i_seq: z must be > 0");
    const std::vector<long double> w = i_seq(n, z);
    return std::vector<double>(w.begin(), w.end());
}

std::vector<double> bessel_k_seq(int n, double z) {
    if (!(z > 0.0)) throw std::invalid_argument("bessel_k_seq: z must be > 0");
    const std::vector<long double> w = k_seq(n, z);
    return std::vector<double>(w.begin(), w.end());
}

CircleModes circle_mode_values(double kappa, double radius, int L) {
    if (!(kappa > 0.0 && radius > 0.0)) throw std::invalid_argument("kappa, radius must be > 0");
    const double z = kappa * radius;
    const std::vector<long double> I = i_seq(L + 1, z);
    const std::vector<long double> K = k_seq(L + 1, z);
    CircleModes cm;
    cm.L = L;
    cm.S.resize(2 * L + 1);
    cm.N.resize(2 * L + 1);
    cm.Q.resize(2 * L + 1);
    for (int i = 0; i <= 2 * L; ++i) {
        const int m = std::abs(i - L);
        const long double ip = bessel_ip(I, m, z);
        const long double q = kappa * ip / I[m];
        // D'_m = z I'_m K_m - 1/2; N through N = -(1/2 - D') Q^-.
        const long double dp = z * ip * K[m] - 0.5L;
        cm.S[i] = static_cast<double>(radius * I[m] * K[m]);
        cm.Q[i] = static_cast<double>(q);
        cm.N[i] = static_cast<double>(-(0.5L - dp) * q);
    }
    return cm;
}

MultipoleResult xi_discs(double kappa, const std::vector<Point2>& centers,
                         const std::vector<double>& radii, BoundaryCondition bc, int L_start) {
    if (centers.size() != radii.size())
        throw std::invalid_argument("xi_discs: centers/radii size mismatch");
    if (bc == BoundaryCondition::Transmission)
        throw std::invalid_argument("xi_discs: transmission not supported by this oracle");
    if (centers.size() <= 1) return {0.0, L_start, 0.0};
    for (size_t a = 0; a < centers.size(); ++a)
        for (size_t b = a + 1; b < centers.size(); ++b) {
            const double sep = std::hypot(centers[a].x - centers[b].x,
                                          centers[a].y - centers[b].y);
            if (!(sep > radii[a] + radii[b]))
                throw std::invalid_argument("xi_discs: discs must be disjoint");
        }

    constexpr int kLMax = 64;
    constexpr double kTailTol = 1e-12;
    int L = std::max(4, L_start);
    double prev = xi_fixed_L(kappa, centers, radii, bc, L);
    while (L < kLMax) {
        const int L2 = std::min(L + 4, kLMax);
        const double next = xi_fixed_L(kappa, centers, radii, bc, L2);
        const double tail = std::abs(next - prev);
        if (tail < kTailTol) return {next, L2, tail};
        prev = next;
        L = L2;
    }
    std::ostringstream os;
    os << "xi_discs: not converged at L=" << kLMax << " (kappa=" << kappa << ")";
    throw std::runtime_error(os.str());
}

} // namespace relspec::multipole
