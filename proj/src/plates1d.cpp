#include "relspec/plates1d.hpp"

#include <cmath>
#include <stdexcept>

#include "relspec/linalg.hpp"

namespace relspec {

namespace {

void check_positive(double v, const char* name) {
    if (!(v > 0.0)) throw std::invalid_argument(std::string(name) + " must be > 0");
}

// Semi-infinite quadrature [0, inf) for integrands with exponential decay:
// geometric extension until a window contributes below tolerance.
double semi_infinite(const std::function<double(double)>& f, double first_window,
                     const TraceOptions& opts, double& err, long& n_eval) {
    double acc = 0.0;
    double lo = 0.0, hi = first_window;
    for (int j = 0; j < 64; ++j) {
        double e = 0.0;
        const double piece =
            adaptive_gk(f, lo, hi, opts.rel_tol, opts.abs_tol, opts.max_depth, e, n_eval);
        acc += piece;
        err += e;
        const double scale = std::max(std::abs(acc), opts.abs_tol / opts.rel_tol);
        if (std::abs(piece) < 0.25 * opts.rel_tol * scale) break;
        lo = hi;
        hi *= 1.7;
    }
    return acc;
}

} // namespace

PlateLayers1D layer_matrices_1d(double kappa, double a_gap) {
    check_positive(kappa, "kappa");
    check_positive(a_gap, "a_gap");
    const double e = std::exp(-kappa * a_gap);
    PlateLayers1D out;
    out.S << 1.0, e, e, 1.0;
    out.S *= 1.0 / (2.0 * kappa);
    out.D << 0.0, e, e, 0.0;
    out.D *= -0.5;
    out.N << -1.0, e, e, -1.0;
    out.N *= 0.5 * kappa;
    return out;
}

double xi_point_plates(double kappa, double a_gap) {
    check_positive(kappa, "kappa");
    check_positive(a_gap, "a_gap");
    return std::log1p(-std::exp(-2.0 * kappa * a_gap));
}

EnergyResult energy_point_plates(double a_gap, double m, const TraceOptions& opts) {
    check_positive(a_gap, "a_gap");
    TraceOptions o = opts;
    // Xi ~ log(2 kappa a) near 0: the log endpoint needs a deep cutoff for
    // the u = log kappa segment of trace_rs to converge in relative terms.
    o.kappa_min = std::min(o.kappa_min, 1e-12 / a_gap);
    return casimir_energy_from_xi([a_gap](double k) { return xi_point_plates(k, a_gap); }, m, o);
}

EnergyResult energy_plates_per_area(double a_gap, double m, double s, const TraceOptions& opts) {
    check_positive(a_gap, "a_gap");
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("s must be in (0,1)");
    EnergyResult res;
    const double pref = -1.0 / (2.0 * M_PI * std::tgamma(-s) * std::tgamma(1.0 + s));
    auto f = [&](double l) {
        const double lam = m + l;
        const double w = lam * std::pow(lam * lam - m * m, s);
        return w * xi_point_plates(lam, a_gap);
    };
    double err = 0.0;
    const double acc = semi_infinite(f, std::max(1.0, 2.0 * m) / a_gap, opts, err, res.n_evaluations);
    res.value = 0.5 * pref * acc;
    res.abs_error_estimate = std::abs(0.5 * pref) * err;
    return res;
}

double slab_eta(double t, double kappa_medium, double xi) {
    return std::hypot(t / kappa_medium, xi);
}

double reflection_coefficient(double t, double xi, const TransmissionParams& media) {
    check_positive(t, "t");
    if (xi < 0.0) throw std::invalid_argument("xi must be >= 0");
    const double ep = slab_eta(t, media.kappa_plus, xi);
    const double em = slab_eta(t, media.kappa_minus, xi);
    const double kp2 = media.kappa_plus * media.kappa_plus;
    const double km2 = media.kappa_minus * media.kappa_minus;
    return (km2 * em - kp2 * ep) / (km2 * em + kp2 * ep);
}

double xi_slabs(double t, double xi, double d_gap, double a_thickness,
                const TransmissionParams& media) {
    check_positive(d_gap, "d_gap");
    check_positive(a_thickness, "a_thickness");
    const double ep = slab_eta(t, media.kappa_plus, xi);
    const double em = slab_eta(t, media.kappa_minus, xi);
    const double R = reflection_coefficient(t, xi, media);
    const double q = 1.0 - R * R * std::exp(-2.0 * a_thickness * em);
    const double p = 1.0 - std::exp(-2.0 * a_thickness * em);
    const double num = q * q - R * R * std::exp(-2.0 * d_gap * ep) * p * p;
    return std::log(num / (q * q));
}

double xi_slabs_lifshitz(double t, double xi, double d_gap, const TransmissionParams& media) {
    check_positive(d_gap, "d_gap");
    const double ep = slab_eta(t, media.kappa_plus, xi);
    const double R = reflection_coefficient(t, xi, media);
    return std::log1p(-R * R * std::exp(-2.0 * d_gap * ep));
}

double cauchy_oracle_slabs(double t, double xi, double d_gap, double a_thickness,
                           const TransmissionParams& media) {
    check_positive(d_gap, "d_gap");
    check_positive(a_thickness, "a_thickness");
    const double ep = slab_eta(t, media.kappa_plus, xi);
    const double em = slab_eta(t, media.kappa_minus, xi);

    // Slabs [-d/2-a, -d/2] and [d/2, d/2+a]; outward normals on the line.
    const double xs[4] = {-0.5 * d_gap - a_thickness, -0.5 * d_gap, 0.5 * d_gap,
                          0.5 * d_gap + a_thickness};
    const double nu[4] = {-1.0, 1.0, -1.0, 1.0};
    const int comp[4] = {0, 0, 1, 1};

    Eigen::Matrix4d S = Eigen::Matrix4d::Zero();
    Eigen::Matrix4d D = Eigen::Matrix4d::Zero();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double r = std::abs(xs[i] - xs[j]);
            S(i, j) = std::exp(-ep * r) / (2.0 * ep);
            if (i != j)
                D(i, j) = nu[j] * ((xs[i] > xs[j]) ? 1.0 : -1.0) * std::exp(-ep * r) / 2.0;
        }
    }

    // Interior Dirichlet-to-Neumann of a slab of thickness a at exponent
    // eta_minus: maps endpoint values to inward-derivative data.
    const double c = std::cosh(em * a_thickness);
    const double s = std::sinh(em * a_thickness);
    if (!(s > 0.0)) throw std::invalid_argument("degenerate slab DtN");
    Eigen::Matrix4d Q = Eigen::Matrix4d::Zero();
    Eigen::Matrix2d Qb;
    Qb << c, -1.0, -1.0, c;
    Qb *= em / s;
    Q.block<2, 2>(0, 0) = Qb;
    Q.block<2, 2>(2, 2) = Qb;

    Eigen::Matrix4d Sd = S, Dd = D;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (comp[i] != comp[j]) {
                Sd(i, j) = 0.0;
                Dd(i, j) = 0.0;
            }

    const Eigen::Matrix4d I = Eigen::Matrix4d::Identity();
    const Eigen::Matrix4d H = -media.nu0 * (0.5 * I - D) - media.nu1 * S * Q;
    const Eigen::Matrix4d Hd = -media.nu0 * (0.5 * I - Dd) - media.nu1 * Sd * Q;

    const LogDet lh = log_abs_det(Eigen::MatrixXd(H));
    const LogDet ld = log_abs_det(Eigen::MatrixXd(Hd));
    if (lh.sign * ld.sign <= 0) throw std::runtime_error("cauchy_oracle_slabs: sign mismatch");
    return lh.log_abs - ld.log_abs;
}

EnergyResult casimir_per_area_slabs(double d_gap, double a_thickness,
                                    const TransmissionParams& media, bool lifshitz,
                                    const TraceOptions& opts) {
    EnergyResult res;
    // E = (1/8 pi^3) int_0^inf dt int_{R^2} dxi Xi_T(it, xi)
    //   = (1/4 pi^2) int_0^inf dt int_0^inf xi Xi_T dxi.
    TraceOptions inner = opts;
    inner.rel_tol = std::max(opts.rel_tol, 1e-9);
    double err_outer = 0.0;
    auto outer = [&](double t) {
        auto f = [&](double xi) {
            const double v = lifshitz ? xi_slabs_lifshitz(t, xi, d_gap, media)
                                      : xi_slabs(t, xi, d_gap, a_thickness, media);
            return xi * v;
        };
        double err_inner = 0.0;
        return semi_infinite(f, std::max(1.0, t) / d_gap, inner, err_inner, res.n_evaluations);
    };
    const double acc =
        semi_infinite(outer, media.kappa_plus / d_gap, opts, err_outer, res.n_evaluations);
    res.value = acc / (4.0 * M_PI * M_PI);
    res.abs_error_estimate = err_outer / (4.0 * M_PI * M_PI) + 4.0 * inner.rel_tol * std::abs(res.value);
    return res;
}

double resolvent_rel_diag_neumann_1d(double kappa, double a_gap, double x) {
    check_positive(kappa, "kappa");
    check_positive(a_gap, "a_gap");
    const double k = kappa, a = a_gap;
    const double free_diag = 1.0 / (2.0 * k);
    double cfg, s1, s2;
    if (x < 0.0) {
        const double u = -x;
        cfg = (1.0 + std::exp(-2.0 * k * u)) * free_diag;
        s1 = cfg;
        s2 = (1.0 + std::exp(-2.0 * k * (u + a))) * free_diag;
    } else if (x > a) {
        const double u = x - a;
        cfg = (1.0 + std::exp(-2.0 * k * u)) * free_diag;
        s2 = cfg;
        s1 = (1.0 + std::exp(-2.0 * k * (u + a))) * free_diag;
    } else {
        cfg = std::cosh(k * x) * std::cosh(k * (a - x)) / (k * std::sinh(k * a));
        s1 = (1.0 + std::exp(-2.0 * k * x)) * free_diag;
        s2 = (1.0 + std::exp(-2.0 * k * (a - x))) * free_diag;
    }
    return cfg - s1 - s2 + free_diag;
}

} // namespace relspec
