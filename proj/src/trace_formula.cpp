#include "relspec/trace_formula.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace relspec {

namespace {

// Gauss-Kronrod (G7, K15) nodes and weights on [-1, 1].
constexpr double kKronrodX[8] = {
    0.000000000000000000000000000000000, 0.207784955007898467600689403773245,
    0.405845151377397166906606412076961, 0.586087235467691130294144838258730,
    0.741531185599394439863864773280788, 0.864864423359769072789712788640926,
    0.949107912342758524526189684047851, 0.991455371120812639206854697526329};
constexpr double kKronrodW[8] = {
    0.209482141084727828012999174891714, 0.204432940075298892414161999234649,
    0.190350578064785409913256402421014, 0.169004726639267902826583426598550,
    0.140653259715525918745189590510238, 0.104790010322250183839876322541518,
    0.063092092629978553290700663189204, 0.022935322010529224963732008058970};
constexpr double kGaussW[4] = {
    0.417959183673469387755102040816327, 0.381830050505118944950369775488975,
    0.279705391489276667901467771423780, 0.129484966168869693270611432679082};

struct GKResult {
    double value;
    double error;
};

GKResult gk15(const std::function<double(double)>& f, double a, double b, long& n_eval) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fv[15];
    fv[7] = f(c);
    for (int i = 1; i <= 7; ++i) {
        fv[7 - i] = f(c - h * kKronrodX[i]);
        fv[7 + i] = f(c + h * kKronrodX[i]);
    }
    n_eval += 15;
    double kron = kKronrodW[0] * fv[7];
    for (int i = 1; i <= 7; ++i) kron += kKronrodW[i] * (fv[7 - i] + fv[7 + i]);
    double gauss = kGaussW[0] * fv[7];
    for (int i = 1; i <= 3; ++i) gauss += kGaussW[i] * (fv[7 - 2 * i] + fv[7 + 2 * i]);
    kron *= h;
    gauss *= h;
    return {kron, std::abs(kron - gauss)};
}

// Recursive bisection against a length-proportional share of the global
// error budget, so the work is bounded independently of how small the
// local values are.
void adapt(const std::function<double(double)>& f, double a, double b, double tol_budget,
           int depth, double& acc, double& err, long& n_eval) {
    const GKResult r = gk15(f, a, b, n_eval);
    if (!std::isfinite(r.value)) throw std::runtime_error("adaptive_gk: non-finite integrand");
    if (depth <= 0 || r.error <= tol_budget) {
        acc += r.value;
        err += r.error;
        return;
    }
    const double c = 0.5 * (a + b);
    adapt(f, a, c, 0.5 * tol_budget, depth - 1, acc, err, n_eval);
    adapt(f, c, b, 0.5 * tol_budget, depth - 1, acc, err, n_eval);
}

} // namespace

double adaptive_gk(const std::function<double(double)>& f, double a, double b, double rel_tol,
                   double abs_tol, int max_depth, double& err_out, long& n_eval) {
    const GKResult first = gk15(f, a, b, n_eval);
    const double tol = std::max(abs_tol, rel_tol * std::abs(first.value));
    double acc = 0.0;
    err_out = 0.0;
    adapt(f, a, b, tol, std::min(max_depth, 30), acc, err_out, n_eval);
    return acc;
}

EnergyResult trace_rs(const std::function<double(double)>& xi_fn, double s, double m,
                      const TraceOptions& opts) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("trace_rs: s must be in (0,1)");
    if (m < 0.0) throw std::invalid_argument("trace_rs: mass must be >= 0");

    EnergyResult res;
    const double pref = (2.0 * s / M_PI) * std::sin(M_PI * s);

    // Exponential decay fit for truncation: |Xi| ~ e^{c + beta k}.
    const double k_fit0 = std::max({2.0 * m + 1.0, 10.0 * opts.kappa_min, 1.0});
    std::vector<std::pair<double, double>> fit_pts;
    double k_probe = k_fit0;
    for (int j = 0; j < 24 && fit_pts.size() < 6; ++j) {
        const double v = std::abs(xi_fn(k_probe));
        ++res.n_evaluations;
        if (v > 0.0 && std::isfinite(std::log(v))) fit_pts.emplace_back(k_probe, std::log(v));
        if (v == 0.0) break;
        k_probe *= 1.5;
    }
    double beta = -1.0;
    if (fit_pts.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto [x, y] : fit_pts) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double n = static_cast<double>(fit_pts.size());
        beta = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        if (!(beta < 0.0)) {
            std::ostringstream os;
            os << "trace_rs: Xi samples do not decay (fitted rate " << beta << ")";
            throw std::runtime_error(os.str());
        }
    }

    double acc = 0.0, err = 0.0;

    if (m == 0.0) {
        // int_0^K k^{2s-1} Xi(ik) dk; below k=1 substitute k = e^u so the
        // endpoint (log-singular Xi, power weight) becomes smooth decay.
        // The strip [0, kappa_min] is not dropped: with Xi frozen at the
        // cutoff it contributes Xi(kappa_min) kappa_min^{2s}/(2s), and the
        // variation of Xi across the strip bounds the error of doing so.
        const double strip = std::pow(opts.kappa_min, 2.0 * s) / (2.0 * s);
        const double xi_cut = xi_fn(opts.kappa_min);
        const double xi_half = xi_fn(0.5 * opts.kappa_min);
        res.n_evaluations += 2;
        acc += xi_cut * strip;
        err += std::abs(xi_half - xi_cut) * strip;
        const double u_min = std::log(opts.kappa_min);
        auto f_log = [&](double u) {
            const double k = std::exp(u);
            return std::exp(2.0 * s * u) * xi_fn(k);
        };
        acc += adaptive_gk(f_log, u_min, 0.0, opts.rel_tol, opts.abs_tol, opts.max_depth, err,
                           res.n_evaluations);
        double e2 = 0.0;
        auto f_lin = [&](double k) { return std::pow(k, 2.0 * s - 1.0) * xi_fn(k); };
        double k_lo = 1.0;
        double k_hi = std::max(2.0, k_fit0);
        while (true) {
            // Budget each window against the global integral, not its own
            // (possibly tiny) value, so windows in the decaying tail cannot
            // demand tolerances below the Xi evaluation noise floor.
            const double abs_eff =
                std::max(opts.abs_tol, 0.1 * opts.rel_tol * std::abs(acc));
            const double piece = adaptive_gk(f_lin, k_lo, k_hi, opts.rel_tol, abs_eff,
                                             opts.max_depth, e2, res.n_evaluations);
            acc += piece;
            err += e2;
            e2 = 0.0;
            const double scale = std::max(std::abs(acc), opts.abs_tol / opts.rel_tol);
            if (std::abs(piece) < 0.5 * opts.rel_tol * scale || k_hi > 1e6) break;
            if (opts.kappa_max > 0.0 && k_hi >= opts.kappa_max) break;
            k_lo = k_hi;
            k_hi *= 1.6;
        }
        res.kappa_max = k_hi;
        const double tail = std::abs(std::pow(k_hi, 2.0 * s - 1.0) * xi_fn(k_hi)) / -beta;
        ++res.n_evaluations;
        err += tail;
    } else {
        // lambda = m cosh u removes the (k^2-m^2)^{s-1} endpoint singularity:
        // integrand m^{2s} cosh u sinh^{2s-1} u Xi(m cosh u).
        auto f_sub = [&](double u) {
            const double sh = std::sinh(u), ch = std::cosh(u);
            return std::pow(m, 2.0 * s) * ch * std::pow(sh, 2.0 * s - 1.0) * xi_fn(m * ch);
        };
        double u_lo = 0.0;
        double u_hi = std::acosh(std::max(2.0, k_fit0) / m);
        while (true) {
            double e2 = 0.0;
            const double abs_eff =
                std::max(opts.abs_tol, 0.1 * opts.rel_tol * std::abs(acc));
            const double piece = adaptive_gk(f_sub, u_lo, u_hi, opts.rel_tol, abs_eff,
                                             opts.max_depth, e2, res.n_evaluations);
            acc += piece;
            err += e2;
            const double scale = std::max(std::abs(acc), opts.abs_tol / opts.rel_tol);
            if (std::abs(piece) < 0.5 * opts.rel_tol * scale || m * std::cosh(u_hi) > 1e6) break;
            u_lo = u_hi;
            u_hi += 1.0;
        }
        res.kappa_max = m * std::cosh(u_hi);
        const double k_end = res.kappa_max;
        const double w_end = k_end * std::pow(k_end * k_end - m * m, s - 1.0);
        const double tail = std::abs(w_end * xi_fn(k_end)) / -beta;
        ++res.n_evaluations;
        err += tail;
    }

    res.value = pref * acc;
    res.abs_error_estimate = std::abs(pref) * err;
    return res;
}

EnergyResult casimir_energy_from_xi(const std::function<double(double)>& xi_fn, double m,
                                    const TraceOptions& opts) {
    EnergyResult r = trace_rs(xi_fn, 0.5, m, opts);
    r.value *= 0.5;
    r.abs_error_estimate *= 0.5;
    return r;
}

EnergyResult casimir_energy(BoundaryCondition bc, const Configuration& config,
                            const std::vector<int>& n_per_component,
                            const std::optional<TransmissionParams>& params, double m,
                            const TraceOptions& opts) {
    const BoundaryMesh mesh = discretize(config, n_per_component);
    const double delta = min_separation(config);
    std::map<double, double> cache;
    auto xi_fn = [&](double k) {
        const double kk = std::max(k, opts.kappa_min);
        auto it = cache.find(kk);
        if (it != cache.end()) return it->second;
        const double v = xi_value(bc, mesh, Kappa(kk), params);
        cache.emplace(kk, v);
        return v;
    };
    EnergyResult r = casimir_energy_from_xi(xi_fn, m, opts);
    if (r.kappa_max * delta < 20.0) {
        r.warnings.push_back("kappa grid may not resolve the separation scale");
    }
    return r;
}

} // namespace relspec
