#include "relspec/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace relspec {

namespace {

struct TrigEval {
    Point2 p, v, a;
};

TrigEval eval_trig(const TrigCurve& c, double t) {
    TrigEval e;
    auto accum = [&](const std::vector<double>& cc, const std::vector<double>& ss,
                     double& p, double& v, double& a) {
        for (std::size_t k = 0; k < cc.size(); ++k) {
            const double kk = static_cast<double>(k);
            p += cc[k] * std::cos(kk * t);
            v += -cc[k] * kk * std::sin(kk * t);
            a += -cc[k] * kk * kk * std::cos(kk * t);
        }
        for (std::size_t k = 0; k < ss.size(); ++k) {
            const double kk = static_cast<double>(k + 1);
            p += ss[k] * std::sin(kk * t);
            v += ss[k] * kk * std::cos(kk * t);
            a += -ss[k] * kk * kk * std::sin(kk * t);
        }
    };
    accum(c.x_cos, c.x_sin, e.p.x, e.v.x, e.a.x);
    accum(c.y_cos, c.y_sin, e.p.y, e.v.y, e.a.y);
    return e;
}

// Gauss-Legendre nodes/weights on [-1,1], orders used for polygon panels.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            const double dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
            const double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
        }
        const double dp = n * (z * p0 - p1) / (z * z - 1.0);
        x[i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
}

void append_smooth(BoundaryMesh& mesh, const Curve& curve, int n, int comp) {
    if (n < 8 || n % 2 != 0)
        throw std::invalid_argument("discretize: smooth components need even n >= 8");
    const std::size_t begin = mesh.size();
    const double h = 2.0 * M_PI / n;
    for (int i = 0; i < n; ++i) {
        const double t = i * h;
        const Point2 p = curve_point(curve, t);
        const Point2 v = curve_velocity(curve, t);
        const Point2 a = curve_acceleration(curve, t);
        const double sp = std::sqrt(dot(v, v));
        if (!(sp > 0.0))
            throw std::invalid_argument("discretize: degenerate parametrization");
        mesh.nodes.push_back(p);
        mesh.speed.push_back(sp);
        mesh.param.push_back(t);
        mesh.weights.push_back(sp * h);
        mesh.tangents.push_back({v.x / sp, v.y / sp});
        // CCW orientation: outward normal is the tangent rotated by -pi/2
        mesh.normals.push_back({v.y / sp, -v.x / sp});
        mesh.curvature.push_back((v.x * a.y - v.y * a.x) / (sp * sp * sp));
        mesh.component_id.push_back(comp);
    }
    mesh.component_ranges.emplace_back(begin, mesh.size());
    mesh.component_smooth.push_back(true);
}

void append_polygon(BoundaryMesh& mesh, const PolygonCurve& poly, int n, int comp,
                    const DiscretizeOptions& opts) {
    const std::size_t nv = poly.vertices.size();
    if (nv < 3) throw std::invalid_argument("discretize: polygon needs >= 3 vertices");
    for (std::size_t i = 0; i < nv; ++i) {
        const Point2 a = poly.vertices[i];
        const Point2 b = poly.vertices[(i + 1) % nv];
        const Point2 c = poly.vertices[(i + 2) % nv];
        const Point2 ab = b - a, bc = c - b;
        if (std::abs(ab.x * bc.y - ab.y * bc.x) < 1e-14 * (dot(ab, ab) + dot(bc, bc)))
            throw std::invalid_argument("discretize: degenerate polygon vertices");
    }
    const std::size_t begin = mesh.size();
    const int per_edge = std::max(1, static_cast<int>(n / nv));
    // panels graded toward both corners of each edge: split [0,1] at 1/2,
    // each half subdivided with breakpoints (j/m)^q from its corner.
    const int panels_half = std::max(1, per_edge / (2 * opts.panel_order));
    std::vector<double> gx, gw;
    gauss_legendre(opts.panel_order, gx, gw);
    const double q = opts.polygon_grading;
    for (std::size_t i = 0; i < nv; ++i) {
        const Point2 a = poly.vertices[i];
        const Point2 b = poly.vertices[(i + 1) % nv];
        const Point2 e = b - a;
        const double len = std::sqrt(dot(e, e));
        const Point2 tang{e.x / len, e.y / len};
        const Point2 norm{tang.y, -tang.x};
        std::vector<double> brk;
        for (int j = 0; j <= panels_half; ++j)
            brk.push_back(0.5 * std::pow(static_cast<double>(j) / panels_half, q));
        std::vector<double> all(brk);
        for (int j = panels_half - 1; j >= 0; --j) all.push_back(1.0 - brk[j]);
        for (std::size_t p = 0; p + 1 < all.size(); ++p) {
            const double lo = all[p], hi = all[p + 1];
            for (int g = 0; g < opts.panel_order; ++g) {
                const double s = 0.5 * (lo + hi) + 0.5 * (hi - lo) * gx[g];
                mesh.nodes.push_back(a + s * e);
                mesh.weights.push_back(0.5 * (hi - lo) * gw[g] * len);
                mesh.tangents.push_back(tang);
                mesh.normals.push_back(norm);
                mesh.speed.push_back(len);
                mesh.param.push_back(0.0);
                mesh.curvature.push_back(0.0);
                mesh.component_id.push_back(comp);
            }
        }
    }
    mesh.component_ranges.emplace_back(begin, mesh.size());
    mesh.component_smooth.push_back(false);
}

std::vector<Point2> sample_curve(const Curve& c, int n) {
    std::vector<Point2> pts;
    pts.reserve(n);
    if (const auto* poly = std::get_if<PolygonCurve>(&c)) {
        const std::size_t nv = poly->vertices.size();
        const int per = std::max(2, n / static_cast<int>(nv));
        for (std::size_t i = 0; i < nv; ++i) {
            const Point2 a = poly->vertices[i];
            const Point2 b = poly->vertices[(i + 1) % nv];
            for (int j = 0; j < per; ++j)
                pts.push_back(a + (static_cast<double>(j) / per) * (b - a));
        }
        return pts;
    }
    for (int i = 0; i < n; ++i)
        pts.push_back(curve_point(c, 2.0 * M_PI * i / n));
    return pts;
}

} // namespace

Point2 curve_point(const Curve& c, double t) {
    if (const auto* ci = std::get_if<CircleCurve>(&c))
        return {ci->center.x + ci->radius * std::cos(t), ci->center.y + ci->radius * std::sin(t)};
    if (const auto* tr = std::get_if<TrigCurve>(&c)) return eval_trig(*tr, t).p;
    throw std::invalid_argument("curve_point: polygon curves have no smooth parameter");
}

Point2 curve_velocity(const Curve& c, double t) {
    if (const auto* ci = std::get_if<CircleCurve>(&c))
        return {-ci->radius * std::sin(t), ci->radius * std::cos(t)};
    if (const auto* tr = std::get_if<TrigCurve>(&c)) return eval_trig(*tr, t).v;
    throw std::invalid_argument("curve_velocity: polygon curves have no smooth parameter");
}

Point2 curve_acceleration(const Curve& c, double t) {
    if (const auto* ci = std::get_if<CircleCurve>(&c))
        return {-ci->radius * std::cos(t), -ci->radius * std::sin(t)};
    if (const auto* tr = std::get_if<TrigCurve>(&c)) return eval_trig(*tr, t).a;
    throw std::invalid_argument("curve_acceleration: polygon curves have no smooth parameter");
}

BoundaryMesh discretize(const Configuration& config, const std::vector<int>& n_per_component,
                        const DiscretizeOptions& opts) {
    if (config.components.empty())
        throw std::invalid_argument("discretize: empty configuration");
    if (n_per_component.size() != config.components.size())
        throw std::invalid_argument("discretize: n_per_component size mismatch");
    if (config.components.size() >= 2 && !(min_separation(config) > 0.0))
        throw std::invalid_argument("discretize: components overlap or touch");

    BoundaryMesh mesh;
    for (std::size_t c = 0; c < config.components.size(); ++c) {
        const int n = n_per_component[c];
        if (n < 8) throw std::invalid_argument("discretize: need n >= 8 per component");
        if (const auto* poly = std::get_if<PolygonCurve>(&config.components[c]))
            append_polygon(mesh, *poly, n, static_cast<int>(c), opts);
        else
            append_smooth(mesh, config.components[c], n, static_cast<int>(c));
    }
    return mesh;
}

double min_separation(const Configuration& config) {
    const std::size_t m = config.components.size();
    if (m < 2)
        throw std::invalid_argument("min_separation: no relative quantity defined for a single component");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const auto* ci = std::get_if<CircleCurve>(&config.components[i]);
            const auto* cj = std::get_if<CircleCurve>(&config.components[j]);
            double d;
            if (ci && cj) {
                const Point2 r = ci->center - cj->center;
                d = std::sqrt(dot(r, r)) - ci->radius - cj->radius;
            } else {
                const auto pi = sample_curve(config.components[i], 512);
                const auto pj = sample_curve(config.components[j], 512);
                d = std::numeric_limits<double>::infinity();
                for (const auto& a : pi)
                    for (const auto& b : pj) {
                        const Point2 r = a - b;
                        d = std::min(d, std::sqrt(dot(r, r)));
                    }
            }
            best = std::min(best, d);
        }
    }
    return best;
}

} // namespace relspec
