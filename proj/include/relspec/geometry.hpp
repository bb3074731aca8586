#pragma once

#include "relspec/specfun.hpp"

#include <cstddef>
#include <variant>
#include <vector>

// Multi-component 2D obstacle boundaries and their Nystroem discretizations.

namespace relspec {

struct CircleCurve {
    Point2 center;
    double radius;
};

/// Smooth closed curve given by truncated trigonometric series
///   gamma(t) = (ax0 + sum ax_c[k] cos(kt) + ax_s[k] sin(kt), ... same for y)
/// with t in [0, 2pi).  Must be simple and counterclockwise.
struct TrigCurve {
    std::vector<double> x_cos, x_sin; // x_cos[0] is the constant term
    std::vector<double> y_cos, y_sin;
};

struct PolygonCurve {
    std::vector<Point2> vertices; // counterclockwise
};

using Curve = std::variant<CircleCurve, TrigCurve, PolygonCurve>;

struct Configuration {
    std::vector<Curve> components;
};

/// Quadrature-ready boundary discretization.  For smooth components the
/// nodes are equispaced in parameter (trapezoid/Kress quadrature); polygons
/// use graded composite Gauss panels toward the corners.
struct BoundaryMesh {
    std::vector<Point2> nodes;
    std::vector<double> weights;       // arclength quadrature weights
    std::vector<Point2> normals;       // unit outward
    std::vector<Point2> tangents;      // unit, counterclockwise
    std::vector<double> speed;         // |gamma'| per node (parameter speed)
    std::vector<double> param;         // parameter value in [0, 2pi) (smooth only)
    std::vector<double> curvature;     // signed curvature per node
    std::vector<int> component_id;
    std::vector<std::pair<std::size_t, std::size_t>> component_ranges; // [begin, end)
    std::vector<bool> component_smooth;

    std::size_t size() const { return nodes.size(); }
    std::size_t n_components() const { return component_ranges.size(); }
};

struct DiscretizeOptions {
    double polygon_grading = 3.0; // grading exponent toward corners
    int panel_order = 8;          // Gauss order per polygon panel
};

BoundaryMesh discretize(const Configuration& config,
                        const std::vector<int>& n_per_component,
                        const DiscretizeOptions& opts = {});

/// Minimal pairwise distance between component boundaries.  Exact for
/// circle pairs; a sampled-polyline lower bound otherwise.
double min_separation(const Configuration& config);

// Curve evaluation helpers (parameter t in [0, 2pi) for smooth curves).
Point2 curve_point(const Curve& c, double t);
Point2 curve_velocity(const Curve& c, double t);
Point2 curve_acceleration(const Curve& c, double t);

} // namespace relspec
