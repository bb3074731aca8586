#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relspec/geometry.hpp"
#include "relspec/trace_formula.hpp"
#include "relspec/xi.hpp"

// Run configuration: versioned JSON schema, strict key validation, and a
// content hash carried into every output record.

namespace relspec {

struct KappaGrid {
    double min = 0.1;
    double max = 10.0;
    int n = 50;
    bool log_spacing = true;

    std::vector<double> points() const;
};

struct PlatesSection {
    double d = 1.0;           // gap between the slabs
    double a = 1.0;           // slab thickness
    KappaGrid t_grid;         // spectral magnitude samples
    KappaGrid xi_grid;        // transverse momentum samples (min may be 0)
};

enum class GeometryKind { Mesh, PointPlates, Slabs };

struct RunConfig {
    int schema_version = 1;
    GeometryKind kind = GeometryKind::Mesh;
    Configuration geometry;               // kind == Mesh
    double plate_gap = 1.0;               // kind == PointPlates
    std::string energy_mode = "1d";       // point plates: "1d" or "per_area"
    BoundaryCondition bc = BoundaryCondition::Dirichlet;
    std::optional<TransmissionParams> media;
    double mass = 0.0;
    double order_s = 0.5;
    KappaGrid kappa_grid;
    std::vector<int> mesh_n;
    PlatesSection plates;
    unsigned seed = 0;
    std::string hash;                     // FNV-1a of the canonical source

    TraceOptions trace_options() const;
    double tol = 1e-10;
};

/// Parse and validate a JSON config string.  Unknown keys anywhere in the
/// document are rejected; schema_version must be 1.
RunConfig parse_config(const std::string& json_text);

RunConfig load_config(const std::string& path);

} // namespace relspec
