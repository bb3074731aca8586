#include "relspec/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace relspec {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("config: " + msg);
}

void check_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
    if (!obj.is_object()) fail(where + " must be an object");
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.count(key)) fail("unknown key \"" + key + "\" in " + where);
    }
}

double positive(const json& v, const std::string& name) {
    if (!v.is_number()) fail(name + " must be a number");
    const double x = v.get<double>();
    if (!(x > 0.0)) fail(name + " must be > 0");
    return x;
}

KappaGrid parse_grid(const json& j, const std::string& where, bool allow_zero_min) {
    check_keys(j, where, {"min", "max", "n", "spacing"});
    KappaGrid g;
    if (j.contains("min")) {
        g.min = j.at("min").get<double>();
        if (g.min < 0.0 || (!allow_zero_min && g.min == 0.0)) fail(where + ".min out of range");
    }
    if (j.contains("max")) g.max = positive(j.at("max"), where + ".max");
    if (!(g.max > g.min)) fail(where + ".max must exceed min");
    if (j.contains("n")) {
        g.n = j.at("n").get<int>();
        if (g.n < 1) fail(where + ".n must be >= 1");
    }
    if (j.contains("spacing")) {
        const std::string s = j.at("spacing").get<std::string>();
        if (s == "log") g.log_spacing = true;
        else if (s == "linear") g.log_spacing = false;
        else fail(where + ".spacing must be \"log\" or \"linear\"");
    }
    if (g.log_spacing && g.min <= 0.0) fail(where + ": log spacing needs min > 0");
    return g;
}

Curve parse_component(const json& j, const std::string& where) {
    const std::string type = j.value("type", "");
    if (type == "circle") {
        check_keys(j, where, {"type", "center", "radius"});
        CircleCurve c;
        const auto& ctr = j.at("center");
        if (!ctr.is_array() || ctr.size() != 2) fail(where + ".center must be [x, y]");
        c.center = {ctr[0].get<double>(), ctr[1].get<double>()};
        c.radius = positive(j.at("radius"), where + ".radius");
        return c;
    }
    if (type == "trig") {
        check_keys(j, where, {"type", "x_cos", "x_sin", "y_cos", "y_sin"});
        TrigCurve c;
        c.x_cos = j.at("x_cos").get<std::vector<double>>();
        c.x_sin = j.value("x_sin", std::vector<double>{});
        c.y_cos = j.at("y_cos").get<std::vector<double>>();
        c.y_sin = j.value("y_sin", std::vector<double>{});
        return c;
    }
    if (type == "polygon") {
        check_keys(j, where, {"type", "vertices"});
        PolygonCurve c;
        for (const auto& v : j.at("vertices")) {
            if (!v.is_array() || v.size() != 2) fail(where + ".vertices entries must be [x, y]");
            c.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
        }
        if (c.vertices.size() < 3) fail(where + ": polygon needs >= 3 vertices");
        return c;
    }
    fail(where + ": unknown component type \"" + type + "\"");
}

std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace

std::vector<double> KappaGrid::points() const {
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = min;
        return out;
    }
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        out[i] = log_spacing ? min * std::pow(max / min, t) : min + t * (max - min);
    }
    return out;
}

TraceOptions RunConfig::trace_options() const {
    TraceOptions o;
    o.rel_tol = tol;
    return o;
}

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    check_keys(j, "config",
               {"schema_version", "geometry", "bc", "media", "mass", "s", "kappa_grid", "mesh",
                "plates", "seed", "tol", "energy_mode"});

    RunConfig cfg;
    if (!j.contains("schema_version")) fail("schema_version is required");
    cfg.schema_version = j.at("schema_version").get<int>();
    if (cfg.schema_version != 1) fail("unsupported schema_version");

    if (!j.contains("geometry")) fail("geometry is required");
    const json& g = j.at("geometry");
    if (g.is_object()) {
        const std::string type = g.value("type", "");
        if (type == "point_plates") {
            check_keys(g, "geometry", {"type", "gap"});
            cfg.kind = GeometryKind::PointPlates;
            cfg.plate_gap = positive(g.at("gap"), "geometry.gap");
        } else if (type == "slabs") {
            check_keys(g, "geometry", {"type", "d", "a"});
            cfg.kind = GeometryKind::Slabs;
            cfg.plates.d = positive(g.at("d"), "geometry.d");
            cfg.plates.a = positive(g.at("a"), "geometry.a");
        } else {
            fail("geometry object must have type point_plates or slabs");
        }
    } else if (g.is_array()) {
        if (g.empty()) fail("geometry list must not be empty");
        cfg.kind = GeometryKind::Mesh;
        for (size_t i = 0; i < g.size(); ++i)
            cfg.geometry.components.push_back(parse_component(g[i], "geometry[" + std::to_string(i) + "]"));
    } else {
        fail("geometry must be a list of components or a plates object");
    }

    if (j.contains("bc")) {
        const std::string bc = j.at("bc").get<std::string>();
        if (bc == "dirichlet") cfg.bc = BoundaryCondition::Dirichlet;
        else if (bc == "neumann") cfg.bc = BoundaryCondition::Neumann;
        else if (bc == "transmission") cfg.bc = BoundaryCondition::Transmission;
        else fail("bc must be dirichlet, neumann, or transmission");
    }
    if (j.contains("media")) {
        check_keys(j.at("media"), "media", {"kappa_plus", "kappa_minus", "nu0", "nu1"});
        TransmissionParams p;
        const json& m = j.at("media");
        if (m.contains("kappa_plus")) p.kappa_plus = positive(m.at("kappa_plus"), "media.kappa_plus");
        if (m.contains("kappa_minus")) p.kappa_minus = positive(m.at("kappa_minus"), "media.kappa_minus");
        if (m.contains("nu0")) p.nu0 = positive(m.at("nu0"), "media.nu0");
        p.nu1 = m.contains("nu1") ? positive(m.at("nu1"), "media.nu1")
                                  : (p.kappa_minus / p.kappa_plus) * (p.kappa_minus / p.kappa_plus);
        cfg.media = p;
    }
    if (cfg.bc == BoundaryCondition::Transmission && !cfg.media)
        fail("transmission bc requires media");

    if (j.contains("mass")) {
        cfg.mass = j.at("mass").get<double>();
        if (cfg.mass < 0.0) fail("mass must be >= 0");
    }
    if (j.contains("s")) {
        cfg.order_s = j.at("s").get<double>();
        if (!(cfg.order_s > 0.0 && cfg.order_s < 1.0)) fail("s must be in (0,1)");
    }
    if (j.contains("kappa_grid")) cfg.kappa_grid = parse_grid(j.at("kappa_grid"), "kappa_grid", false);
    if (j.contains("mesh")) {
        check_keys(j.at("mesh"), "mesh", {"n_per_component"});
        cfg.mesh_n = j.at("mesh").at("n_per_component").get<std::vector<int>>();
        for (int n : cfg.mesh_n)
            if (n < 8) fail("mesh.n_per_component entries must be >= 8");
    }
    if (cfg.kind == GeometryKind::Mesh) {
        if (cfg.mesh_n.empty()) cfg.mesh_n.assign(cfg.geometry.components.size(), 64);
        if (cfg.mesh_n.size() != cfg.geometry.components.size())
            fail("mesh.n_per_component length must match geometry");
    }
    if (j.contains("plates")) {
        check_keys(j.at("plates"), "plates", {"d", "a", "t_grid", "xi_grid"});
        const json& p = j.at("plates");
        if (p.contains("d")) cfg.plates.d = positive(p.at("d"), "plates.d");
        if (p.contains("a")) cfg.plates.a = positive(p.at("a"), "plates.a");
        if (p.contains("t_grid")) cfg.plates.t_grid = parse_grid(p.at("t_grid"), "plates.t_grid", false);
        if (p.contains("xi_grid")) cfg.plates.xi_grid = parse_grid(p.at("xi_grid"), "plates.xi_grid", true);
        else {
            cfg.plates.xi_grid.min = 0.0;
            cfg.plates.xi_grid.max = 5.0;
            cfg.plates.xi_grid.n = 26;
            cfg.plates.xi_grid.log_spacing = false;
        }
    }
    if (j.contains("seed")) cfg.seed = j.at("seed").get<unsigned>();
    if (j.contains("tol")) {
        cfg.tol = j.at("tol").get<double>();
        if (!(cfg.tol > 0.0 && cfg.tol < 1.0)) fail("tol out of range");
    }
    if (j.contains("energy_mode")) {
        cfg.energy_mode = j.at("energy_mode").get<std::string>();
        if (cfg.energy_mode != "1d" && cfg.energy_mode != "per_area")
            fail("energy_mode must be \"1d\" or \"per_area\"");
    }

    cfg.hash = fnv1a_hex(json::parse(json_text).dump());
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_config(os.str());
}

} // namespace relspec
