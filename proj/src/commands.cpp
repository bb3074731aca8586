#include "relspec/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "relspec/multipole.hpp"
#include "relspec/plates1d.hpp"
#include "relspec/trace_formula.hpp"
#include "relspec/verify.hpp"
#include "relspec/xi.hpp"

namespace relspec {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

void apply_threads(const CmdOptions& opts) {
    if (opts.threads <= 0) return;
#ifdef _OPENMP
    omp_set_num_threads(opts.threads);
#endif
    set_parallel_assembly(opts.threads > 1);
}

void apply_overrides(RunConfig& cfg, const CmdOptions& opts) {
    if (opts.kappa_min) cfg.kappa_grid.min = *opts.kappa_min;
    if (opts.kappa_max) cfg.kappa_grid.max = *opts.kappa_max;
    if (!(cfg.kappa_grid.max > cfg.kappa_grid.min))
        throw std::invalid_argument("kappa_max must exceed kappa_min");
    if (opts.tol) cfg.tol = *opts.tol;
}

std::string fmt17(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

int report_breakdown(const std::exception& e, const std::string& stage) {
    json j;
    j["error"] = "numerical breakdown";
    j["stage"] = stage;
    j["detail"] = e.what();
    std::cerr << j.dump() << "\n";
    return 2;
}

json energy_record(const RunConfig& cfg, const EnergyResult& r, const std::string& quantity) {
    json j;
    j["quantity"] = quantity;
    j["value"] = r.value;
    j["abs_error_estimate"] = r.abs_error_estimate;
    j["kappa_max"] = r.kappa_max;
    j["n_evaluations"] = r.n_evaluations;
    j["warnings"] = r.warnings;
    j["config_hash"] = cfg.hash;
    return j;
}

} // namespace

int run_xi(RunConfig cfg, const CmdOptions& opts) {
    apply_threads(opts);
    apply_overrides(cfg, opts);
    if (cfg.kind == GeometryKind::Slabs)
        throw std::invalid_argument("xi: use the plates subcommand for slab geometry");
    const std::vector<double> grid = cfg.kappa_grid.points();
    if (grid.empty()) throw std::invalid_argument("xi: empty kappa grid");

    std::vector<double> values(grid.size());
    try {
        if (cfg.kind == GeometryKind::PointPlates) {
            for (std::size_t i = 0; i < grid.size(); ++i)
                values[i] = xi_point_plates(grid[i], cfg.plate_gap);
        } else {
            const BoundaryMesh mesh = discretize(cfg.geometry, cfg.mesh_n);
            for (std::size_t i = 0; i < grid.size(); ++i)
                values[i] = xi_value(cfg.bc, mesh, Kappa(grid[i]), cfg.media);
        }
    } catch (const NumericalBreakdown& e) {
        return report_breakdown(e, "xi");
    }

    XiCurve curve;
    curve.bc = cfg.bc;
    curve.params = cfg.media;
    curve.config_hash = cfg.hash;
    curve.mesh_resolution = cfg.mesh_n.empty() ? 0 : cfg.mesh_n.front();
    for (std::size_t i = 0; i < grid.size(); ++i) curve.samples.push_back({grid[i], values[i]});

    fs::create_directories(opts.out_dir);
    write_file(fs::path(opts.out_dir) / "xi.csv", xi_curve_csv(curve));
    return 0;
}

int run_energy(RunConfig cfg, const CmdOptions& opts) {
    apply_threads(opts);
    apply_overrides(cfg, opts);
    TraceOptions to = cfg.trace_options();
    if (opts.kappa_min) to.kappa_min = *opts.kappa_min;
    if (opts.kappa_max) to.kappa_max = *opts.kappa_max;

    EnergyResult r;
    std::string quantity;
    try {
        switch (cfg.kind) {
            case GeometryKind::PointPlates:
                if (cfg.energy_mode == "per_area") {
                    r = energy_plates_per_area(cfg.plate_gap, cfg.mass, cfg.order_s, to);
                    quantity = "casimir_energy_per_area";
                } else {
                    r = energy_point_plates(cfg.plate_gap, cfg.mass, to);
                    quantity = "casimir_energy_1d";
                }
                break;
            case GeometryKind::Slabs: {
                if (!cfg.media) throw std::invalid_argument("energy: slabs require media");
                r = casimir_per_area_slabs(cfg.plates.d, cfg.plates.a, *cfg.media, false, to);
                quantity = "casimir_energy_per_area";
                break;
            }
            case GeometryKind::Mesh:
                r = casimir_energy(cfg.bc, cfg.geometry, cfg.mesh_n, cfg.media, cfg.mass, to);
                quantity = "casimir_energy";
                break;
        }
    } catch (const std::runtime_error& e) {
        return report_breakdown(e, "energy");
    }

    fs::create_directories(opts.out_dir);
    write_file(fs::path(opts.out_dir) / "energy.json", energy_record(cfg, r, quantity).dump(2) + "\n");
    return 0;
}

int run_plates(RunConfig cfg, const CmdOptions& opts) {
    apply_threads(opts);
    if (opts.tol) cfg.tol = *opts.tol;
    if (!cfg.media) throw std::invalid_argument("plates: media section required");

    std::ostringstream csv;
    csv.precision(17);
    csv << "t,xi,xi_T\n";
    for (double t : cfg.plates.t_grid.points()) {
        for (double x : cfg.plates.xi_grid.points()) {
            csv << fmt17(t) << "," << fmt17(x) << ","
                << fmt17(xi_slabs(t, x, cfg.plates.d, cfg.plates.a, *cfg.media)) << "\n";
        }
    }

    EnergyResult r;
    try {
        r = casimir_per_area_slabs(cfg.plates.d, cfg.plates.a, *cfg.media, false,
                                   cfg.trace_options());
    } catch (const std::runtime_error& e) {
        return report_breakdown(e, "plates");
    }

    fs::create_directories(opts.out_dir);
    write_file(fs::path(opts.out_dir) / "plates.csv", csv.str());
    write_file(fs::path(opts.out_dir) / "plates_energy.json",
               energy_record(cfg, r, "casimir_energy_per_area").dump(2) + "\n");
    return 0;
}

int run_verify(const std::string& level, const CmdOptions& opts) {
    apply_threads(opts);
    if (level != "fast" && level != "full")
        throw std::invalid_argument("verify: level must be fast or full");
    const VerifyReport rep = run_verify_suites(level == "full");
    std::cout << rep.human_readable();
    fs::create_directories(opts.out_dir);
    write_file(fs::path(opts.out_dir) / "verify.json", rep.to_json() + "\n");
    return rep.all_pass() ? 0 : 1;
}

} // namespace relspec
