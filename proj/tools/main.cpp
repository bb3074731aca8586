#include <iostream>

#include <CLI11.hpp>

#include "relspec/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"relspec: relative spectral functions and Casimir energies of "
                 "multi-obstacle scattering configurations"};
    app.require_subcommand(1);

    std::string config_path;
    std::string verify_level = "fast";
    relspec::CmdOptions opts;
    double kmin = 0.0, kmax = 0.0, tol = 0.0;

    auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto* c = sub->add_option("--config", config_path, "JSON run configuration");
        if (needs_config) c->required()->check(CLI::ExistingFile);
        sub->add_option("--out", opts.out_dir, "output directory");
        sub->add_option("--threads", opts.threads, "worker threads (1 = fully serial)");
        sub->add_option("--kappa-min", kmin, "override lower kappa bound");
        sub->add_option("--kappa-max", kmax, "override upper kappa bound");
        sub->add_option("--tol", tol, "override relative tolerance");
    };

    auto* xi = app.add_subcommand("xi", "tabulate Xi(i kappa) as CSV");
    add_common(xi, true);
    auto* energy = app.add_subcommand("energy", "Casimir energy as JSON");
    add_common(energy, true);
    auto* plates = app.add_subcommand("plates", "slab Xi_T grid and per-area energy");
    add_common(plates, true);
    auto* verify = app.add_subcommand("verify", "run the identity/oracle suites");
    add_common(verify, false);
    verify->add_option("level", verify_level, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}));

    CLI11_PARSE(app, argc, argv);

    if (kmin > 0.0) opts.kappa_min = kmin;
    if (kmax > 0.0) opts.kappa_max = kmax;
    if (tol > 0.0) opts.tol = tol;

    try {
        if (verify->parsed()) return relspec::run_verify(verify_level, opts);
        const relspec::RunConfig cfg = relspec::load_config(config_path);
        if (xi->parsed()) return relspec::run_xi(cfg, opts);
        if (energy->parsed()) return relspec::run_energy(cfg, opts);
        if (plates->parsed()) return relspec::run_plates(cfg, opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
