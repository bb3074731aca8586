#pragma once

#include <optional>
#include <string>

#include "relspec/config.hpp"

// Library-level implementations of the CLI subcommands, returning process
// exit codes.  Numerical breakdowns exit with code 2 and a JSON diagnostic
// on stderr.

namespace relspec {

struct CmdOptions {
    std::string out_dir = ".";
    int threads = 0; // 0 = library default
    std::optional<double> kappa_min;
    std::optional<double> kappa_max;
    std::optional<double> tol;
};

int run_xi(RunConfig config, const CmdOptions& opts);
int run_energy(RunConfig config, const CmdOptions& opts);
int run_plates(RunConfig config, const CmdOptions& opts);
int run_verify(const std::string& level, const CmdOptions& opts);

} // namespace relspec
