#pragma once

#include <string>
#include <vector>

// Self-check suites behind the `verify` CLI subcommand: operator identities
// on a reference two-disc mesh, the Jacobi derivative cross-check, and the
// 1D slab / multipole oracles.

namespace relspec {

struct SuiteResult {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<SuiteResult> suites;

    bool all_pass() const;
    std::string human_readable() const;
    std::string to_json() const;
};

/// Run the identity suites.  `full` adds mesh-refinement convergence tables
/// and a denser oracle grid.
VerifyReport run_verify_suites(bool full);

} // namespace relspec
