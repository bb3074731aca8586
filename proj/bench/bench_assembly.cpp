// Compares serial vs OpenMP row-parallel operator assembly on growing
// two-disc meshes.  Usage: bench_assembly [n1 n2 ...]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "relspec/layer_ops.hpp"

using namespace relspec;

namespace {

double time_assembly(const BoundaryMesh& mesh, bool parallel, int reps) {
    set_parallel_assembly(parallel);
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        const BoundaryOperator S = assemble_S(mesh, Kappa(1.0));
        const BoundaryOperator N = assemble_N(mesh, Kappa(1.0));
        const auto t1 = std::chrono::steady_clock::now();
        (void)S;
        (void)N;
        const double dt = std::chrono::duration<double>(t1 - t0).count();
        if (dt < best) best = dt;
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> sizes;
    for (int i = 1; i < argc; ++i) sizes.push_back(std::atoi(argv[i]));
    if (sizes.empty()) sizes = {64, 128, 256, 512};

    Configuration cfg;
    cfg.components.push_back(CircleCurve{{-2.0, 0.0}, 1.0});
    cfg.components.push_back(CircleCurve{{2.0, 0.0}, 1.0});

    std::printf("%8s %12s %12s %8s\n", "n/comp", "serial [s]", "openmp [s]", "speedup");
    for (int n : sizes) {
        const BoundaryMesh mesh = discretize(cfg, {n, n});
        const double ts = time_assembly(mesh, false, 3);
        const double tp = time_assembly(mesh, true, 3);
        std::printf("%8d %12.6f %12.6f %8.2f\n", n, ts, tp, ts / tp);
    }
    set_parallel_assembly(true);
    return 0;
}
