// Benchmark: the OpenMP bucket-scan kernel against the serial reference,
// over all free trees of each order. Results must agree exactly.

#include <chrono>
#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "mist/harness.hpp"
#include "mist/treegen.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using steady = std::chrono::steady_clock;

double ms_since(steady::time_point start) {
    return std::chrono::duration<double, std::milli>(steady::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int n_lo = 11;
    int n_hi = 15;
    int jobs = 0;
    CLI::App app{"bucket-scan benchmark: serial reference vs parallel kernel"};
    app.add_option("--from", n_lo, "smallest order")->check(CLI::Range(2, mist::kOrderCapLimit));
    app.add_option("--to", n_hi, "largest order")->check(CLI::Range(2, mist::kOrderCapLimit));
    app.add_option("--jobs", jobs, "worker threads (0 = all hardware threads)");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    const int threads = jobs <= 0 ? omp_get_max_threads() : jobs;
#else
    const int threads = 1;
    std::cerr << "built without OpenMP; the parallel column runs the serial path\n";
#endif
    std::printf("%4s %9s %12s %12s %9s %14s\n", "n", "trees", "serial_ms", "parallel_ms",
                "speedup", "trees_per_sec");
    for (int n = n_lo; n <= n_hi; ++n) {
        const std::vector<mist::Tree> trees = mist::collect(mist::free_trees(n, mist::kOrderCapLimit));

        auto t0 = steady::now();
        const mist::BucketExtremes serial = mist::scan_bucket_serial(trees);
        const double serial_ms = ms_since(t0);

        auto t1 = steady::now();
        const mist::BucketExtremes parallel = mist::scan_bucket(trees, threads);
        const double parallel_ms = ms_since(t1);

        if (serial.min != parallel.min || serial.max != parallel.max ||
            serial.argmin != parallel.argmin || serial.argmax != parallel.argmax) {
            std::cerr << "kernel results disagree at n = " << n << '\n';
            return 1;
        }
        std::printf("%4d %9zu %12.2f %12.2f %9.2f %14.0f\n", n, trees.size(), serial_ms,
                    parallel_ms, serial_ms / parallel_ms,
                    trees.size() / (parallel_ms / 1000.0));
    }
    return 0;
}
