// Timing harness for the trial kernels: runs each randomized suite and the
// blend sweep once serially and once with the OpenMP fan-out, checks the
// outputs match bit for bit, and prints the speedup.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "avwc/canonical.hpp"
#include "avwc/io.hpp"
#include "avwc/suites.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Timing {
    double serial_s = 0.0;
    double parallel_s = 0.0;
    bool identical = false;
};

template <typename Fn>
Timing time_both(Fn&& run) {
    Timing t;
    auto start = std::chrono::steady_clock::now();
    const std::string serial_out = run(false);
    t.serial_s = seconds_since(start);
    start = std::chrono::steady_clock::now();
    const std::string parallel_out = run(true);
    t.parallel_s = seconds_since(start);
    t.identical = serial_out == parallel_out;
    return t;
}

void report(const char* name, const Timing& t) {
    std::printf("%-22s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n", name, t.serial_s,
                t.parallel_s, t.parallel_s > 0.0 ? t.serial_s / t.parallel_s : 0.0,
                t.identical ? "outputs identical" : "OUTPUTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    int trials = 2000;
    if (argc > 1) trials = std::atoi(argv[1]);
    const std::uint64_t seed = 7;

#ifdef _OPENMP
    std::printf("threads: %d, trials per suite: %d\n", omp_get_max_threads(), trials);
#else
    std::printf("built without OpenMP; both passes are serial (trials: %d)\n", trials);
#endif

    bool all_identical = true;
    for (avwc::Suite suite : avwc::all_suites()) {
        const int n = suite == avwc::Suite::Lemma1 ? trials * 5 : trials;
        const Timing t = time_both([&](bool parallel) {
            return avwc::render_trials_csv(avwc::run_suite(suite, n, seed, parallel));
        });
        report(avwc::suite_name(suite), t);
        all_identical = all_identical && t.identical;
    }
    {
        const Timing t = time_both([&](bool parallel) {
            avwc::SweepOptions opts;
            opts.parallel = parallel;
            return avwc::render_sweep_csv(avwc::discontinuity_sweep(avwc::default_sweep_grid(), opts));
        });
        report("sweep", t);
        all_identical = all_identical && t.identical;
    }
    return all_identical ? 0 : 1;
}
