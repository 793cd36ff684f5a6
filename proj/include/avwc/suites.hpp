#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "avwc/bounds.hpp"

namespace avwc {

/// Randomized verification suites. Each trial draws its inputs from the
/// (seed, trial) substream, re-measures the realized distance, and records
/// the inequality it checked; a false `holds` means a checked inequality
/// failed, which the CLI and the test suites treat as fatal.
enum class Suite { Lemma1, Lemma2, TimeVarying, Theorem3, Robustness };

/// CLI ids: lemma1, lemma2, timevarying, theorem3, robustness.
const char* suite_name(Suite suite);
Suite suite_from_name(const std::string& name);
std::vector<Suite> all_suites();

struct TrialRow {
    Suite suite = Suite::Lemma1;
    std::uint64_t seed = 0;
    int trial = 0;
    double epsilon = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool holds = false;
};

/// Runs `trials` independent trials; the parallel path is bit-identical to
/// the serial one.
std::vector<TrialRow> run_suite(Suite suite, int trials, std::uint64_t seed, bool parallel = true);

}  // namespace avwc
