#pragma once

#include <cstdint>
#include <vector>

#include "avwc/channel.hpp"
#include "avwc/symmetrize.hpp"

namespace avwc {

/// The classic two-state symmetrizable AVC on |X|=2, |Y|=3:
///   member 1: [[1,0,0],[0,0,1]]   member 2: [[0,0,1],[0,1,0]].
ChannelFamily blackwell_family();

/// Binary channel whose output ignores the input: [[1/2,1/2],[1/2,1/2]].
Channel useless_binary_channel();

/// Noiseless 2-input channel into 3 outputs: [[1,0,0],[0,1,0]].
Channel noiseless_channel_2x3();

/// {V, V} with the useless binary channel; leaks nothing for any code.
ChannelFamily useless_eavesdropper_family();

/// Wiretap uncertainty whose legitimate AVC blends the blackwell members
/// toward the noiseless channel: members (1-lambda)*W_s + lambda*What,
/// eavesdropper fixed useless. Symmetrizable exactly at lambda = 0, which is
/// the unassisted secrecy capacity's discontinuity point.
WiretapUncertainty lambda_family(double lambda);

struct SymmetrizableInstance {
    WiretapUncertainty uncertainty;
    Symmetrizer sigma;  // exact symmetrizer of the legitimate family
};

/// Two-state symmetrizable legitimate AVC with positive CR capacity and a
/// closed-form symmetrizer:
///   members [[1/2,1/2,0],[1/4,0,3/4]] and [[0,0,1],[0,1,0]],
///   sigma rows [[4/5,1/5],[2/5,3/5]], useless eavesdropper.
SymmetrizableInstance robustly_symmetrizable_instance();

struct SweepRow {
    double lambda = 0.0;
    double min_f = 0.0;
    bool symmetrizable = false;
    double cr_capacity = 0.0;  // bits
    double cs_capacity = 0.0;  // bits
};

struct SweepOptions {
    double capacity_tol = 1e-5;
    bool parallel = true;
};

/// Per-lambda symmetrizability and capacities over a sorted grid in [0, 1].
std::vector<SweepRow> discontinuity_sweep(const std::vector<double>& grid, const SweepOptions& opts = {});

/// Default grid {0, 0.02, ..., 1.0}.
std::vector<double> default_sweep_grid();

struct ProbeReport {
    double epsilon = 0.0;
    int samples = 0;
    int symmetrizable_count = 0;
    int cr_positive_count = 0;
    double fraction_symmetrizable = 0.0;
    double fraction_cr_positive = 0.0;
};

struct ProbeOptions {
    double capacity_tol = 1e-4;
    double cr_positive_margin = 1e-6;  // bits
    bool parallel = true;
};

/// Samples legitimate families within directed distance epsilon of the
/// robustly symmetrizable instance and reports how many stay symmetrizable
/// and keep positive CR capacity. Empirical probe, no pass/fail claim.
ProbeReport zero_region_probe(double epsilon, int samples, std::uint64_t seed,
                              const ProbeOptions& opts = {});

}  // namespace avwc
