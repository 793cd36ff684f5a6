#include "avwc/canonical.hpp"

#include <algorithm>
#include <string>

#include "avwc/capacity.hpp"
#include "avwc/errors.hpp"
#include "avwc/parallel.hpp"

namespace avwc {

ChannelFamily blackwell_family() {
    return make_family({make_channel({{1, 0, 0}, {0, 0, 1}}), make_channel({{0, 0, 1}, {0, 1, 0}})});
}

Channel useless_binary_channel() { return make_channel({{0.5, 0.5}, {0.5, 0.5}}); }

Channel noiseless_channel_2x3() { return make_channel({{1, 0, 0}, {0, 1, 0}}); }

ChannelFamily useless_eavesdropper_family() {
    return make_family({useless_binary_channel(), useless_binary_channel()});
}

WiretapUncertainty lambda_family(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        fail("LambdaOutOfRange", "lambda = " + std::to_string(lambda) + " outside [0, 1]");
    const ChannelFamily base = blackwell_family();
    const Channel target = noiseless_channel_2x3();
    ChannelFamily legitimate = make_family(
        {convex_combine(base.members[0], target, lambda), convex_combine(base.members[1], target, lambda)});
    return make_wiretap(std::move(legitimate), useless_eavesdropper_family());
}

SymmetrizableInstance robustly_symmetrizable_instance() {
    ChannelFamily legitimate =
        make_family({make_channel({{0.5, 0.5, 0.0}, {0.25, 0.0, 0.75}}), make_channel({{0, 0, 1}, {0, 1, 0}})});
    SymmetrizableInstance instance{
        make_wiretap(std::move(legitimate), useless_eavesdropper_family()),
        make_symmetrizer({{0.8, 0.2}, {0.4, 0.6}})};
    return instance;
}

std::vector<double> default_sweep_grid() {
    std::vector<double> grid;
    for (int k = 0; k <= 50; ++k) grid.push_back(std::min(1.0, k * 0.02));
    return grid;
}

std::vector<SweepRow> discontinuity_sweep(const std::vector<double>& grid, const SweepOptions& opts) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0 && grid[i] <= 1.0))
            fail("LambdaOutOfRange", "sweep grid value " + std::to_string(grid[i]) + " outside [0, 1]");
        if (i > 0 && grid[i] < grid[i - 1]) fail("OutOfRange", "sweep grid must be sorted");
    }
    std::vector<SweepRow> rows(grid.size());
    for_each_index(grid.size(), opts.parallel, [&](std::size_t i) {
        const WiretapUncertainty u = lambda_family(grid[i]);
        const SymmetryVerdict verdict = min_f(u.legitimate);
        SweepRow row;
        row.lambda = grid[i];
        row.min_f = verdict.min_f;
        row.symmetrizable = verdict.symmetrizable;
        row.cr_capacity = cr_capacity_avc(u.legitimate, opts.capacity_tol).value;
        // Useless eavesdropper: the dichotomy pins cs to cr when
        // non-symmetrizable, to 0 otherwise.
        row.cs_capacity = verdict.symmetrizable ? 0.0 : row.cr_capacity;
        rows[i] = row;
    });
    return rows;
}

ProbeReport zero_region_probe(double epsilon, int samples, std::uint64_t seed, const ProbeOptions& opts) {
    if (epsilon < 0.0) fail("OutOfRange", "epsilon must be >= 0");
    if (samples < 1) fail("OutOfRange", "samples must be >= 1");
    const SymmetrizableInstance base = robustly_symmetrizable_instance();

    std::vector<int> symmetrizable_flags(static_cast<std::size_t>(samples), 0);
    std::vector<int> positive_flags(static_cast<std::size_t>(samples), 0);
    for_each_index(static_cast<std::size_t>(samples), opts.parallel, [&](std::size_t i) {
        Rng rng = Rng::substream(seed, i);
        const ChannelFamily family =
            epsilon > 0.0 ? perturb_family_within(base.uncertainty.legitimate, epsilon, rng)
                          : base.uncertainty.legitimate;
        symmetrizable_flags[i] = is_symmetrizable(family) ? 1 : 0;
        positive_flags[i] =
            cr_capacity_avc(family, opts.capacity_tol).value > opts.cr_positive_margin ? 1 : 0;
    });

    ProbeReport report;
    report.epsilon = epsilon;
    report.samples = samples;
    for (int flag : symmetrizable_flags) report.symmetrizable_count += flag;
    for (int flag : positive_flags) report.cr_positive_count += flag;
    report.fraction_symmetrizable = static_cast<double>(report.symmetrizable_count) / samples;
    report.fraction_cr_positive = static_cast<double>(report.cr_positive_count) / samples;
    return report;
}

}  // namespace avwc
