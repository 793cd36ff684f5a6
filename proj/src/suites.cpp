#include "avwc/suites.hpp"

#include <algorithm>
#include <cmath>

#include "avwc/codes.hpp"
#include "avwc/errors.hpp"
#include "avwc/parallel.hpp"
#include "avwc/rng.hpp"
#include "avwc/symmetrize.hpp"

namespace avwc {

namespace {

Channel random_channel(Rng& rng, int in, int out) {
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(in));
    for (auto& row : rows) row = rng.simplex(out);
    return make_channel(rows);
}

/// Per-row mix toward fresh simplex points; row distance scales with t.
Channel perturb_channel(const Channel& w, double t, Rng& rng) {
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(w.input_size()));
    for (int x = 0; x < w.input_size(); ++x) {
        const std::vector<double> target = rng.simplex(w.output_size());
        auto& row = rows[static_cast<std::size_t>(x)];
        row.resize(static_cast<std::size_t>(w.output_size()));
        for (int y = 0; y < w.output_size(); ++y)
            row[static_cast<std::size_t>(y)] =
                (1.0 - t) * w.prob(x, y) + t * target[static_cast<std::size_t>(y)];
    }
    return make_channel(rows);
}

ChannelFamily random_family(Rng& rng, int states, int in, int out) {
    std::vector<Channel> members;
    members.reserve(static_cast<std::size_t>(states));
    for (int s = 0; s < states; ++s) members.push_back(random_channel(rng, in, out));
    return make_family(std::move(members));
}

/// Every member's rows identical: leaks nothing whatever the code.
ChannelFamily random_useless_family(Rng& rng, int states, int in, int out) {
    std::vector<Channel> members;
    for (int s = 0; s < states; ++s) {
        const std::vector<double> row = rng.simplex(out);
        members.push_back(make_channel(std::vector<std::vector<double>>(static_cast<std::size_t>(in), row)));
    }
    return make_family(std::move(members));
}

TrialRow lemma1_trial(std::uint64_t seed, int trial) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(trial));
    const int nx = 2 + rng.uniform_int(5);  // 2..6
    const int ny = 2 + rng.uniform_int(5);
    const std::vector<double> p = rng.simplex(nx * ny);
    const std::vector<double> fresh = rng.simplex(nx * ny);
    const double t = rng.uniform();  // ||p-q|| = t ||p-fresh||, re-measured below
    std::vector<double> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = (1.0 - t) * p[i] + t * fresh[i];
    const BoundReport report =
        check_conditional_entropy_gap(make_joint(nx, ny, p), make_joint(nx, ny, q));
    return TrialRow{Suite::Lemma1, seed, trial, report.epsilon, report.lhs, report.rhs, report.slack,
                    report.holds};
}

TrialRow lemma2_trial(std::uint64_t seed, int trial) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(trial));
    const int n = 1 + rng.uniform_int(3);             // 1..3
    const int nx = 2 + rng.uniform_int(2);            // 2..3
    const int ny = 2 + rng.uniform_int(2);
    const int nu = rng.uniform_int(2) == 0 ? 2 : 4;   // {2, 4}
    const Channel w = random_channel(rng, nx, ny);
    const Channel wt = perturb_channel(w, rng.uniform(), rng);
    const Channel encoder = random_channel(rng, nu, static_cast<int>(pow_size(nx, n)));
    const BoundReport report = check_blocklength_mi_gap(w, wt, encoder, n);
    return TrialRow{Suite::Lemma2, seed, trial, report.epsilon, report.lhs, report.rhs, report.slack,
                    report.holds};
}

TrialRow timevarying_trial(std::uint64_t seed, int trial) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(trial));
    const int n = 2 + rng.uniform_int(2);            // 2..3
    const int nx = 2 + rng.uniform_int(2);
    const int nz = 2 + rng.uniform_int(2);
    const int nu = rng.uniform_int(2) == 0 ? 2 : 4;
    std::vector<Channel> v_list;
    std::vector<Channel> vt_list;
    for (int m = 0; m < n; ++m) {
        v_list.push_back(random_channel(rng, nx, nz));
        vt_list.push_back(perturb_channel(v_list.back(), rng.uniform(), rng));
    }
    const Channel encoder = random_channel(rng, nu, static_cast<int>(pow_size(nx, n)));
    const BoundReport report = check_timevarying_mi_gap(v_list, vt_list, encoder);
    return TrialRow{Suite::TimeVarying, seed, trial, report.epsilon, report.lhs, report.rhs, report.slack,
                    report.holds};
}

TrialRow theorem3_trial(std::uint64_t seed, int trial) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(trial));
    const int states = 1 + rng.uniform_int(3);  // 1..3
    const int nx = 2 + rng.uniform_int(2);
    const int ny = 2 + rng.uniform_int(2);
    const int nz = 2 + rng.uniform_int(2);
    const int nu = 2 + rng.uniform_int(2);
    ChannelFamily legitimate = random_family(rng, states, nx, ny);
    ChannelFamily eavesdropper = random_family(rng, states, nx, nz);
    const double radius = 0.1;  // keeps measured D < 0.1, in the monotone regime
    ChannelFamily legitimate_b = perturb_family_within(legitimate, radius, rng);
    ChannelFamily eavesdropper_b = perturb_family_within(eavesdropper, radius, rng);
    const WiretapUncertainty a = make_wiretap(std::move(legitimate), std::move(eavesdropper));
    const WiretapUncertainty b = make_wiretap(std::move(legitimate_b), std::move(eavesdropper_b));
    const DistributionVector p_u = make_distribution(rng.simplex(nu));
    const Channel encoder = random_channel(rng, nu, nx);
    const BoundReport report = check_secrecy_objective_gap(a, b, p_u, encoder);
    return TrialRow{Suite::Theorem3, seed, trial, report.epsilon, report.lhs, report.rhs, report.slack,
                    report.holds};
}

TrialRow robustness_trial(std::uint64_t seed, int trial) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(trial));
    const int n = 1 + rng.uniform_int(3);                  // 1..3
    const int messages = 2 + rng.uniform_int(3);           // 2..4
    const int nx = 2 + rng.uniform_int(2);
    const int nz = 2 + rng.uniform_int(2);
    const int states = 1 + rng.uniform_int(3);
    const bool useless = trial % 4 == 0;
    const bool cr_assisted = trial % 3 == 0;

    const ChannelFamily v = useless ? random_useless_family(rng, states, nx, nz)
                                    : random_family(rng, states, nx, nz);
    // Perturbed family, sometimes over a different state subset.
    ChannelFamily base_for_star = v;
    if (states > 1 && trial % 5 == 0) {
        const int keep = 1 + rng.uniform_int(states);
        std::vector<Channel> subset;
        for (int s = 0; s < keep; ++s) subset.push_back(v.members[static_cast<std::size_t>(rng.uniform_int(states))]);
        base_for_star = make_family(std::move(subset));
    }
    const ChannelFamily v_star = perturb_family_within(base_for_star, 0.2 * rng.uniform(0.05, 1.0), rng);

    const Channel reference = random_channel(rng, nx, 2);
    RobustnessReport report;
    bool useless_exact = true;
    if (cr_assisted) {
        std::vector<WiretapCode> members;
        const int count = 2 + rng.uniform_int(2);
        for (int g = 0; g < count; ++g)
            members.push_back(random_binning_code(n, messages, nx, reference, rng.next_u64(),
                                                  {g % 2 == 1, 2}));
        const CRCode code = make_cr_code(std::move(members), rng.simplex(count));
        report = robustness_check(code, v, v_star);
    } else {
        const WiretapCode code =
            random_binning_code(n, messages, nx, reference, rng.next_u64(), {trial % 2 == 1, 2});
        report = robustness_check(code, v, v_star);
    }
    if (useless) useless_exact = report.base_max_leakage == 0.0;
    const bool holds = report.bound.holds && useless_exact;
    return TrialRow{Suite::Robustness, seed, trial,        report.bound.epsilon,
                    report.bound.lhs,  report.bound.rhs,   report.bound.slack,
                    holds};
}

}  // namespace

const char* suite_name(Suite suite) {
    switch (suite) {
        case Suite::Lemma1: return "lemma1";
        case Suite::Lemma2: return "lemma2";
        case Suite::TimeVarying: return "timevarying";
        case Suite::Theorem3: return "theorem3";
        case Suite::Robustness: return "robustness";
    }
    return "unknown";
}

Suite suite_from_name(const std::string& name) {
    for (Suite s : all_suites())
        if (name == suite_name(s)) return s;
    fail("OutOfRange", "unknown suite '" + name + "'");
}

std::vector<Suite> all_suites() {
    return {Suite::Lemma1, Suite::Lemma2, Suite::TimeVarying, Suite::Theorem3, Suite::Robustness};
}

std::vector<TrialRow> run_suite(Suite suite, int trials, std::uint64_t seed, bool parallel) {
    if (trials < 1) fail("OutOfRange", "trials must be >= 1");
    std::vector<TrialRow> rows(static_cast<std::size_t>(trials));
    for_each_index(rows.size(), parallel, [&](std::size_t i) {
        const int trial = static_cast<int>(i);
        switch (suite) {
            case Suite::Lemma1: rows[i] = lemma1_trial(seed, trial); break;
            case Suite::Lemma2: rows[i] = lemma2_trial(seed, trial); break;
            case Suite::TimeVarying: rows[i] = timevarying_trial(seed, trial); break;
            case Suite::Theorem3: rows[i] = theorem3_trial(seed, trial); break;
            case Suite::Robustness: rows[i] = robustness_trial(seed, trial); break;
        }
    });
    return rows;
}

}  // namespace avwc
