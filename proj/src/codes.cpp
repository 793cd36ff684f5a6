#include "avwc/codes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "avwc/errors.hpp"
#include "avwc/info.hpp"

namespace avwc {

namespace {

void check_caps(const WiretapCode& code, const ChannelFamily& family, std::int64_t cap) {
    if (family.input_size() != code.x_size)
        fail("DimensionMismatch", "family input alphabet " + std::to_string(family.input_size()) +
                                      " does not match code alphabet " + std::to_string(code.x_size));
    const std::int64_t x_total = pow_size(code.x_size, code.n);
    const std::int64_t out_total = pow_size(family.output_size(), code.n);
    if (x_total > cap / out_total)
        fail("EnumerationCapExceeded", "code evaluation needs " + std::to_string(x_total) + " x " +
                                           std::to_string(out_total) + " entries, cap is " +
                                           std::to_string(cap));
}

void check_state_seq(const ChannelFamily& family, const std::vector<int>& state_seq, int n) {
    if (static_cast<int>(state_seq.size()) != n)
        fail("LengthMismatch", "state sequence length " + std::to_string(state_seq.size()) +
                                   " does not match blocklength " + std::to_string(n));
    for (int s : state_seq)
        if (s < 0 || s >= family.size())
            fail("UnknownState", "state index " + std::to_string(s) + " outside family of size " +
                                     std::to_string(family.size()));
}

// prod_i member(s_i).prob(x_i, out_i) without materializing the product
// channel.
double sequence_prob(const ChannelFamily& family, const std::vector<int>& state_seq,
                     const std::vector<int>& xs, const std::vector<int>& outs) {
    double p = 1.0;
    for (std::size_t i = 0; i < xs.size() && p != 0.0; ++i)
        p *= family.members[static_cast<std::size_t>(state_seq[i])].prob(xs[i], outs[i]);
    return p;
}

}  // namespace

WiretapCode make_wiretap_code(int n, int message_count, int x_size, int y_size,
                              std::vector<std::vector<double>> encoder, std::vector<int> decoder) {
    if (n < 1 || message_count < 1 || x_size < 1 || y_size < 1)
        fail("DimensionMismatch", "code dimensions must be positive");
    const std::int64_t x_total = pow_size(x_size, n);
    const std::int64_t y_total = pow_size(y_size, n);
    if (static_cast<std::int64_t>(encoder.size()) != message_count)
        fail("DimensionMismatch", "encoder has " + std::to_string(encoder.size()) + " rows, expected " +
                                      std::to_string(message_count));
    for (std::size_t j = 0; j < encoder.size(); ++j) {
        if (static_cast<std::int64_t>(encoder[j].size()) != x_total)
            fail("DimensionMismatch", "encoder row " + std::to_string(j) + " has length " +
                                          std::to_string(encoder[j].size()) + ", expected " +
                                          std::to_string(x_total));
        double sum = 0.0;
        for (double v : encoder[j]) {
            if (!(v >= 0.0))
                fail("NonStochasticRow", "encoder row " + std::to_string(j) + " has a negative entry");
            sum += v;
        }
        if (std::abs(sum - 1.0) > kRowSumTolerance)
            fail("NonStochasticRow",
                 "encoder row " + std::to_string(j) + " sums to " + std::to_string(sum));
    }
    if (static_cast<std::int64_t>(decoder.size()) != y_total)
        fail("DimensionMismatch", "decoder covers " + std::to_string(decoder.size()) +
                                      " output sequences, expected " + std::to_string(y_total));
    for (int j : decoder)
        if (j < 0 || j >= message_count)
            fail("DimensionMismatch", "decoder maps to message " + std::to_string(j) +
                                          " outside [0, " + std::to_string(message_count) + ")");
    return WiretapCode{n, message_count, x_size, y_size, std::move(encoder), std::move(decoder)};
}

CRCode make_cr_code(std::vector<WiretapCode> members, std::vector<double> gamma_dist) {
    if (members.empty()) fail("DimensionMismatch", "CR code needs at least one member");
    for (const WiretapCode& code : members)
        if (code.n != members[0].n || code.message_count != members[0].message_count ||
            code.x_size != members[0].x_size || code.y_size != members[0].y_size)
            fail("DimensionMismatch", "CR code members must share (n, messages, alphabets)");
    make_distribution(gamma_dist);  // validates
    if (gamma_dist.size() != members.size())
        fail("DimensionMismatch", "gamma distribution size does not match member count");
    return CRCode{std::move(members), std::move(gamma_dist)};
}

double average_error(const WiretapCode& code, const ChannelFamily& w, const std::vector<int>& state_seq,
                     std::int64_t cap) {
    check_caps(code, w, cap);
    check_state_seq(w, state_seq, code.n);
    if (w.output_size() != code.y_size)
        fail("DimensionMismatch", "family output alphabet does not match the decoder's");
    const std::int64_t x_total = pow_size(code.x_size, code.n);
    const std::int64_t y_total = pow_size(code.y_size, code.n);

    double error = 0.0;
    for (std::int64_t yi = 0; yi < y_total; ++yi) {
        const std::vector<int> ys = index_to_seq(yi, code.y_size, code.n);
        const int decoded = code.decoder[static_cast<std::size_t>(yi)];
        for (std::int64_t xi = 0; xi < x_total; ++xi) {
            const std::vector<int> xs = index_to_seq(xi, code.x_size, code.n);
            const double wp = sequence_prob(w, state_seq, xs, ys);
            if (wp == 0.0) continue;
            for (int j = 0; j < code.message_count; ++j) {
                if (j == decoded) continue;
                error += wp * code.encoder[static_cast<std::size_t>(j)][static_cast<std::size_t>(xi)];
            }
        }
    }
    return error / static_cast<double>(code.message_count);
}

namespace {

bool input_independent(const Channel& member) {
    for (int x = 1; x < member.input_size(); ++x)
        for (int y = 0; y < member.output_size(); ++y)
            if (member.prob(x, y) != member.prob(0, y)) return false;
    return true;
}

}  // namespace

double exact_leakage(const WiretapCode& code, const ChannelFamily& v, const std::vector<int>& state_seq,
                     std::int64_t cap) {
    check_caps(code, v, cap);
    check_state_seq(v, state_seq, code.n);
    // When every letter ignores its input, Z^n is independent of J and the
    // leakage is exactly zero; skip the enumeration so no rounding noise
    // leaks into the result.
    if (std::all_of(state_seq.begin(), state_seq.end(), [&](int s) {
            return input_independent(v.members[static_cast<std::size_t>(s)]);
        }))
        return 0.0;
    const std::int64_t x_total = pow_size(code.x_size, code.n);
    const std::int64_t z_total = pow_size(v.output_size(), code.n);

    std::vector<double> mass(static_cast<std::size_t>(code.message_count) * z_total, 0.0);
    const double pj = 1.0 / static_cast<double>(code.message_count);
    for (std::int64_t xi = 0; xi < x_total; ++xi) {
        const std::vector<int> xs = index_to_seq(xi, code.x_size, code.n);
        for (std::int64_t zi = 0; zi < z_total; ++zi) {
            const std::vector<int> zs = index_to_seq(zi, v.output_size(), code.n);
            const double vp = sequence_prob(v, state_seq, xs, zs);
            if (vp == 0.0) continue;
            for (int j = 0; j < code.message_count; ++j)
                mass[static_cast<std::size_t>(j) * z_total + zi] +=
                    pj * vp * code.encoder[static_cast<std::size_t>(j)][static_cast<std::size_t>(xi)];
        }
    }
    return mutual_information(make_joint(code.message_count, static_cast<int>(z_total), mass));
}

LeakageReport max_leakage(const WiretapCode& code, const ChannelFamily& v, std::int64_t state_cap,
                          std::int64_t cap) {
    const std::int64_t s_total = pow_size(v.size(), code.n);
    if (s_total > state_cap)
        fail("EnumerationCapExceeded", "needs " + std::to_string(s_total) +
                                           " state sequences, cap is " + std::to_string(state_cap));
    LeakageReport report;
    report.per_state_sequence.reserve(static_cast<std::size_t>(s_total));
    for (std::int64_t si = 0; si < s_total; ++si) {
        LeakageEntry entry;
        entry.state_seq = index_to_seq(si, v.size(), code.n);
        entry.bits = exact_leakage(code, v, entry.state_seq, cap);
        report.max_leakage = std::max(report.max_leakage, entry.bits);
        report.per_state_sequence.push_back(std::move(entry));
    }
    report.rate_leakage = report.max_leakage / static_cast<double>(code.n);
    return report;
}

double cr_error(const CRCode& code, const ChannelFamily& w, const std::vector<int>& state_seq,
                std::int64_t cap) {
    double total = 0.0;
    for (std::size_t g = 0; g < code.members.size(); ++g)
        if (code.gamma_dist[g] > 0.0)
            total += code.gamma_dist[g] * average_error(code.members[g], w, state_seq, cap);
    return total;
}

double cr_leakage(const CRCode& code, const ChannelFamily& v, const std::vector<int>& state_seq,
                  std::int64_t cap) {
    double total = 0.0;
    for (std::size_t g = 0; g < code.members.size(); ++g)
        if (code.gamma_dist[g] > 0.0)
            total += code.gamma_dist[g] * exact_leakage(code.members[g], v, state_seq, cap);
    return total;
}

LeakageReport cr_max_leakage(const CRCode& code, const ChannelFamily& v, std::int64_t state_cap,
                             std::int64_t cap) {
    const int n = code.members[0].n;
    const std::int64_t s_total = pow_size(v.size(), n);
    if (s_total > state_cap)
        fail("EnumerationCapExceeded", "needs " + std::to_string(s_total) +
                                           " state sequences, cap is " + std::to_string(state_cap));
    LeakageReport report;
    report.per_state_sequence.reserve(static_cast<std::size_t>(s_total));
    for (std::int64_t si = 0; si < s_total; ++si) {
        LeakageEntry entry;
        entry.state_seq = index_to_seq(si, v.size(), n);
        entry.bits = cr_leakage(code, v, entry.state_seq, cap);
        report.max_leakage = std::max(report.max_leakage, entry.bits);
        report.per_state_sequence.push_back(std::move(entry));
    }
    report.rate_leakage = report.max_leakage / static_cast<double>(n);
    return report;
}

namespace {

RobustnessReport robustness_from_reports(const ChannelFamily& v, const ChannelFamily& v_star,
                                         const LeakageReport& base, const LeakageReport& perturbed,
                                         int n) {
    RobustnessReport report;
    // Theorem hypothesis direction: every perturbed state needs a close
    // original state.
    const double eps = directed_family_distance(v, v_star);
    report.d_symmetric = std::max(eps, directed_family_distance(v_star, v));
    report.base_max_leakage = base.max_leakage;
    report.perturbed_max_leakage = perturbed.max_leakage;
    report.base_rate_leakage = base.rate_leakage;
    report.perturbed_rate_leakage = perturbed.rate_leakage;
    (void)n;
    report.bound = make_bound_report(eps, perturbed.rate_leakage,
                                     base.rate_leakage + delta2_extended(eps, v.output_size()));
    return report;
}

}  // namespace

RobustnessReport robustness_check(const WiretapCode& code, const ChannelFamily& v,
                                  const ChannelFamily& v_star, std::int64_t state_cap, std::int64_t cap) {
    if (v.output_size() != v_star.output_size() || v.input_size() != v_star.input_size())
        fail("DimensionMismatch", "eavesdropper families must share alphabets");
    return robustness_from_reports(v, v_star, max_leakage(code, v, state_cap, cap),
                                   max_leakage(code, v_star, state_cap, cap), code.n);
}

RobustnessReport robustness_check(const CRCode& code, const ChannelFamily& v, const ChannelFamily& v_star,
                                  std::int64_t state_cap, std::int64_t cap) {
    if (v.output_size() != v_star.output_size() || v.input_size() != v_star.input_size())
        fail("DimensionMismatch", "eavesdropper families must share alphabets");
    return robustness_from_reports(v, v_star, cr_max_leakage(code, v, state_cap, cap),
                                   cr_max_leakage(code, v_star, state_cap, cap), code.members[0].n);
}

WiretapCode random_binning_code(int n, int message_count, int x_size, const Channel& reference,
                                std::uint64_t seed, const RandomCodeOptions& opts, std::int64_t cap) {
    if (reference.input_size() != x_size)
        fail("DimensionMismatch", "reference channel input alphabet does not match x_size");
    const int y_size = reference.output_size();
    const std::int64_t x_total = pow_size(x_size, n);
    const std::int64_t y_total = pow_size(y_size, n);
    if (x_total > cap / y_total)
        fail("CapExceeded", "code of blocklength " + std::to_string(n) + " needs " +
                                std::to_string(x_total) + " x " + std::to_string(y_total) +
                                " entries, cap is " + std::to_string(cap));

    Rng rng(seed);
    std::vector<std::vector<double>> encoder(static_cast<std::size_t>(message_count));
    for (auto& row : encoder) {
        if (opts.codeword_subset) {
            row.assign(static_cast<std::size_t>(x_total), 0.0);
            const int k = std::max(1, std::min<int>(opts.codewords_per_message, static_cast<int>(x_total)));
            int placed = 0;
            while (placed < k) {
                const std::int64_t pick = rng.uniform_int(static_cast<int>(x_total));
                if (row[static_cast<std::size_t>(pick)] == 0.0) {
                    row[static_cast<std::size_t>(pick)] = 1.0;
                    ++placed;
                }
            }
            for (double& v : row) v /= static_cast<double>(k);
        } else {
            row = rng.simplex(static_cast<int>(x_total));
        }
    }

    // ML decoding under the reference product channel, ties to the smallest
    // message index.
    const std::vector<int> single_state(static_cast<std::size_t>(n), 0);
    const ChannelFamily ref_family = make_family({reference});
    std::vector<int> decoder(static_cast<std::size_t>(y_total), 0);
    for (std::int64_t yi = 0; yi < y_total; ++yi) {
        const std::vector<int> ys = index_to_seq(yi, y_size, n);
        int best_j = 0;
        double best_p = -1.0;
        for (int j = 0; j < message_count; ++j) {
            double p = 0.0;
            for (std::int64_t xi = 0; xi < x_total; ++xi) {
                const double e = encoder[static_cast<std::size_t>(j)][static_cast<std::size_t>(xi)];
                if (e == 0.0) continue;
                p += e * sequence_prob(ref_family, single_state, index_to_seq(xi, x_size, n), ys);
            }
            if (p > best_p) {
                best_p = p;
                best_j = j;
            }
        }
        decoder[static_cast<std::size_t>(yi)] = best_j;
    }
    return make_wiretap_code(n, message_count, x_size, y_size, std::move(encoder), std::move(decoder));
}

}  // namespace avwc
