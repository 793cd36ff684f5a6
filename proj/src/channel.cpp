#include "avwc/channel.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "avwc/errors.hpp"

namespace avwc {

namespace {

std::atomic<std::uint64_t> g_renormalizations{0};

constexpr double kDriftTolerance = 1e-12;

// Rows produced by combinators stay within 1e-12 of stochastic in practice;
// anything worse is renormalized and counted.
std::vector<std::vector<double>> finalize_rows(std::vector<std::vector<double>> rows) {
    for (auto& row : rows) {
        double sum = 0.0;
        for (double v : row) sum += v;
        if (std::abs(sum - 1.0) > kDriftTolerance && sum > 0.0) {
            for (double& v : row) v /= sum;
            g_renormalizations.fetch_add(1, std::memory_order_relaxed);
        }
    }
    return rows;
}

}  // namespace

namespace diagnostics {
std::uint64_t renormalization_count() { return g_renormalizations.load(std::memory_order_relaxed); }
void reset_renormalization_count() { g_renormalizations.store(0, std::memory_order_relaxed); }
}  // namespace diagnostics

Channel make_channel(const std::vector<std::vector<double>>& rows) {
    if (rows.empty() || rows[0].empty()) fail("RaggedRows", "channel needs at least one non-empty row");
    const std::size_t width = rows[0].size();
    for (std::size_t x = 0; x < rows.size(); ++x) {
        if (rows[x].size() != width)
            fail("RaggedRows", "row " + std::to_string(x) + " has length " + std::to_string(rows[x].size()) +
                                   ", expected " + std::to_string(width));
        double sum = 0.0;
        for (double v : rows[x]) {
            if (!(v >= 0.0) || v > 1.0 + kRowSumTolerance)
                fail("NonStochasticRow", "row " + std::to_string(x) + " has entry " + std::to_string(v) +
                                             " outside [0, 1]");
            sum += v;
        }
        if (std::abs(sum - 1.0) > kRowSumTolerance)
            fail("NonStochasticRow",
                 "row " + std::to_string(x) + " sums to " + std::to_string(sum) + ", expected 1");
    }
    return ChannelBuilder::trusted(std::move(rows));
}

DistributionVector make_distribution(const std::vector<double>& entries) {
    if (entries.empty()) fail("NonStochasticRow", "distribution needs at least one entry");
    double sum = 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        double v = entries[i];
        if (!(v >= 0.0) || v > 1.0 + kRowSumTolerance)
            fail("NonStochasticRow",
                 "entry " + std::to_string(i) + " = " + std::to_string(v) + " outside [0, 1]");
        sum += v;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance)
        fail("NonStochasticRow", "distribution sums to " + std::to_string(sum) + ", expected 1");
    return DistributionVector(entries);
}

ChannelFamily make_family(std::vector<std::string> state_labels, std::vector<Channel> members) {
    if (members.empty()) fail("DimensionMismatch", "channel family must be non-empty");
    if (state_labels.size() != members.size())
        fail("DimensionMismatch", "family has " + std::to_string(members.size()) + " members but " +
                                      std::to_string(state_labels.size()) + " state labels");
    const int in = members[0].input_size();
    const int out = members[0].output_size();
    for (std::size_t s = 0; s < members.size(); ++s) {
        if (members[s].input_size() != in || members[s].output_size() != out)
            fail("DimensionMismatch", "family member " + std::to_string(s) + " has incompatible alphabets");
        for (std::size_t t = 0; t < s; ++t)
            if (state_labels[s] == state_labels[t])
                fail("DimensionMismatch", "duplicate state label '" + state_labels[s] + "'");
    }
    return ChannelFamily{std::move(state_labels), std::move(members)};
}

ChannelFamily make_family(std::vector<Channel> members) {
    std::vector<std::string> labels;
    labels.reserve(members.size());
    for (std::size_t s = 0; s < members.size(); ++s) labels.push_back("s" + std::to_string(s + 1));
    return make_family(std::move(labels), std::move(members));
}

WiretapUncertainty make_wiretap(ChannelFamily legitimate, ChannelFamily eavesdropper) {
    if (legitimate.input_size() != eavesdropper.input_size())
        fail("DimensionMismatch", "legitimate and eavesdropper families must share the input alphabet");
    if (legitimate.state_labels != eavesdropper.state_labels)
        fail("DimensionMismatch", "legitimate and eavesdropper families must share state labels");
    return WiretapUncertainty{std::move(legitimate), std::move(eavesdropper)};
}

Channel averaged_channel(const ChannelFamily& family, const DistributionVector& q) {
    if (q.size() != family.size())
        fail("DimensionMismatch", "state distribution has " + std::to_string(q.size()) +
                                      " entries for a family of size " + std::to_string(family.size()));
    const int in = family.input_size();
    const int out = family.output_size();
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(in),
                                          std::vector<double>(static_cast<std::size_t>(out), 0.0));
    for (int s = 0; s < family.size(); ++s) {
        const double weight = q.at(s);
        if (weight == 0.0) continue;
        for (int x = 0; x < in; ++x)
            for (int y = 0; y < out; ++y)
                rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] +=
                    weight * family.members[static_cast<std::size_t>(s)].prob(x, y);
    }
    return ChannelBuilder::trusted(finalize_rows(std::move(rows)));
}

Channel convex_combine(const Channel& a, const Channel& b, double lambda) {
    if (a.input_size() != b.input_size() || a.output_size() != b.output_size())
        fail("DimensionMismatch", "convex_combine needs alphabet-compatible channels");
    if (!(lambda >= 0.0 && lambda <= 1.0))
        fail("LambdaOutOfRange", "lambda = " + std::to_string(lambda) + " outside [0, 1]");
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(a.input_size()));
    for (int x = 0; x < a.input_size(); ++x) {
        auto& row = rows[static_cast<std::size_t>(x)];
        row.resize(static_cast<std::size_t>(a.output_size()));
        for (int y = 0; y < a.output_size(); ++y)
            row[static_cast<std::size_t>(y)] = (1.0 - lambda) * a.prob(x, y) + lambda * b.prob(x, y);
    }
    return ChannelBuilder::trusted(finalize_rows(std::move(rows)));
}

std::int64_t pow_size(int base, int length) {
    std::int64_t v = 1;
    for (int i = 0; i < length; ++i) {
        if (v > std::numeric_limits<std::int64_t>::max() / base) return std::numeric_limits<std::int64_t>::max();
        v *= base;
    }
    return v;
}

std::vector<int> index_to_seq(std::int64_t index, int base, int length) {
    std::vector<int> seq(static_cast<std::size_t>(length));
    for (int i = length - 1; i >= 0; --i) {
        seq[static_cast<std::size_t>(i)] = static_cast<int>(index % base);
        index /= base;
    }
    return seq;
}

Channel product_channel(const ChannelFamily& family, const std::vector<int>& state_seq,
                        std::int64_t enumeration_cap) {
    const int n = static_cast<int>(state_seq.size());
    if (n < 1) fail("UnknownState", "state sequence must have length >= 1");
    for (int s : state_seq)
        if (s < 0 || s >= family.size())
            fail("UnknownState", "state index " + std::to_string(s) + " outside family of size " +
                                     std::to_string(family.size()));
    const std::int64_t x_total = pow_size(family.input_size(), n);
    const std::int64_t y_total = pow_size(family.output_size(), n);
    if (x_total > enumeration_cap / y_total)
        fail("EnumerationCapExceeded", "product channel needs " + std::to_string(x_total) + " x " +
                                           std::to_string(y_total) + " entries, cap is " +
                                           std::to_string(enumeration_cap));

    std::vector<std::vector<double>> rows(static_cast<std::size_t>(x_total));
    for (std::int64_t xi = 0; xi < x_total; ++xi) {
        const std::vector<int> xs = index_to_seq(xi, family.input_size(), n);
        auto& row = rows[static_cast<std::size_t>(xi)];
        row.assign(static_cast<std::size_t>(y_total), 0.0);
        for (std::int64_t yi = 0; yi < y_total; ++yi) {
            const std::vector<int> ys = index_to_seq(yi, family.output_size(), n);
            double p = 1.0;
            for (int i = 0; i < n && p != 0.0; ++i)
                p *= family.members[static_cast<std::size_t>(state_seq[static_cast<std::size_t>(i)])].prob(
                    xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(i)]);
            row[static_cast<std::size_t>(yi)] = p;
        }
    }
    return ChannelBuilder::trusted(std::move(rows));
}

Channel product_channel(const ChannelFamily& family, const std::vector<std::string>& state_seq,
                        std::int64_t enumeration_cap) {
    std::vector<int> indices;
    indices.reserve(state_seq.size());
    for (const auto& label : state_seq) {
        int found = -1;
        for (int s = 0; s < family.size(); ++s)
            if (family.state_labels[static_cast<std::size_t>(s)] == label) {
                found = s;
                break;
            }
        if (found < 0) fail("UnknownState", "unknown state label '" + label + "'");
        indices.push_back(found);
    }
    return product_channel(family, indices, enumeration_cap);
}

}  // namespace avwc
