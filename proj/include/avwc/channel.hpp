#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace avwc {

inline constexpr double kRowSumTolerance = 1e-9;
inline constexpr std::int64_t kDefaultEnumerationCap = 10'000'000;

/// A discrete memoryless channel: one probability row per input symbol.
/// Immutable after construction; construct through make_channel, which
/// rejects negative entries and rows whose sum is off by more than 1e-9.
class Channel {
public:
    int input_size() const { return static_cast<int>(rows_.size()); }
    int output_size() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }

    /// W(y|x)
    double prob(int x, int y) const { return rows_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }

    const std::vector<double>& row(int x) const { return rows_[static_cast<std::size_t>(x)]; }
    const std::vector<std::vector<double>>& rows() const { return rows_; }

    friend Channel make_channel(const std::vector<std::vector<double>>& rows);
    friend class ChannelBuilder;

private:
    explicit Channel(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {}
    std::vector<std::vector<double>> rows_;
};

/// Internal escape hatch for combinators whose outputs are stochastic by
/// construction (validated invariants live in the tests, not re-checked at
/// the 1e-9 ingestion tolerance, since n-letter products drift up to n*1e-9).
class ChannelBuilder {
public:
    static Channel trusted(std::vector<std::vector<double>> rows) { return Channel(std::move(rows)); }
};

/// Validating constructor.
/// Throws RaggedRows or NonStochasticRow (message names the offending row).
Channel make_channel(const std::vector<std::vector<double>>& rows);

/// Probability vector over a finite support, validated on construction.
class DistributionVector {
public:
    int size() const { return static_cast<int>(entries_.size()); }
    double at(int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& entries() const { return entries_; }

    friend DistributionVector make_distribution(const std::vector<double>& entries);

private:
    explicit DistributionVector(std::vector<double> entries) : entries_(std::move(entries)) {}
    std::vector<double> entries_;
};

DistributionVector make_distribution(const std::vector<double>& entries);

/// A finite state-indexed set of channels over common alphabets. Serves both
/// compound channels (state fixed for the whole transmission) and AVCs
/// (state free to vary per letter).
struct ChannelFamily {
    std::vector<std::string> state_labels;
    std::vector<Channel> members;

    int size() const { return static_cast<int>(members.size()); }
    int input_size() const { return members[0].input_size(); }
    int output_size() const { return members[0].output_size(); }
};

/// Validates non-emptiness, alphabet compatibility, and distinct labels.
ChannelFamily make_family(std::vector<std::string> state_labels, std::vector<Channel> members);

/// Convenience: members labeled "s1", "s2", ...
ChannelFamily make_family(std::vector<Channel> members);

/// A pair of channel families (legitimate link, eavesdropper link) driven by
/// a common state: identical state labels, common input alphabet.
struct WiretapUncertainty {
    ChannelFamily legitimate;
    ChannelFamily eavesdropper;
};

WiretapUncertainty make_wiretap(ChannelFamily legitimate, ChannelFamily eavesdropper);

/// State-averaged channel: rows(result) = sum_s q(s) * rows(member_s).
Channel averaged_channel(const ChannelFamily& family, const DistributionVector& q);

/// Entrywise (1-lambda)*a + lambda*b.
Channel convex_combine(const Channel& a, const Channel& b, double lambda);

/// n-letter channel on product alphabets for a fixed state sequence:
/// W^n(y^n|x^n, s^n) = prod_i W(y_i|x_i, s_i). Row index enumerates x^n in
/// row-major order (first letter most significant); columns enumerate y^n
/// the same way.
Channel product_channel(const ChannelFamily& family, const std::vector<int>& state_seq,
                        std::int64_t enumeration_cap = kDefaultEnumerationCap);
Channel product_channel(const ChannelFamily& family, const std::vector<std::string>& state_seq,
                        std::int64_t enumeration_cap = kDefaultEnumerationCap);

/// base^length with overflow guard; used for sequence-space sizes.
std::int64_t pow_size(int base, int length);

/// Digits of `index` in base `base`, most significant first, length `length`.
std::vector<int> index_to_seq(std::int64_t index, int base, int length);

namespace diagnostics {
/// Combinators renormalize a produced row only when its sum drifts from 1 by
/// more than 1e-12; each such event bumps this counter.
std::uint64_t renormalization_count();
void reset_renormalization_count();
}  // namespace diagnostics

}  // namespace avwc
