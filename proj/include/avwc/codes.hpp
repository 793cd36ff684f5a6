#pragma once

#include <cstdint>
#include <vector>

#include "avwc/bounds.hpp"
#include "avwc/channel.hpp"
#include "avwc/rng.hpp"

namespace avwc {

inline constexpr std::int64_t kCodeJointCap = 1'000'000;   // |X|^n * |Z|^n entries
inline constexpr std::int64_t kStateSequenceCap = 4096;    // |S|^n sequences

/// Block code at blocklength n: stochastic encoder (one distribution over
/// X^n per message) and deterministic decoder (message per y^n, row-major
/// y-sequence order, messages 0-based).
struct WiretapCode {
    int n = 1;
    int message_count = 1;
    int x_size = 1;
    int y_size = 1;
    std::vector<std::vector<double>> encoder;  // encoder[j][x_seq]
    std::vector<int> decoder;                  // decoder[y_seq] in [0, message_count)
};

WiretapCode make_wiretap_code(int n, int message_count, int x_size, int y_size,
                              std::vector<std::vector<double>> encoder, std::vector<int> decoder);

/// Common-randomness code: a family of codes of one shape plus a
/// distribution over the family index.
struct CRCode {
    std::vector<WiretapCode> members;
    std::vector<double> gamma_dist;
};

CRCode make_cr_code(std::vector<WiretapCode> members, std::vector<double> gamma_dist);

struct LeakageEntry {
    std::vector<int> state_seq;
    double bits = 0.0;
};

struct LeakageReport {
    std::vector<LeakageEntry> per_state_sequence;  // enumeration order
    double max_leakage = 0.0;                      // bits
    double rate_leakage = 0.0;                     // max / n
};

/// Average decoding error over uniform messages for one state sequence.
double average_error(const WiretapCode& code, const ChannelFamily& w, const std::vector<int>& state_seq,
                     std::int64_t cap = kCodeJointCap);

/// I(J; Z^n) in bits of the exact joint
/// P(j, x^n, z^n) = V^n(z^n|x^n, s^n) E(x^n|j) / |J|.
double exact_leakage(const WiretapCode& code, const ChannelFamily& v, const std::vector<int>& state_seq,
                     std::int64_t cap = kCodeJointCap);

/// Exhaustive leakage over all |S|^n state sequences.
LeakageReport max_leakage(const WiretapCode& code, const ChannelFamily& v,
                          std::int64_t state_cap = kStateSequenceCap, std::int64_t cap = kCodeJointCap);

/// gamma-weighted averages of the unassisted quantities.
double cr_error(const CRCode& code, const ChannelFamily& w, const std::vector<int>& state_seq,
                std::int64_t cap = kCodeJointCap);
double cr_leakage(const CRCode& code, const ChannelFamily& v, const std::vector<int>& state_seq,
                  std::int64_t cap = kCodeJointCap);
LeakageReport cr_max_leakage(const CRCode& code, const ChannelFamily& v,
                             std::int64_t state_cap = kStateSequenceCap, std::int64_t cap = kCodeJointCap);

struct RobustnessReport {
    BoundReport bound;        // epsilon = directed distance from v_star into v
    double d_symmetric = 0.0; // max of both directed distances, for reference
    double base_rate_leakage = 0.0;       // delta_n under v
    double perturbed_rate_leakage = 0.0;  // under v_star
    double base_max_leakage = 0.0;        // unnormalized bits
    double perturbed_max_leakage = 0.0;
};

/// Weak-secrecy robustness: a code whose worst rate leakage under the
/// eavesdropper family v is delta_n keeps, under any family v_star whose
/// members all have eps-close members in v, worst rate leakage below
/// delta_n + delta2(eps, |Z|).
RobustnessReport robustness_check(const WiretapCode& code, const ChannelFamily& v,
                                  const ChannelFamily& v_star, std::int64_t state_cap = kStateSequenceCap,
                                  std::int64_t cap = kCodeJointCap);
RobustnessReport robustness_check(const CRCode& code, const ChannelFamily& v, const ChannelFamily& v_star,
                                  std::int64_t state_cap = kStateSequenceCap,
                                  std::int64_t cap = kCodeJointCap);

struct RandomCodeOptions {
    /// When true, each message gets a uniform distribution over a small
    /// random set of codewords instead of a fully random encoder row.
    bool codeword_subset = false;
    int codewords_per_message = 2;
};

/// Random test code: encoder rows sampled uniformly over distributions on
/// X^n (or uniform over a random codeword subset); decoder is maximum
/// likelihood under the n-letter product of `reference`, ties broken by the
/// smallest message index. Deterministic in the seed.
WiretapCode random_binning_code(int n, int message_count, int x_size, const Channel& reference,
                                std::uint64_t seed, const RandomCodeOptions& opts = {},
                                std::int64_t cap = kCodeJointCap);

}  // namespace avwc
