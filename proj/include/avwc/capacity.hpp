#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "avwc/channel.hpp"

namespace avwc {

struct CapacityResult {
    double value = 0.0;  // bits
    std::vector<double> optimizer_p;
    std::optional<std::vector<double>> worst_q;
    double duality_gap = 0.0;
    int iterations = 0;
};

/// max_p I(p, w) by alternating maximization, certified by the standard
/// bracket: value = I(p, w) at the final input and
/// duality_gap = max_x D(w(.|x) || q) - value <= tol.
CapacityResult ba_capacity(const Channel& w, double tol = 1e-10, int max_iterations = 500000);

/// CR-assisted AVC capacity min_q max_p I(p, W_q). The outer objective is
/// convex in q; |S| = 2 runs golden section on the segment, larger state
/// sets use projected subgradient with diminishing steps. The returned
/// duality_gap = max_p I(p, W_q*) - min_q I(p*, W_q) certifies the minimax
/// identity numerically and must come out <= tol.
CapacityResult cr_capacity_avc(const ChannelFamily& w, double tol = 1e-5);

/// True iff every member's output law ignores the input, in which case any
/// code leaks nothing for any state sequence.
bool useless_eavesdropper(const ChannelFamily& v);

struct ValueInterval {
    double lo = 0.0;
    double hi = 0.0;
    bool exact() const { return lo == hi; }
};

enum class SecrecyRegime { SymmetrizableZero, Dichotomy, UselessEavesdropper, BoundsOnly };

const char* to_string(SecrecyRegime regime);

struct SecrecyVerdict {
    ValueInterval cs_value;
    ValueInterval cs_cr_value;
    SecrecyRegime regime = SecrecyRegime::BoundsOnly;
};

struct DichotomyOptions {
    double capacity_tol = 1e-5;
    int n1_u_size = 4;
    int n1_restarts = 8;
    std::uint64_t seed = 7;
};

/// Unassisted secrecy capacity via the symmetrizability dichotomy:
/// symmetrizable legitimate AVC forces cs = 0; with a useless eavesdropper
/// the CR-assisted secrecy capacity equals the plain CR capacity of the
/// legitimate AVC and the dichotomy pins cs; otherwise only an interval
/// [max(0, one-letter heuristic), CR capacity of the legitimate AVC] is
/// reported for both.
SecrecyVerdict secrecy_capacity_dichotomy(const WiretapUncertainty& u, const DichotomyOptions& opts = {});

/// Best value of min_s I(U;Y_s) - max_s I(U;Z_s) over randomized restarts of
/// (P_U, P_{X|U}) with local hill climbing, clipped at 0. One-letter
/// HEURISTIC lower bound for the compound secrecy capacity; the restarts
/// include a deterministic diagonal encoder so noiseless instances are found
/// exactly.
double n1_compound_secrecy_rate(const WiretapUncertainty& u, int u_size, int restarts, std::uint64_t seed);

}  // namespace avwc
