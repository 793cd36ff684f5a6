#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "avwc/channel.hpp"
#include "avwc/rng.hpp"

namespace avwc {

/// Decision threshold on min_f for the symmetrizable verdict. Two orders of
/// magnitude above the LP tolerance (1e-9) so solver noise cannot flip it.
inline constexpr double kSymmetrizableThreshold = 1e-7;

/// A stochastic map from input symbols to distributions over states: one
/// simplex row per input.
struct Symmetrizer {
    std::vector<std::vector<double>> rows;  // rows[x][s]

    int input_size() const { return static_cast<int>(rows.size()); }
    int state_size() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
};

Symmetrizer make_symmetrizer(std::vector<std::vector<double>> rows);

struct SymmetryVerdict {
    double min_f = 0.0;
    bool symmetrizable = false;
    /// LP minimizer pair, present iff symmetrizable.
    std::optional<Symmetrizer> sigma;
    std::optional<Symmetrizer> sigma_prime;
    /// Averaged certificate (sigma + sigma')/2, present iff symmetrizable.
    std::optional<Symmetrizer> certificate;
    /// Verification residual of the certificate; NaN when absent.
    double residual = 0.0;
    int lp_iterations = 0;
};

/// F(sigma, sigma', W) = sum_{x1,x2,y} | sum_s W(y|x1,s) sigma(s|x2)
///                                     - sum_s W(y|x2,s) sigma'(s|x1) |.
/// The second term carries the transposed input pair so that a map solving
/// the swapped-input identity gives F(sigma, sigma) = 0.
double f_value(const Symmetrizer& sigma, const Symmetrizer& sigma_prime, const ChannelFamily& w);

/// Global minimum of F over the product of per-input simplices, computed as
/// a linear program (one slack per (x1, x2, y) triple bounds the absolute
/// value). The certificate is re-verified by evaluating f_value at the
/// optimum. Single-member families go through the same LP, so they come out
/// symmetrizable exactly when the cross-input identities admit a solution.
SymmetryVerdict min_f(const ChannelFamily& w);

/// min_f thresholded at kSymmetrizableThreshold.
bool is_symmetrizable(const ChannelFamily& w);

/// max over (x1,x2,y) of | sum_s W(y|x1,s) sigma(s|x2)
///                       - sum_s W(y|x2,s) sigma(s|x1) |; 0 means exact.
double verify_symmetrizer(const ChannelFamily& w, const Symmetrizer& sigma);

/// min_f(w)/4. Since F moves by at most 2 |X|^2 eps under eps-sized member
/// perturbations, the halved min_f level is certain only within
/// radius / |X|^2; inside the full radius it holds for typical draws but
/// not worst-case directions. Throws Symmetrizable when min_f(w) is below
/// threshold.
double non_symmetrizability_radius(const ChannelFamily& w);

/// Per-row jitter toward fresh simplex points, scaled so both directed
/// distances between `w` and the perturbed family stay strictly below
/// `radius` (realized distance is re-measured by the caller's suite).
ChannelFamily perturb_family_within(const ChannelFamily& w, double radius, Rng& rng);

struct PositivityRadiusOptions {
    double capacity_tol = 1e-4;
    double margin = 1e-3;     // bits the perturbed CR capacity must keep
    int grid_steps = 10;      // candidate radii radius_max * k / grid_steps
    double radius_max = 0.4;
    int samples_per_radius = 12;
    std::uint64_t seed = 2024;
    bool parallel = true;
};

struct PositivityRadius {
    std::optional<double> radius;  // nullopt = no guarantee
    bool heuristic = true;
    std::string note;
};

/// Heuristic neighborhood radius within which sampled AVWCs keep positive
/// unassisted secrecy capacity: min of the non-symmetrizability radius and
/// the largest grid radius whose sampled neighborhood keeps the CR capacity
/// above the margin. The underlying guarantee is existential, so this probes
/// rather than certifies; returns no guarantee when the capacity is zero or
/// the margin collapses.
PositivityRadius positivity_radius(const WiretapUncertainty& u, const PositivityRadiusOptions& opts = {});

}  // namespace avwc
