#pragma once

#include <vector>

#include "avwc/channel.hpp"
#include "avwc/info.hpp"

namespace avwc {

/// Numeric slack absorbed on every bound comparison.
inline constexpr double kBoundSlack = 1e-9;

struct BoundReport {
    double epsilon = 0.0;  // measured distance
    double lhs = 0.0;      // measured information gap, bits
    double rhs = 0.0;      // bound value, bits
    bool holds = false;    // lhs <= rhs + kBoundSlack
    double slack = 0.0;    // rhs - lhs
};

BoundReport make_bound_report(double epsilon, double lhs, double rhs);

/// delta1(eps, |Y|) = 2 eps log2|Y| + 2 H2(eps), eps in [0, 1].
double delta1(double eps, int out_size);

/// delta2(eps, |Y|) = 4 eps log2|Y| + 4 H2(eps) = 2 delta1(eps, |Y|).
double delta2(double eps, int out_size);

/// delta(eps, |Y|, |Z|) = 4 eps log2(|Y||Z|) + 8 H2(eps)
///                      = delta2(eps, |Y|) + delta2(eps, |Z|).
double delta_secrecy(double eps, int y_size, int z_size);

/// Checkers re-measure eps from the realized inputs; measured total
/// variation can reach 2, so the binary-entropy term is evaluated at
/// min(eps, 1) there (extension beyond the stated (0,1) range).
double delta1_extended(double eps, int out_size);
double delta2_extended(double eps, int out_size);
double delta_secrecy_extended(double eps, int y_size, int z_size);

/// |H(Y|X||P) - H(Y|X||Q)| <= delta1(||P-Q||, |Y|); holds for every valid
/// input pair.
BoundReport check_conditional_entropy_gap(const JointDistribution& p, const JointDistribution& q);

/// Builds both n-letter joints P_{UY^n} for a uniform P_U and the given
/// stochastic encoder U -> P(X^n), computes the exact mutual informations by
/// enumeration, and reports the gap against n * delta2(d(w, wt), |Y|).
BoundReport check_blocklength_mi_gap(const Channel& w, const Channel& wt, const Channel& encoder, int n,
                                     std::int64_t enumeration_cap = kDefaultEnumerationCap);

/// Same shape with a different channel pair per letter;
/// eps = max_m d(V_m, Vt_m).
BoundReport check_timevarying_mi_gap(const std::vector<Channel>& v_list,
                                     const std::vector<Channel>& vt_list, const Channel& encoder,
                                     std::int64_t enumeration_cap = kDefaultEnumerationCap);

/// One-letter secrecy-objective surrogate: for a fixed (P_U, encoder) the
/// gap | (min_s I(U;Y_s) - max_s I(U;Z_s))_a - (same)_b | is reported
/// against delta_secrecy(D(a, b), |Y|, |Z|).
BoundReport check_secrecy_objective_gap(const WiretapUncertainty& a, const WiretapUncertainty& b,
                                        const DistributionVector& p_u, const Channel& encoder_1letter);

}  // namespace avwc
