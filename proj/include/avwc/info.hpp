#pragma once

#include <vector>

#include "avwc/channel.hpp"

namespace avwc {

/// Joint probability mass over a pair of finite supports, stored row-major
/// as an |A| x |B| table; total mass 1 within 1e-9.
class JointDistribution {
public:
    int a_size() const { return a_size_; }
    int b_size() const { return b_size_; }
    double mass(int a, int b) const { return mass_[static_cast<std::size_t>(a) * b_size_ + b]; }
    const std::vector<double>& table() const { return mass_; }

    friend JointDistribution make_joint(int a_size, int b_size, const std::vector<double>& mass);

private:
    JointDistribution(int a, int b, std::vector<double> m) : a_size_(a), b_size_(b), mass_(std::move(m)) {}
    int a_size_;
    int b_size_;
    std::vector<double> mass_;
};

JointDistribution make_joint(int a_size, int b_size, const std::vector<double>& mass);

/// Joint of an input distribution pushed through a channel: p(x) * w(y|x).
JointDistribution joint_from_channel(const DistributionVector& p, const Channel& w);

/// All information quantities are in bits; 0*log 0 and 0*log(0/0) are 0.

/// H2(eps) = -eps log2 eps - (1-eps) log2 (1-eps), eps in [0, 1].
double binary_entropy(double eps);

/// Shannon entropy of a mass table (need not be normalized for internal use,
/// but callers pass distributions).
double entropy(const std::vector<double>& mass);

/// H(B|A) = H(A,B) - H(A), computed from the joint table.
double conditional_entropy(const JointDistribution& joint);

/// I(A;B) of a joint table.
double mutual_information(const JointDistribution& joint);

/// I(X;Y) of the joint p(x) w(y|x).
double mutual_information(const DistributionVector& p, const Channel& w);

/// Total variation in the *unhalved* L1 convention used throughout:
///   ||P - Q|| = sum |P - Q|, range [0, 2].
/// Many references halve this; nothing here does.
double variation_distance(const std::vector<double>& p, const std::vector<double>& q);
double variation_distance(const DistributionVector& p, const DistributionVector& q);
double variation_distance(const JointDistribution& p, const JointDistribution& q);

/// d(W, W~) = max_x sum_y |W(y|x) - W~(y|x)|.
double channel_distance(const Channel& w, const Channel& wt);

/// max of the legitimate-link and eavesdropper-link distances.
double wiretap_pair_distance(const Channel& w, const Channel& v, const Channel& wt, const Channel& vt);

/// Directed distance between families: every member of `b` must have a close
/// member of `a`; returns max over members of b of the min distance into a.
/// Swapping the arguments gives the other direction.
double directed_family_distance(const ChannelFamily& a, const ChannelFamily& b);

/// D(a, b): max of the four directed distances (both link families, both
/// directions). Symmetric; zero iff each member has a distance-0 counterpart.
double uncertainty_distance(const WiretapUncertainty& a, const WiretapUncertainty& b);

}  // namespace avwc
