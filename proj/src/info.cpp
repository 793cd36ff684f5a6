#include "avwc/info.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "avwc/errors.hpp"

namespace avwc {

namespace {

inline double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

JointDistribution make_joint(int a_size, int b_size, const std::vector<double>& mass) {
    if (a_size < 1 || b_size < 1 ||
        mass.size() != static_cast<std::size_t>(a_size) * static_cast<std::size_t>(b_size))
        fail("DimensionMismatch", "joint table has " + std::to_string(mass.size()) + " entries, expected " +
                                      std::to_string(a_size) + " x " + std::to_string(b_size));
    double total = 0.0;
    for (std::size_t i = 0; i < mass.size(); ++i) {
        if (!(mass[i] >= 0.0))
            fail("NonStochasticRow", "joint entry " + std::to_string(i) + " is negative");
        total += mass[i];
    }
    if (std::abs(total - 1.0) > kRowSumTolerance)
        fail("NonStochasticRow", "joint mass sums to " + std::to_string(total) + ", expected 1");
    return JointDistribution(a_size, b_size, mass);
}

JointDistribution joint_from_channel(const DistributionVector& p, const Channel& w) {
    if (p.size() != w.input_size())
        fail("DimensionMismatch", "input distribution size " + std::to_string(p.size()) +
                                      " does not match channel input size " + std::to_string(w.input_size()));
    std::vector<double> mass(static_cast<std::size_t>(p.size()) * w.output_size());
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < w.output_size(); ++y)
            mass[static_cast<std::size_t>(x) * w.output_size() + y] = p.at(x) * w.prob(x, y);
    return make_joint(p.size(), w.output_size(), mass);
}

double binary_entropy(double eps) {
    if (!(eps >= 0.0 && eps <= 1.0))
        fail("OutOfRange", "binary_entropy argument " + std::to_string(eps) + " outside [0, 1]");
    return -xlog2x(eps) - xlog2x(1.0 - eps);
}

double entropy(const std::vector<double>& mass) {
    double h = 0.0;
    for (double v : mass) h -= xlog2x(v);
    return h;
}

double conditional_entropy(const JointDistribution& joint) {
    double h_joint = 0.0;
    std::vector<double> marginal_a(static_cast<std::size_t>(joint.a_size()), 0.0);
    for (int a = 0; a < joint.a_size(); ++a)
        for (int b = 0; b < joint.b_size(); ++b) {
            const double m = joint.mass(a, b);
            h_joint -= xlog2x(m);
            marginal_a[static_cast<std::size_t>(a)] += m;
        }
    return h_joint - entropy(marginal_a);
}

double mutual_information(const JointDistribution& joint) {
    std::vector<double> marginal_a(static_cast<std::size_t>(joint.a_size()), 0.0);
    std::vector<double> marginal_b(static_cast<std::size_t>(joint.b_size()), 0.0);
    for (int a = 0; a < joint.a_size(); ++a)
        for (int b = 0; b < joint.b_size(); ++b) {
            marginal_a[static_cast<std::size_t>(a)] += joint.mass(a, b);
            marginal_b[static_cast<std::size_t>(b)] += joint.mass(a, b);
        }
    double info = 0.0;
    for (int a = 0; a < joint.a_size(); ++a)
        for (int b = 0; b < joint.b_size(); ++b) {
            const double m = joint.mass(a, b);
            if (m <= 0.0) continue;
            info += m * std::log2(m / (marginal_a[static_cast<std::size_t>(a)] *
                                       marginal_b[static_cast<std::size_t>(b)]));
        }
    return info;
}

double mutual_information(const DistributionVector& p, const Channel& w) {
    if (p.size() != w.input_size())
        fail("DimensionMismatch", "input distribution size " + std::to_string(p.size()) +
                                      " does not match channel input size " + std::to_string(w.input_size()));
    std::vector<double> output(static_cast<std::size_t>(w.output_size()), 0.0);
    for (int x = 0; x < w.input_size(); ++x)
        for (int y = 0; y < w.output_size(); ++y)
            output[static_cast<std::size_t>(y)] += p.at(x) * w.prob(x, y);
    double info = 0.0;
    for (int x = 0; x < w.input_size(); ++x) {
        if (p.at(x) <= 0.0) continue;
        double divergence = 0.0;
        for (int y = 0; y < w.output_size(); ++y) {
            const double wyx = w.prob(x, y);
            if (wyx <= 0.0) continue;  // output symbols with q(y)=0 never reach here
            divergence += wyx * std::log2(wyx / output[static_cast<std::size_t>(y)]);
        }
        info += p.at(x) * divergence;
    }
    return info;
}

double variation_distance(const std::vector<double>& p, const std::vector<double>& q) {
    if (p.size() != q.size())
        fail("DimensionMismatch", "variation_distance needs equal supports, got " +
                                      std::to_string(p.size()) + " and " + std::to_string(q.size()));
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) d += std::abs(p[i] - q[i]);
    return d;
}

double variation_distance(const DistributionVector& p, const DistributionVector& q) {
    return variation_distance(p.entries(), q.entries());
}

double variation_distance(const JointDistribution& p, const JointDistribution& q) {
    if (p.a_size() != q.a_size() || p.b_size() != q.b_size())
        fail("DimensionMismatch", "variation_distance needs equal joint supports");
    return variation_distance(p.table(), q.table());
}

double channel_distance(const Channel& w, const Channel& wt) {
    if (w.input_size() != wt.input_size() || w.output_size() != wt.output_size())
        fail("DimensionMismatch", "channel_distance needs alphabet-compatible channels");
    double d = 0.0;
    for (int x = 0; x < w.input_size(); ++x)
        d = std::max(d, variation_distance(w.row(x), wt.row(x)));
    return d;
}

double wiretap_pair_distance(const Channel& w, const Channel& v, const Channel& wt, const Channel& vt) {
    return std::max(channel_distance(w, wt), channel_distance(v, vt));
}

double directed_family_distance(const ChannelFamily& a, const ChannelFamily& b) {
    if (a.input_size() != b.input_size() || a.output_size() != b.output_size())
        fail("DimensionMismatch", "directed_family_distance needs alphabet-compatible families");
    double worst = 0.0;
    for (const Channel& member_b : b.members) {
        double best = std::numeric_limits<double>::infinity();
        for (const Channel& member_a : a.members)
            best = std::min(best, channel_distance(member_a, member_b));
        worst = std::max(worst, best);
    }
    return worst;
}

double uncertainty_distance(const WiretapUncertainty& a, const WiretapUncertainty& b) {
    return std::max(std::max(directed_family_distance(a.legitimate, b.legitimate),
                             directed_family_distance(b.legitimate, a.legitimate)),
                    std::max(directed_family_distance(a.eavesdropper, b.eavesdropper),
                             directed_family_distance(b.eavesdropper, a.eavesdropper)));
}

}  // namespace avwc
