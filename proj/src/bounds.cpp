#include "avwc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "avwc/errors.hpp"

namespace avwc {

namespace {

void check_eps_range(double eps) {
    if (!(eps >= 0.0 && eps <= 1.0))
        fail("OutOfRange", "eps = " + std::to_string(eps) + " outside [0, 1]");
}

// U -> Y^n joint for uniform P_U through encoder then an n-letter channel
// given row-wise as rows_n[x_seq][y_seq].
JointDistribution encoder_joint(const Channel& encoder, const Channel& n_letter) {
    if (encoder.output_size() != n_letter.input_size())
        fail("DimensionMismatch", "encoder feeds " + std::to_string(encoder.output_size()) +
                                      " sequences into a channel with " +
                                      std::to_string(n_letter.input_size()) + " rows");
    const int nu = encoder.input_size();
    const int ny = n_letter.output_size();
    std::vector<double> mass(static_cast<std::size_t>(nu) * ny, 0.0);
    const double pu = 1.0 / static_cast<double>(nu);
    for (int u = 0; u < nu; ++u)
        for (int xs = 0; xs < encoder.output_size(); ++xs) {
            const double weight = pu * encoder.prob(u, xs);
            if (weight <= 0.0) continue;
            for (int y = 0; y < ny; ++y) mass[static_cast<std::size_t>(u) * ny + y] += weight * n_letter.prob(xs, y);
        }
    return make_joint(nu, ny, mass);
}

Channel product_of_letters(const std::vector<Channel>& letters, std::int64_t cap) {
    const int n = static_cast<int>(letters.size());
    const int nx = letters[0].input_size();
    const int ny = letters[0].output_size();
    const std::int64_t x_total = pow_size(nx, n);
    const std::int64_t y_total = pow_size(ny, n);
    if (x_total > cap / y_total)
        fail("EnumerationCapExceeded", "letterwise product needs " + std::to_string(x_total) + " x " +
                                           std::to_string(y_total) + " entries, cap is " + std::to_string(cap));
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(x_total));
    for (std::int64_t xi = 0; xi < x_total; ++xi) {
        const std::vector<int> xs = index_to_seq(xi, nx, n);
        auto& row = rows[static_cast<std::size_t>(xi)];
        row.assign(static_cast<std::size_t>(y_total), 0.0);
        for (std::int64_t yi = 0; yi < y_total; ++yi) {
            const std::vector<int> ys = index_to_seq(yi, ny, n);
            double p = 1.0;
            for (int i = 0; i < n && p != 0.0; ++i)
                p *= letters[static_cast<std::size_t>(i)].prob(xs[static_cast<std::size_t>(i)],
                                                               ys[static_cast<std::size_t>(i)]);
            row[static_cast<std::size_t>(yi)] = p;
        }
    }
    return ChannelBuilder::trusted(std::move(rows));
}

// min_s I(U;Y_s) - max_s I(U;Z_s) at one letter for fixed (P_U, encoder).
double secrecy_objective(const WiretapUncertainty& u, const DistributionVector& p_u,
                         const Channel& encoder) {
    const auto extreme_info = [&](const ChannelFamily& family, bool want_min) {
        double extreme = 0.0;
        bool first = true;
        for (const Channel& member : family.members) {
            const int ny = member.output_size();
            std::vector<double> mass(static_cast<std::size_t>(p_u.size()) * ny, 0.0);
            for (int uu = 0; uu < p_u.size(); ++uu)
                for (int x = 0; x < encoder.output_size(); ++x) {
                    const double weight = p_u.at(uu) * encoder.prob(uu, x);
                    if (weight <= 0.0) continue;
                    for (int y = 0; y < ny; ++y)
                        mass[static_cast<std::size_t>(uu) * ny + y] += weight * member.prob(x, y);
                }
            const double info = mutual_information(make_joint(p_u.size(), ny, mass));
            extreme = first ? info : (want_min ? std::min(extreme, info) : std::max(extreme, info));
            first = false;
        }
        return extreme;
    };
    return extreme_info(u.legitimate, true) - extreme_info(u.eavesdropper, false);
}

}  // namespace

BoundReport make_bound_report(double epsilon, double lhs, double rhs) {
    BoundReport report;
    report.epsilon = epsilon;
    report.lhs = lhs;
    report.rhs = rhs;
    report.holds = lhs <= rhs + kBoundSlack;
    report.slack = rhs - lhs;
    return report;
}

double delta1(double eps, int out_size) {
    check_eps_range(eps);
    return 2.0 * eps * std::log2(static_cast<double>(out_size)) + 2.0 * binary_entropy(eps);
}

double delta2(double eps, int out_size) {
    check_eps_range(eps);
    return 4.0 * eps * std::log2(static_cast<double>(out_size)) + 4.0 * binary_entropy(eps);
}

double delta_secrecy(double eps, int y_size, int z_size) {
    check_eps_range(eps);
    return 4.0 * eps * std::log2(static_cast<double>(y_size) * static_cast<double>(z_size)) +
           8.0 * binary_entropy(eps);
}

double delta1_extended(double eps, int out_size) {
    return 2.0 * eps * std::log2(static_cast<double>(out_size)) + 2.0 * binary_entropy(std::min(eps, 1.0));
}

double delta2_extended(double eps, int out_size) {
    return 4.0 * eps * std::log2(static_cast<double>(out_size)) + 4.0 * binary_entropy(std::min(eps, 1.0));
}

double delta_secrecy_extended(double eps, int y_size, int z_size) {
    return delta2_extended(eps, y_size) + delta2_extended(eps, z_size);
}

BoundReport check_conditional_entropy_gap(const JointDistribution& p, const JointDistribution& q) {
    if (p.a_size() != q.a_size() || p.b_size() != q.b_size())
        fail("DimensionMismatch", "joint distributions must share their support shape");
    const double eps = variation_distance(p, q);
    const double lhs = std::abs(conditional_entropy(p) - conditional_entropy(q));
    return make_bound_report(eps, lhs, delta1_extended(eps, p.b_size()));
}

BoundReport check_blocklength_mi_gap(const Channel& w, const Channel& wt, const Channel& encoder,
                                     int n, std::int64_t enumeration_cap) {
    if (n < 1) fail("OutOfRange", "blocklength must be >= 1");
    if (w.input_size() != wt.input_size() || w.output_size() != wt.output_size())
        fail("DimensionMismatch", "channel pair must be alphabet-compatible");
    const double eps = channel_distance(w, wt);
    const ChannelFamily single_w = make_family({w});
    const ChannelFamily single_wt = make_family({wt});
    const std::vector<int> states(static_cast<std::size_t>(n), 0);
    const Channel wn = product_channel(single_w, states, enumeration_cap);
    const Channel wtn = product_channel(single_wt, states, enumeration_cap);
    const double lhs = std::abs(mutual_information(encoder_joint(encoder, wn)) -
                                mutual_information(encoder_joint(encoder, wtn)));
    return make_bound_report(eps, lhs, n * delta2_extended(eps, w.output_size()));
}

BoundReport check_timevarying_mi_gap(const std::vector<Channel>& v_list,
                                     const std::vector<Channel>& vt_list, const Channel& encoder,
                                     std::int64_t enumeration_cap) {
    if (v_list.empty() || v_list.size() != vt_list.size())
        fail("LengthMismatch", "per-letter channel lists must be non-empty and equally long");
    const int nx = v_list[0].input_size();
    const int nz = v_list[0].output_size();
    double eps = 0.0;
    for (std::size_t m = 0; m < v_list.size(); ++m) {
        if (v_list[m].input_size() != nx || v_list[m].output_size() != nz ||
            vt_list[m].input_size() != nx || vt_list[m].output_size() != nz)
            fail("DimensionMismatch", "per-letter channels must share alphabets");
        eps = std::max(eps, channel_distance(v_list[m], vt_list[m]));
    }
    const int n = static_cast<int>(v_list.size());
    const Channel vn = product_of_letters(v_list, enumeration_cap);
    const Channel vtn = product_of_letters(vt_list, enumeration_cap);
    const double lhs = std::abs(mutual_information(encoder_joint(encoder, vn)) -
                                mutual_information(encoder_joint(encoder, vtn)));
    return make_bound_report(eps, lhs, n * delta2_extended(eps, nz));
}

BoundReport check_secrecy_objective_gap(const WiretapUncertainty& a, const WiretapUncertainty& b,
                                        const DistributionVector& p_u, const Channel& encoder_1letter) {
    if (a.legitimate.input_size() != b.legitimate.input_size() ||
        a.legitimate.output_size() != b.legitimate.output_size() ||
        a.eavesdropper.output_size() != b.eavesdropper.output_size())
        fail("DimensionMismatch", "uncertainty pair must share alphabets");
    if (encoder_1letter.input_size() != p_u.size() ||
        encoder_1letter.output_size() != a.legitimate.input_size())
        fail("DimensionMismatch", "encoder shape must be |U| x |X|");
    const double eps = uncertainty_distance(a, b);
    const double lhs =
        std::abs(secrecy_objective(a, p_u, encoder_1letter) - secrecy_objective(b, p_u, encoder_1letter));
    return make_bound_report(
        eps, lhs,
        delta_secrecy_extended(eps, a.legitimate.output_size(), a.eavesdropper.output_size()));
}

}  // namespace avwc
