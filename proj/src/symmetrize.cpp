#include "avwc/symmetrize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "avwc/capacity.hpp"
#include "avwc/errors.hpp"
#include "avwc/info.hpp"
#include "avwc/lp.hpp"
#include "avwc/parallel.hpp"

namespace avwc {

namespace {

// sum_s W(y|x1,s) sigma(s|x2)
double mixed_prob(const ChannelFamily& w, const Symmetrizer& sigma, int x1, int x2, int y) {
    double p = 0.0;
    for (int s = 0; s < w.size(); ++s)
        p += w.members[static_cast<std::size_t>(s)].prob(x1, y) *
             sigma.rows[static_cast<std::size_t>(x2)][static_cast<std::size_t>(s)];
    return p;
}

void check_shape(const ChannelFamily& w, const Symmetrizer& sigma) {
    if (sigma.input_size() != w.input_size() || sigma.state_size() != w.size())
        fail("DimensionMismatch", "symmetrizer shape does not match the family");
}

}  // namespace

Symmetrizer make_symmetrizer(std::vector<std::vector<double>> rows) {
    if (rows.empty() || rows[0].empty()) fail("DimensionMismatch", "symmetrizer needs at least one row");
    for (std::size_t x = 0; x < rows.size(); ++x) {
        if (rows[x].size() != rows[0].size())
            fail("DimensionMismatch", "symmetrizer row " + std::to_string(x) + " has wrong length");
        double sum = 0.0;
        for (double v : rows[x]) {
            if (!(v >= -kRowSumTolerance))
                fail("NonStochasticRow", "symmetrizer row " + std::to_string(x) + " has a negative entry");
            sum += v;
        }
        if (std::abs(sum - 1.0) > kRowSumTolerance)
            fail("NonStochasticRow", "symmetrizer row " + std::to_string(x) + " sums to " + std::to_string(sum));
    }
    return Symmetrizer{std::move(rows)};
}

double f_value(const Symmetrizer& sigma, const Symmetrizer& sigma_prime, const ChannelFamily& w) {
    check_shape(w, sigma);
    check_shape(w, sigma_prime);
    double total = 0.0;
    for (int x1 = 0; x1 < w.input_size(); ++x1)
        for (int x2 = 0; x2 < w.input_size(); ++x2)
            for (int y = 0; y < w.output_size(); ++y)
                total += std::abs(mixed_prob(w, sigma, x1, x2, y) - mixed_prob(w, sigma_prime, x2, x1, y));
    return total;
}

double verify_symmetrizer(const ChannelFamily& w, const Symmetrizer& sigma) {
    check_shape(w, sigma);
    double worst = 0.0;
    for (int x1 = 0; x1 < w.input_size(); ++x1)
        for (int x2 = 0; x2 < w.input_size(); ++x2)
            for (int y = 0; y < w.output_size(); ++y)
                worst = std::max(
                    std::abs(mixed_prob(w, sigma, x1, x2, y) - mixed_prob(w, sigma, x2, x1, y)), worst);
    return worst;
}

SymmetryVerdict min_f(const ChannelFamily& w) {
    const int nx = w.input_size();
    const int ny = w.output_size();
    const int ns = w.size();

    // Variables: sigma(s|x) [x-major], sigma'(s|x), slack t(x1,x2,y).
    const int sigma_vars = nx * ns;
    const int slack_vars = nx * nx * ny;
    const int total_vars = 2 * sigma_vars + slack_vars;
    const auto sigma_index = [&](int x, int s) { return x * ns + s; };
    const auto sigma_prime_index = [&](int x, int s) { return sigma_vars + x * ns + s; };
    const auto slack_index = [&](int x1, int x2, int y) {
        return 2 * sigma_vars + (x1 * nx + x2) * ny + y;
    };

    LpProblem lp;
    lp.c.assign(static_cast<std::size_t>(total_vars), 0.0);
    for (int i = 2 * sigma_vars; i < total_vars; ++i) lp.c[static_cast<std::size_t>(i)] = 1.0;

    // residual(x1,x2,y) = sum_s W(y|x1,s) sigma(s|x2) - sum_s W(y|x2,s) sigma'(s|x1)
    // constrained by +-residual <= t(x1,x2,y).
    for (int x1 = 0; x1 < nx; ++x1)
        for (int x2 = 0; x2 < nx; ++x2)
            for (int y = 0; y < ny; ++y) {
                std::vector<double> row(static_cast<std::size_t>(total_vars), 0.0);
                for (int s = 0; s < ns; ++s) {
                    row[static_cast<std::size_t>(sigma_index(x2, s))] +=
                        w.members[static_cast<std::size_t>(s)].prob(x1, y);
                    row[static_cast<std::size_t>(sigma_prime_index(x1, s))] -=
                        w.members[static_cast<std::size_t>(s)].prob(x2, y);
                }
                row[static_cast<std::size_t>(slack_index(x1, x2, y))] = -1.0;
                lp.a_ub.push_back(row);
                lp.b_ub.push_back(0.0);
                for (double& v : row) v = -v;
                row[static_cast<std::size_t>(slack_index(x1, x2, y))] = -1.0;
                lp.a_ub.push_back(std::move(row));
                lp.b_ub.push_back(0.0);
            }

    for (int x = 0; x < nx; ++x) {
        std::vector<double> row(static_cast<std::size_t>(total_vars), 0.0);
        for (int s = 0; s < ns; ++s) row[static_cast<std::size_t>(sigma_index(x, s))] = 1.0;
        lp.a_eq.push_back(std::move(row));
        lp.b_eq.push_back(1.0);
    }
    for (int x = 0; x < nx; ++x) {
        std::vector<double> row(static_cast<std::size_t>(total_vars), 0.0);
        for (int s = 0; s < ns; ++s) row[static_cast<std::size_t>(sigma_prime_index(x, s))] = 1.0;
        lp.a_eq.push_back(std::move(row));
        lp.b_eq.push_back(1.0);
    }

    const LpSolution sol = solve_lp(lp);

    const auto extract = [&](bool primed) {
        std::vector<std::vector<double>> rows(static_cast<std::size_t>(nx),
                                              std::vector<double>(static_cast<std::size_t>(ns), 0.0));
        for (int x = 0; x < nx; ++x) {
            double sum = 0.0;
            for (int s = 0; s < ns; ++s) {
                const int idx = primed ? sigma_prime_index(x, s) : sigma_index(x, s);
                double v = std::max(sol.x[static_cast<std::size_t>(idx)], 0.0);
                rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)] = v;
                sum += v;
            }
            for (int s = 0; s < ns; ++s) rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)] /= sum;
        }
        return Symmetrizer{std::move(rows)};
    };

    SymmetryVerdict verdict;
    verdict.lp_iterations = sol.iterations;
    Symmetrizer sigma = extract(false);
    Symmetrizer sigma_prime = extract(true);
    verdict.min_f = f_value(sigma, sigma_prime, w);
    verdict.symmetrizable = verdict.min_f <= kSymmetrizableThreshold;
    if (verdict.symmetrizable) {
        std::vector<std::vector<double>> avg(static_cast<std::size_t>(nx),
                                             std::vector<double>(static_cast<std::size_t>(ns), 0.0));
        for (int x = 0; x < nx; ++x)
            for (int s = 0; s < ns; ++s)
                avg[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)] =
                    0.5 * (sigma.rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)] +
                           sigma_prime.rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)]);
        verdict.certificate = Symmetrizer{std::move(avg)};
        verdict.residual = verify_symmetrizer(w, *verdict.certificate);
        verdict.sigma = std::move(sigma);
        verdict.sigma_prime = std::move(sigma_prime);
    } else {
        verdict.residual = std::numeric_limits<double>::quiet_NaN();
    }
    return verdict;
}

bool is_symmetrizable(const ChannelFamily& w) { return min_f(w).symmetrizable; }

double non_symmetrizability_radius(const ChannelFamily& w) {
    const SymmetryVerdict verdict = min_f(w);
    if (verdict.symmetrizable)
        fail("Symmetrizable", "radius undefined: family is symmetrizable (min_f = " +
                                  std::to_string(verdict.min_f) + ")");
    return verdict.min_f / 4.0;
}

ChannelFamily perturb_family_within(const ChannelFamily& w, double radius, Rng& rng) {
    // New rows move along (random simplex point - row); per-member distance
    // then scales linearly with t, so one scale factor bounds the whole
    // family. Directed distances can only shrink below the per-member max.
    std::vector<std::vector<std::vector<double>>> targets(static_cast<std::size_t>(w.size()));
    double worst = 0.0;
    for (int s = 0; s < w.size(); ++s) {
        auto& member_targets = targets[static_cast<std::size_t>(s)];
        member_targets.resize(static_cast<std::size_t>(w.input_size()));
        double member_dist = 0.0;
        for (int x = 0; x < w.input_size(); ++x) {
            member_targets[static_cast<std::size_t>(x)] = rng.simplex(w.output_size());
            member_dist = std::max(member_dist,
                                   variation_distance(w.members[static_cast<std::size_t>(s)].row(x),
                                                      member_targets[static_cast<std::size_t>(x)]));
        }
        worst = std::max(worst, member_dist);
    }
    const double scale = worst > 0.0 ? rng.uniform(0.1, 0.9) * radius / worst : 0.0;

    std::vector<Channel> members;
    members.reserve(static_cast<std::size_t>(w.size()));
    for (int s = 0; s < w.size(); ++s) {
        std::vector<std::vector<double>> rows(static_cast<std::size_t>(w.input_size()));
        for (int x = 0; x < w.input_size(); ++x) {
            auto& row = rows[static_cast<std::size_t>(x)];
            row.resize(static_cast<std::size_t>(w.output_size()));
            for (int y = 0; y < w.output_size(); ++y)
                row[static_cast<std::size_t>(y)] =
                    (1.0 - scale) * w.members[static_cast<std::size_t>(s)].prob(x, y) +
                    scale * targets[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)]
                                   [static_cast<std::size_t>(y)];
        }
        members.push_back(make_channel(rows));
    }
    return make_family(w.state_labels, std::move(members));
}

PositivityRadius positivity_radius(const WiretapUncertainty& u, const PositivityRadiusOptions& opts) {
    PositivityRadius result;

    SymmetryVerdict verdict = min_f(u.legitimate);
    if (verdict.symmetrizable) {
        result.note = "legitimate family is symmetrizable, unassisted secrecy capacity is 0";
        return result;
    }
    const SecrecyVerdict secrecy = secrecy_capacity_dichotomy(u);
    if (!(secrecy.cs_value.lo > 0.0)) {
        result.note = "no positive certified unassisted secrecy capacity";
        return result;
    }
    const double sym_radius = verdict.min_f / 4.0;

    // Largest grid radius whose sampled neighborhood keeps the CR-assisted
    // capacity above the margin.
    double capacity_radius = 0.0;
    for (int k = opts.grid_steps; k >= 1; --k) {
        const double radius = opts.radius_max * k / opts.grid_steps;
        std::vector<double> values(static_cast<std::size_t>(opts.samples_per_radius));
        for_each_index(values.size(), opts.parallel, [&](std::size_t i) {
            Rng rng = Rng::substream(opts.seed, static_cast<std::uint64_t>(k) * 1000 + i);
            const ChannelFamily perturbed = perturb_family_within(u.legitimate, radius, rng);
            values[i] = cr_capacity_avc(perturbed, opts.capacity_tol).value;
        });
        if (std::all_of(values.begin(), values.end(),
                        [&](double v) { return v >= opts.margin; })) {
            capacity_radius = radius;
            break;
        }
    }
    if (capacity_radius == 0.0) {
        result.note = "sampled CR capacity margin collapsed at the smallest grid radius";
        return result;
    }
    result.radius = std::min(sym_radius, capacity_radius);
    result.note = "heuristic: min of non-symmetrizability radius and sampled capacity radius";
    return result;
}

}  // namespace avwc
