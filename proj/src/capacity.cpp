#include "avwc/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "avwc/errors.hpp"
#include "avwc/info.hpp"
#include "avwc/rng.hpp"
#include "avwc/symmetrize.hpp"

namespace avwc {

namespace {

// I(p, w) plus per-input divergences D_x = D(w(.|x) || q_out) in bits.
struct MutualInfoParts {
    double info = 0.0;
    std::vector<double> divergences;
};

MutualInfoParts info_parts(const std::vector<double>& p, const Channel& w) {
    const int nx = w.input_size();
    const int ny = w.output_size();
    std::vector<double> output(static_cast<std::size_t>(ny), 0.0);
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y)
            output[static_cast<std::size_t>(y)] += p[static_cast<std::size_t>(x)] * w.prob(x, y);
    MutualInfoParts parts;
    parts.divergences.assign(static_cast<std::size_t>(nx), 0.0);
    for (int x = 0; x < nx; ++x) {
        double d = 0.0;
        for (int y = 0; y < ny; ++y) {
            const double wyx = w.prob(x, y);
            if (wyx <= 0.0) continue;
            const double q = output[static_cast<std::size_t>(y)];
            d += q > 0.0 ? wyx * std::log2(wyx / q) : 0.0;
        }
        parts.divergences[static_cast<std::size_t>(x)] = d;
        parts.info += p[static_cast<std::size_t>(x)] * d;
    }
    return parts;
}

double averaged_mi(const ChannelFamily& family, const std::vector<double>& q, const std::vector<double>& p) {
    const Channel avg = averaged_channel(family, make_distribution(q));
    return info_parts(p, avg).info;
}

// Euclidean projection onto the probability simplex; sort-based, exact.
std::vector<double> project_simplex(std::vector<double> v) {
    std::vector<double> sorted = v;
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    double cumulative = 0.0;
    double theta = 0.0;
    int support = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        cumulative += sorted[i];
        const double candidate = (cumulative - 1.0) / static_cast<double>(i + 1);
        if (sorted[i] - candidate > 0.0) {
            theta = candidate;
            support = static_cast<int>(i + 1);
        }
    }
    (void)support;
    for (double& x : v) x = std::max(x - theta, 0.0);
    double sum = std::accumulate(v.begin(), v.end(), 0.0);
    for (double& x : v) x /= sum;
    return v;
}

// Golden-section minimum of a convex function on [0, 1].
template <typename F>
double golden_section(F&& f, double& best_t, double xtol = 1e-10) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.0, b = 1.0;
    double t1 = b - phi * (b - a), t2 = a + phi * (b - a);
    double f1 = f(t1), f2 = f(t2);
    while (b - a > xtol) {
        if (f1 <= f2) {
            b = t2;
            t2 = t1;
            f2 = f1;
            t1 = b - phi * (b - a);
            f1 = f(t1);
        } else {
            a = t1;
            t1 = t2;
            f1 = f2;
            t2 = a + phi * (b - a);
            f2 = f(t2);
        }
    }
    best_t = 0.5 * (a + b);
    return f(best_t);
}

// d/dq_s I(p, W_q) = sum_{x,y} p(x) W(y|x,s) log2(W_q(y|x) / Q(y)).
std::vector<double> q_gradient(const ChannelFamily& family, const std::vector<double>& q,
                               const std::vector<double>& p) {
    const Channel avg = averaged_channel(family, make_distribution(q));
    const int nx = family.input_size();
    const int ny = family.output_size();
    std::vector<double> output(static_cast<std::size_t>(ny), 0.0);
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y)
            output[static_cast<std::size_t>(y)] += p[static_cast<std::size_t>(x)] * avg.prob(x, y);
    std::vector<double> grad(static_cast<std::size_t>(family.size()), 0.0);
    for (int s = 0; s < family.size(); ++s) {
        double g = 0.0;
        for (int x = 0; x < nx; ++x) {
            if (p[static_cast<std::size_t>(x)] <= 0.0) continue;
            for (int y = 0; y < ny; ++y) {
                const double mix = std::max(avg.prob(x, y), 1e-300);
                const double out = std::max(output[static_cast<std::size_t>(y)], 1e-300);
                g += p[static_cast<std::size_t>(x)] *
                     family.members[static_cast<std::size_t>(s)].prob(x, y) * std::log2(mix / out);
            }
        }
        grad[static_cast<std::size_t>(s)] = g;
    }
    return grad;
}

// min over the simplex of the convex map q -> I(p, W_q).
double min_over_q_fixed_p(const ChannelFamily& family, const std::vector<double>& p) {
    if (family.size() == 1) return averaged_mi(family, {1.0}, p);
    if (family.size() == 2) {
        double t = 0.0;
        return golden_section([&](double x) { return averaged_mi(family, {1.0 - x, x}, p); }, t, 1e-11);
    }
    std::vector<double> q(static_cast<std::size_t>(family.size()),
                          1.0 / static_cast<double>(family.size()));
    double best = averaged_mi(family, q, p);
    for (int k = 1; k <= 4000; ++k) {
        const std::vector<double> grad = q_gradient(family, q, p);
        const double step = 0.25 / std::sqrt(static_cast<double>(k));
        for (std::size_t s = 0; s < q.size(); ++s) q[s] -= step * grad[s];
        q = project_simplex(std::move(q));
        best = std::min(best, averaged_mi(family, q, p));
    }
    return best;
}

}  // namespace

CapacityResult ba_capacity(const Channel& w, double tol, int max_iterations) {
    const int nx = w.input_size();
    std::vector<double> p(static_cast<std::size_t>(nx), 1.0 / static_cast<double>(nx));

    CapacityResult result;
    for (int iter = 1; iter <= max_iterations; ++iter) {
        const MutualInfoParts parts = info_parts(p, w);
        const double upper = *std::max_element(parts.divergences.begin(), parts.divergences.end());
        result.iterations = iter;
        if (upper - parts.info <= tol) {
            result.value = parts.info;
            result.duality_gap = upper - parts.info;
            result.optimizer_p = p;
            return result;
        }
        // p(x) <- p(x) 2^{D_x} / Z
        double z = 0.0;
        for (int x = 0; x < nx; ++x) {
            p[static_cast<std::size_t>(x)] *=
                std::exp2(parts.divergences[static_cast<std::size_t>(x)] - upper);
            z += p[static_cast<std::size_t>(x)];
        }
        for (double& v : p) v /= z;
    }
    fail("NoConvergence", "alternating maximization did not reach tol " + std::to_string(tol) + " in " +
                              std::to_string(max_iterations) + " iterations");
}

CapacityResult cr_capacity_avc(const ChannelFamily& w, double tol) {
    const double inner_tol = std::min(tol * 1e-3, 1e-8);

    CapacityResult result;
    std::vector<double> worst_q;
    if (w.size() == 1) {
        result = ba_capacity(w.members[0], inner_tol);
        worst_q = {1.0};
    } else if (w.size() == 2) {
        int evals = 0;
        const auto outer = [&](double t) {
            ++evals;
            return ba_capacity(averaged_channel(w, make_distribution({1.0 - t, t})), inner_tol).value;
        };
        double best_t = 0.0;
        golden_section(outer, best_t, 1e-10);
        worst_q = {1.0 - best_t, best_t};
        result = ba_capacity(averaged_channel(w, make_distribution(worst_q)), inner_tol);
        result.iterations = evals;
    } else {
        std::vector<double> q(static_cast<std::size_t>(w.size()), 1.0 / static_cast<double>(w.size()));
        std::vector<double> best_q = q;
        double best_value = std::numeric_limits<double>::infinity();
        const int steps = 6000;
        for (int k = 1; k <= steps; ++k) {
            const CapacityResult inner = ba_capacity(averaged_channel(w, make_distribution(q)), inner_tol);
            if (inner.value < best_value) {
                best_value = inner.value;
                best_q = q;
            }
            const std::vector<double> grad = q_gradient(w, q, inner.optimizer_p);
            const double step = 0.25 / std::sqrt(static_cast<double>(k));
            for (std::size_t s = 0; s < q.size(); ++s) q[s] -= step * grad[s];
            q = project_simplex(std::move(q));
        }
        worst_q = best_q;
        result = ba_capacity(averaged_channel(w, make_distribution(worst_q)), inner_tol);
        result.iterations = steps;
    }

    result.worst_q = worst_q;
    result.duality_gap = result.value - min_over_q_fixed_p(w, result.optimizer_p);
    if (result.duality_gap > tol)
        fail("NoConvergence", "minimax duality gap " + std::to_string(result.duality_gap) +
                                  " exceeds tol " + std::to_string(tol));
    return result;
}

bool useless_eavesdropper(const ChannelFamily& v) {
    for (const Channel& member : v.members)
        for (int x = 1; x < member.input_size(); ++x)
            for (int y = 0; y < member.output_size(); ++y)
                if (member.prob(x, y) != member.prob(0, y)) return false;
    return true;
}

const char* to_string(SecrecyRegime regime) {
    switch (regime) {
        case SecrecyRegime::SymmetrizableZero: return "SymmetrizableZero";
        case SecrecyRegime::Dichotomy: return "Dichotomy";
        case SecrecyRegime::UselessEavesdropper: return "UselessEavesdropper";
        case SecrecyRegime::BoundsOnly: return "BoundsOnly";
    }
    return "Unknown";
}

SecrecyVerdict secrecy_capacity_dichotomy(const WiretapUncertainty& u, const DichotomyOptions& opts) {
    SecrecyVerdict verdict;
    const bool symmetrizable = is_symmetrizable(u.legitimate);
    const bool useless = useless_eavesdropper(u.eavesdropper);

    if (symmetrizable) {
        verdict.regime = SecrecyRegime::SymmetrizableZero;
        verdict.cs_value = {0.0, 0.0};
        if (useless) {
            const double cr = cr_capacity_avc(u.legitimate, opts.capacity_tol).value;
            verdict.cs_cr_value = {cr, cr};
        } else {
            const double lower =
                n1_compound_secrecy_rate(u, opts.n1_u_size, opts.n1_restarts, opts.seed);
            const double upper = cr_capacity_avc(u.legitimate, opts.capacity_tol).value;
            verdict.cs_cr_value = {std::max(0.0, std::min(lower, upper)), upper};
        }
        return verdict;
    }
    if (useless) {
        verdict.regime = SecrecyRegime::UselessEavesdropper;
        const double cr = cr_capacity_avc(u.legitimate, opts.capacity_tol).value;
        verdict.cs_value = {cr, cr};
        verdict.cs_cr_value = {cr, cr};
        return verdict;
    }
    verdict.regime = SecrecyRegime::BoundsOnly;
    const double lower = n1_compound_secrecy_rate(u, opts.n1_u_size, opts.n1_restarts, opts.seed);
    const double upper = cr_capacity_avc(u.legitimate, opts.capacity_tol).value;
    const ValueInterval interval{std::max(0.0, std::min(lower, upper)), upper};
    verdict.cs_value = interval;     // non-symmetrizable, so cs = cs_cr
    verdict.cs_cr_value = interval;
    return verdict;
}

namespace {

double n1_objective(const WiretapUncertainty& u, const std::vector<double>& p_u,
                    const std::vector<std::vector<double>>& encoder) {
    const int nu = static_cast<int>(p_u.size());
    const int nx = u.legitimate.input_size();

    const auto family_extreme = [&](const ChannelFamily& family, bool want_min) {
        double extreme = want_min ? std::numeric_limits<double>::infinity()
                                  : -std::numeric_limits<double>::infinity();
        for (const Channel& member : family.members) {
            std::vector<double> mass(static_cast<std::size_t>(nu) * member.output_size(), 0.0);
            for (int uu = 0; uu < nu; ++uu)
                for (int x = 0; x < nx; ++x) {
                    const double w = p_u[static_cast<std::size_t>(uu)] *
                                     encoder[static_cast<std::size_t>(uu)][static_cast<std::size_t>(x)];
                    if (w <= 0.0) continue;
                    for (int y = 0; y < member.output_size(); ++y)
                        mass[static_cast<std::size_t>(uu) * member.output_size() + y] += w * member.prob(x, y);
                }
            const double info = mutual_information(make_joint(nu, member.output_size(), mass));
            extreme = want_min ? std::min(extreme, info) : std::max(extreme, info);
        }
        return extreme;
    };

    return family_extreme(u.legitimate, true) - family_extreme(u.eavesdropper, false);
}

}  // namespace

double n1_compound_secrecy_rate(const WiretapUncertainty& u, int u_size, int restarts,
                                std::uint64_t seed) {
    if (u_size < 1 || restarts < 1) fail("OutOfRange", "u_size and restarts must be >= 1");
    const int nx = u.legitimate.input_size();

    double best = 0.0;
    for (int r = 0; r < restarts; ++r) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(r));
        std::vector<double> p_u(static_cast<std::size_t>(u_size), 1.0 / u_size);
        std::vector<std::vector<double>> encoder(static_cast<std::size_t>(u_size));
        if (r == 0) {
            // Diagonal deterministic encoder: u -> u mod |X|.
            for (int uu = 0; uu < u_size; ++uu) {
                encoder[static_cast<std::size_t>(uu)].assign(static_cast<std::size_t>(nx), 0.0);
                encoder[static_cast<std::size_t>(uu)][static_cast<std::size_t>(uu % nx)] = 1.0;
            }
        } else {
            p_u = rng.simplex(u_size);
            for (auto& row : encoder) row = rng.simplex(nx);
        }

        double current = n1_objective(u, p_u, encoder);
        double jitter = 0.35;
        for (int step = 0; step < 160; ++step) {
            std::vector<double> p_candidate(p_u);
            std::vector<std::vector<double>> enc_candidate(encoder);
            const std::vector<double> p_target = rng.simplex(u_size);
            for (int i = 0; i < u_size; ++i)
                p_candidate[static_cast<std::size_t>(i)] =
                    (1.0 - jitter) * p_u[static_cast<std::size_t>(i)] +
                    jitter * p_target[static_cast<std::size_t>(i)];
            for (int uu = 0; uu < u_size; ++uu) {
                const std::vector<double> row_target = rng.simplex(nx);
                for (int x = 0; x < nx; ++x)
                    enc_candidate[static_cast<std::size_t>(uu)][static_cast<std::size_t>(x)] =
                        (1.0 - jitter) * encoder[static_cast<std::size_t>(uu)][static_cast<std::size_t>(x)] +
                        jitter * row_target[static_cast<std::size_t>(x)];
            }
            const double candidate = n1_objective(u, p_candidate, enc_candidate);
            if (candidate > current) {
                current = candidate;
                p_u = std::move(p_candidate);
                encoder = std::move(enc_candidate);
            } else {
                jitter *= 0.97;
            }
        }
        best = std::max(best, current);
    }
    return std::max(best, 0.0);
}

}  // namespace avwc
