#include <doctest.h>

#include <cmath>

#include "avwc/bounds.hpp"
#include "avwc/canonical.hpp"
#include "avwc/errors.hpp"
#include "avwc/rng.hpp"
#include "oracles.hpp"

using namespace avwc;

TEST_CASE("delta1 values from direct substitution") {
    CHECK(delta1(0.0, 2) == 0.0);
    CHECK(delta1(0.0, 17) == 0.0);
    CHECK(delta1(0.5, 2) == doctest::Approx(3.0));
    CHECK(delta1(1.0, 4) == doctest::Approx(4.0));
    CHECK_THROWS_AS(delta1(1.5, 2), Error);
    CHECK_THROWS_AS(delta1(-0.1, 2), Error);
}

TEST_CASE("delta2 values and constant ratio to delta1") {
    CHECK(delta2(0.0, 5) == 0.0);
    CHECK(delta2(0.5, 2) == doctest::Approx(6.0));
    for (double eps = 0.0; eps <= 1.0; eps += 0.05)
        for (int k = 2; k <= 6; ++k) CHECK(delta2(eps, k) == doctest::Approx(2.0 * delta1(eps, k)));
}

TEST_CASE("delta_secrecy values and split identity") {
    CHECK(delta_secrecy(0.0, 2, 2) == 0.0);
    CHECK(delta_secrecy(0.5, 2, 2) == doctest::Approx(12.0));
    for (double eps = 0.0; eps <= 1.0; eps += 0.05)
        for (int y = 2; y <= 4; ++y)
            for (int z = 2; z <= 4; ++z)
                CHECK(delta_secrecy(eps, y, z) == doctest::Approx(delta2(eps, y) + delta2(eps, z)));
}

TEST_CASE("delta functions monotone on [0, 1/2] and in alphabet size") {
    for (int k = 2; k <= 6; ++k) {
        double prev1 = -1.0, prev2 = -1.0, prevs = -1.0;
        for (double eps = 0.0; eps <= 0.5 + 1e-12; eps += 0.01) {
            CHECK(delta1(eps, k) >= prev1);
            CHECK(delta2(eps, k) >= prev2);
            CHECK(delta_secrecy(eps, k, k) >= prevs);
            prev1 = delta1(eps, k);
            prev2 = delta2(eps, k);
            prevs = delta_secrecy(eps, k, k);
        }
    }
    for (double eps = 0.05; eps <= 1.0; eps += 0.05)
        for (int k = 2; k < 6; ++k) {
            CHECK(delta1(eps, k + 1) >= delta1(eps, k));
            CHECK(delta2(eps, k + 1) >= delta2(eps, k));
        }
}

TEST_CASE("conditional-entropy gap check on fixed cases") {
    const JointDistribution p = make_joint(2, 2, {0.5, 0.0, 0.25, 0.25});
    const BoundReport same = check_conditional_entropy_gap(p, p);
    CHECK(same.epsilon == 0.0);
    CHECK(same.lhs == 0.0);
    CHECK(same.rhs == 0.0);
    CHECK(same.holds);

    // Point masses sharing the X coordinate but differing in Y: distance 2,
    // both conditional entropies zero.
    const JointDistribution atom_a = make_joint(2, 2, {1.0, 0.0, 0.0, 0.0});
    const JointDistribution atom_b = make_joint(2, 2, {0.0, 1.0, 0.0, 0.0});
    const BoundReport far = check_conditional_entropy_gap(atom_a, atom_b);
    CHECK(far.epsilon == doctest::Approx(2.0));
    CHECK(far.lhs == 0.0);
    CHECK(far.holds);
}

TEST_CASE("conditional-entropy gap holds on random pairs") {
    Rng rng(101);
    for (int trial = 0; trial < 1000; ++trial) {
        const int nx = 2 + rng.uniform_int(5);
        const int ny = 2 + rng.uniform_int(5);
        const std::vector<double> p = rng.simplex(nx * ny);
        const std::vector<double> fresh = rng.simplex(nx * ny);
        const double t = rng.uniform();
        std::vector<double> q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) q[i] = (1.0 - t) * p[i] + t * fresh[i];
        const BoundReport report =
            check_conditional_entropy_gap(make_joint(nx, ny, p), make_joint(nx, ny, q));
        CHECK(report.holds);
        CHECK(report.epsilon <= 2.0 * t + 1e-12);
    }
}

TEST_CASE("blocklength MI gap check") {
    Rng rng(202);
    const Channel w = oracle::random_channel(rng, 2, 3);

    SUBCASE("identical channels give zero gap") {
        const Channel encoder = oracle::random_channel(rng, 2, 4);  // |U|=2 into X^2
        const BoundReport report = check_blocklength_mi_gap(w, w, encoder, 2);
        CHECK(report.epsilon == 0.0);
        CHECK(report.lhs == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(report.holds);
    }

    SUBCASE("one-letter deterministic encoder U = X") {
        const Channel wt = oracle::random_channel(rng, 2, 3);
        const Channel encoder = make_channel({{1, 0}, {0, 1}});
        const BoundReport report = check_blocklength_mi_gap(w, wt, encoder, 1);
        const double direct_gap =
            std::abs(oracle::mi_channel({0.5, 0.5}, w) - oracle::mi_channel({0.5, 0.5}, wt));
        CHECK(report.lhs == doctest::Approx(direct_gap).epsilon(1e-10));
        CHECK(report.holds);
    }

    SUBCASE("random trials across n") {
        for (int trial = 0; trial < 150; ++trial) {
            const int n = 1 + rng.uniform_int(3);
            const int nx = 2 + rng.uniform_int(2);
            const int ny = 2 + rng.uniform_int(2);
            const int nu = rng.uniform_int(2) == 0 ? 2 : 4;
            const Channel a = oracle::random_channel(rng, nx, ny);
            Channel b = oracle::random_channel(rng, nx, ny);
            const Channel encoder = oracle::random_channel(rng, nu, static_cast<int>(pow_size(nx, n)));
            const BoundReport report = check_blocklength_mi_gap(a, b, encoder, n);
            CHECK(report.holds);
        }
    }

    SUBCASE("gap is symmetric in the channel pair") {
        const Channel wt = oracle::random_channel(rng, 2, 3);
        const Channel encoder = oracle::random_channel(rng, 2, 4);
        const BoundReport ab = check_blocklength_mi_gap(w, wt, encoder, 2);
        const BoundReport ba = check_blocklength_mi_gap(wt, w, encoder, 2);
        CHECK(ab.lhs == doctest::Approx(ba.lhs).epsilon(1e-12));
        CHECK(ab.epsilon == doctest::Approx(ba.epsilon));
    }
}

TEST_CASE("time-varying MI gap check") {
    Rng rng(303);

    SUBCASE("identical letter pairs give zero gap") {
        const std::vector<Channel> v = {oracle::random_channel(rng, 2, 2),
                                        oracle::random_channel(rng, 2, 2)};
        const Channel encoder = oracle::random_channel(rng, 2, 4);
        const BoundReport report = check_timevarying_mi_gap(v, v, encoder);
        CHECK(report.lhs == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(report.holds);
    }

    SUBCASE("one perturbed letter holds") {
        const Channel a = oracle::random_channel(rng, 2, 2);
        const Channel b = oracle::random_channel(rng, 2, 2);
        const Channel b_perturbed = convex_combine(b, oracle::random_channel(rng, 2, 2), 0.15);
        const Channel encoder = oracle::random_channel(rng, 3, 4);
        const BoundReport report = check_timevarying_mi_gap({a, b}, {a, b_perturbed}, encoder);
        CHECK(report.holds);
        CHECK(report.epsilon == doctest::Approx(channel_distance(b, b_perturbed)));
    }

    SUBCASE("constant letters reduce to the fixed-channel check") {
        const Channel a = oracle::random_channel(rng, 2, 3);
        const Channel b = oracle::random_channel(rng, 2, 3);
        const Channel encoder = oracle::random_channel(rng, 2, 4);
        const BoundReport timevarying = check_timevarying_mi_gap({a, a}, {b, b}, encoder);
        const BoundReport fixed = check_blocklength_mi_gap(a, b, encoder, 2);
        CHECK(timevarying.lhs == doctest::Approx(fixed.lhs).epsilon(1e-12));
        CHECK(timevarying.rhs == doctest::Approx(fixed.rhs).epsilon(1e-12));
    }

    SUBCASE("length mismatch is rejected") {
        const Channel a = oracle::random_channel(rng, 2, 2);
        const Channel encoder = oracle::random_channel(rng, 2, 4);
        CHECK_THROWS_AS(check_timevarying_mi_gap({a, a}, {a}, encoder), Error);
    }
}

TEST_CASE("one-letter secrecy objective gap check") {
    SUBCASE("identical uncertainties give zero gap") {
        const WiretapUncertainty a = lambda_family(0.3);
        const Channel encoder = make_channel({{1, 0}, {0, 1}});
        const BoundReport report =
            check_secrecy_objective_gap(a, a, make_distribution({0.5, 0.5}), encoder);
        CHECK(report.lhs == 0.0);
        CHECK(report.holds);
    }

    SUBCASE("neighboring blend parameters") {
        const WiretapUncertainty a = lambda_family(0.30);
        const WiretapUncertainty b = lambda_family(0.31);
        const Channel encoder = make_channel({{1, 0}, {0, 1}});
        const BoundReport report =
            check_secrecy_objective_gap(a, b, make_distribution({0.5, 0.5}), encoder);
        CHECK(report.epsilon == doctest::Approx(0.02));
        CHECK(report.rhs == doctest::Approx(delta_secrecy(0.02, 3, 2)));
        CHECK(report.holds);
    }

    SUBCASE("random close pairs hold") {
        Rng rng(404);
        for (int trial = 0; trial < 150; ++trial) {
            const int states = 1 + rng.uniform_int(3);
            const int nx = 2 + rng.uniform_int(2);
            ChannelFamily legit = oracle::random_family(rng, states, nx, 2 + rng.uniform_int(2));
            ChannelFamily eaves = oracle::random_family(rng, states, nx, 2 + rng.uniform_int(2));
            ChannelFamily legit_b = perturb_family_within(legit, 0.1, rng);
            ChannelFamily eaves_b = perturb_family_within(eaves, 0.1, rng);
            const int nu = 2 + rng.uniform_int(2);
            const BoundReport report = check_secrecy_objective_gap(
                make_wiretap(legit, eaves), make_wiretap(std::move(legit_b), std::move(eaves_b)),
                make_distribution(rng.simplex(nu)), oracle::random_channel(rng, nu, nx));
            CHECK(report.epsilon < 0.1);
            CHECK(report.holds);
        }
    }
}
