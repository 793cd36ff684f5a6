#include <doctest.h>

#include <cmath>

#include "avwc/bounds.hpp"
#include "avwc/canonical.hpp"
#include "avwc/capacity.hpp"
#include "avwc/errors.hpp"
#include "avwc/info.hpp"
#include "avwc/rng.hpp"
#include "oracles.hpp"

using namespace avwc;

TEST_CASE("alternating maximization reaches the closed-form capacities") {
    const CapacityResult identity = ba_capacity(make_channel({{1, 0}, {0, 1}}));
    CHECK(identity.value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(identity.duality_gap <= 1e-10);

    const double flip = 0.1;
    const CapacityResult bsc =
        ba_capacity(make_channel({{1 - flip, flip}, {flip, 1 - flip}}), 1e-10);
    CHECK(bsc.value == doctest::Approx(1.0 - binary_entropy(flip)).epsilon(1e-4));
    CHECK(std::abs(bsc.value - 0.5310044064) < 1e-4);

    const CapacityResult useless = ba_capacity(useless_binary_channel());
    CHECK(useless.value == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("cr capacity of identical members is the member capacity") {
    const Channel bsc = make_channel({{0.9, 0.1}, {0.1, 0.9}});
    const CapacityResult single = cr_capacity_avc(make_family({bsc, bsc}));
    CHECK(single.value == doctest::Approx(ba_capacity(bsc).value).epsilon(1e-6));
    CHECK(single.duality_gap <= 1e-5);
}

TEST_CASE("cr capacity of the two-state mix matches the grid oracle") {
    const ChannelFamily family = blackwell_family();
    const CapacityResult result = cr_capacity_avc(family);
    CHECK(result.duality_gap <= 1e-5);
    CHECK(result.duality_gap >= -1e-9);
    CHECK(result.value == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(result.value == doctest::Approx(oracle::grid_cr_capacity(family)).epsilon(1e-3));
    REQUIRE(result.worst_q.has_value());
    CHECK((*result.worst_q)[0] == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("cr capacity never beats the best pure state") {
    Rng rng(21);
    for (int rep = 0; rep < 15; ++rep) {
        const int states = 2 + rng.uniform_int(2);
        const ChannelFamily family = oracle::random_family(rng, states, 2, 2 + rng.uniform_int(2));
        const double tol = states == 2 ? 1e-5 : 1e-3;
        const CapacityResult result = cr_capacity_avc(family, tol);
        double best_member = 1e300;
        for (const Channel& member : family.members)
            best_member = std::min(best_member, ba_capacity(member).value);
        CHECK(result.value <= best_member + tol);
        CHECK(result.duality_gap <= tol);
    }
}

TEST_CASE("three-state family agrees with a fine grid scan") {
    Rng rng(22);
    const ChannelFamily family = oracle::random_family(rng, 3, 2, 3);
    const CapacityResult result = cr_capacity_avc(family, 1e-3);
    // Dense 2-simplex scan as the oracle.
    double best = 1e300;
    const int steps = 60;
    for (int i = 0; i <= steps; ++i)
        for (int j = 0; j <= steps - i; ++j) {
            const double a = static_cast<double>(i) / steps;
            const double b = static_cast<double>(j) / steps;
            const double c = std::max(0.0, 1.0 - a - b);
            best = std::min(best,
                            ba_capacity(averaged_channel(family, make_distribution({a, b, c})), 1e-9)
                                .value);
        }
    CHECK(result.value == doctest::Approx(best).epsilon(2e-3));
}

TEST_CASE("useless_eavesdropper detection") {
    CHECK(useless_eavesdropper(useless_eavesdropper_family()));
    CHECK(useless_eavesdropper(make_family({make_channel({{0.3, 0.7}, {0.3, 0.7}})})));
    CHECK(!useless_eavesdropper(make_family({make_channel({{1, 0}, {0, 1}})})));
    CHECK(!useless_eavesdropper(
        make_family({useless_binary_channel(), make_channel({{1, 0}, {0, 1}})})));
}

TEST_CASE("secrecy dichotomy across the three canonical regimes") {
    const SecrecyVerdict at_zero = secrecy_capacity_dichotomy(lambda_family(0.0));
    CHECK(at_zero.regime == SecrecyRegime::SymmetrizableZero);
    CHECK(at_zero.cs_value.exact());
    CHECK(at_zero.cs_value.lo == 0.0);
    CHECK(at_zero.cs_cr_value.lo > 0.0);

    const SecrecyVerdict at_half = secrecy_capacity_dichotomy(lambda_family(0.5));
    CHECK(at_half.regime == SecrecyRegime::UselessEavesdropper);
    CHECK(at_half.cs_value.exact());
    CHECK(at_half.cs_value.lo > 0.0);
    CHECK(at_half.cs_value.lo == at_half.cs_cr_value.lo);

    const SecrecyVerdict star = secrecy_capacity_dichotomy(robustly_symmetrizable_instance().uncertainty);
    CHECK(star.regime == SecrecyRegime::SymmetrizableZero);
    CHECK(star.cs_value.lo == 0.0);
    CHECK(star.cs_cr_value.lo > 0.0);

    // Identical members with useless eavesdropper: cs equals the member
    // capacity.
    const Channel bsc = make_channel({{0.85, 0.15}, {0.15, 0.85}});
    const SecrecyVerdict plain = secrecy_capacity_dichotomy(
        make_wiretap(make_family({bsc, bsc}), useless_eavesdropper_family()));
    CHECK(plain.regime == SecrecyRegime::UselessEavesdropper);
    CHECK(plain.cs_value.lo == doctest::Approx(ba_capacity(bsc).value).epsilon(1e-5));

    // Non-useless eavesdropper: interval bounds only.
    Rng rng(23);
    const WiretapUncertainty general =
        make_wiretap(oracle::random_family(rng, 2, 2, 3), oracle::random_family(rng, 2, 2, 2));
    const SecrecyVerdict bounds = secrecy_capacity_dichotomy(general);
    if (bounds.regime != SecrecyRegime::SymmetrizableZero) {
        CHECK(bounds.regime == SecrecyRegime::BoundsOnly);
        CHECK(bounds.cs_cr_value.lo <= bounds.cs_cr_value.hi + 1e-12);
        CHECK(bounds.cs_cr_value.lo >= 0.0);
    }
}

TEST_CASE("one-letter secrecy rate heuristic") {
    // Noiseless legitimate link, useless eavesdropper, single state: the
    // diagonal restart nails 1 bit exactly.
    const WiretapUncertainty degraded = make_wiretap(
        make_family({make_channel({{1, 0}, {0, 1}})}), make_family({useless_binary_channel()}));
    CHECK(n1_compound_secrecy_rate(degraded, 2, 1, 99) == doctest::Approx(1.0).epsilon(1e-12));

    // Identical links leak everything: objective clipped to 0.
    const ChannelFamily same = blackwell_family();
    const WiretapUncertainty mirrored = make_wiretap(same, same);
    CHECK(n1_compound_secrecy_rate(mirrored, 2, 3, 99) == 0.0);

    // The blended family at 1/2 as a compound channel: positive, and never
    // above the worst member capacity (the state is fixed for the whole
    // transmission, so mixtures of members play no role and the heuristic
    // can legitimately exceed the averaged-channel minimax value).
    const WiretapUncertainty blended = lambda_family(0.5);
    const double rate = n1_compound_secrecy_rate(blended, 2, 4, 99);
    CHECK(rate > 0.0);
    double worst_member = 1e300;
    for (const Channel& member : blended.legitimate.members)
        worst_member = std::min(worst_member, ba_capacity(member).value);
    CHECK(rate <= worst_member + 1e-9);
}

TEST_CASE("adjacent blend parameters move the cr capacity within the continuity bound") {
    const double tol = 1e-5;
    double previous = -1.0;
    for (double lambda = 0.0; lambda <= 1.0 + 1e-12; lambda += 0.1) {
        const double value = cr_capacity_avc(lambda_family(std::min(lambda, 1.0)).legitimate, tol).value;
        if (previous >= 0.0) {
            const double bound = delta_secrecy_extended(2.0 * 0.1, 3, 2) + 2.0 * tol;
            CHECK(std::abs(value - previous) <= bound);
        }
        previous = value;
    }
}
