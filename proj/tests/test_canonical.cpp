#include <doctest.h>

#include <cmath>

#include "avwc/canonical.hpp"
#include "avwc/capacity.hpp"
#include "avwc/errors.hpp"
#include "avwc/info.hpp"
#include "oracles.hpp"

using namespace avwc;

TEST_CASE("canonical matrices are bit-exact") {
    const ChannelFamily blackwell = blackwell_family();
    CHECK(blackwell.members[0].rows() ==
          std::vector<std::vector<double>>{{1, 0, 0}, {0, 0, 1}});
    CHECK(blackwell.members[1].rows() ==
          std::vector<std::vector<double>>{{0, 0, 1}, {0, 1, 0}});

    CHECK(useless_binary_channel().rows() ==
          std::vector<std::vector<double>>{{0.5, 0.5}, {0.5, 0.5}});
    CHECK(noiseless_channel_2x3().rows() == std::vector<std::vector<double>>{{1, 0, 0}, {0, 1, 0}});

    const SymmetrizableInstance star = robustly_symmetrizable_instance();
    CHECK(star.uncertainty.legitimate.members[0].rows() ==
          std::vector<std::vector<double>>{{0.5, 0.5, 0.0}, {0.25, 0.0, 0.75}});
    CHECK(star.uncertainty.legitimate.members[1].rows() ==
          std::vector<std::vector<double>>{{0, 0, 1}, {0, 1, 0}});
    CHECK(star.sigma.rows == std::vector<std::vector<double>>{{0.8, 0.2}, {0.4, 0.6}});
}

TEST_CASE("blended family endpoints and midpoint") {
    const WiretapUncertainty at_zero = lambda_family(0.0);
    for (int s = 0; s < 2; ++s)
        CHECK(at_zero.legitimate.members[s].rows() == blackwell_family().members[s].rows());

    const WiretapUncertainty at_one = lambda_family(1.0);
    for (int s = 0; s < 2; ++s)
        CHECK(at_one.legitimate.members[s].rows() == noiseless_channel_2x3().rows());

    const WiretapUncertainty at_half = lambda_family(0.5);
    CHECK(at_half.legitimate.members[0].row(1) == std::vector<double>{0.0, 0.5, 0.5});

    CHECK(useless_eavesdropper(at_half.eavesdropper));
    CHECK_THROWS_AS(lambda_family(-0.01), Error);
    CHECK_THROWS_AS(lambda_family(1.01), Error);
}

TEST_CASE("blended family symmetrizability flips only at zero") {
    CHECK(is_symmetrizable(lambda_family(0.0).legitimate));
    for (double lambda : {0.02, 0.25, 0.6, 1.0})
        CHECK(!is_symmetrizable(lambda_family(lambda).legitimate));
}

TEST_CASE("distance between blended families is 2|lambda - lambda'|") {
    for (double a : {0.0, 0.1, 0.3, 0.5})
        for (double b : {0.05, 0.2, 0.5}) {
            const double d = uncertainty_distance(lambda_family(a), lambda_family(b));
            CHECK(std::abs(d - 2.0 * std::abs(a - b)) <= 1e-12);
        }
}

TEST_CASE("the symmetrizable showcase verifies and keeps positive cr capacity") {
    const SymmetrizableInstance star = robustly_symmetrizable_instance();
    CHECK(verify_symmetrizer(star.uncertainty.legitimate, star.sigma) <= 1e-12);
    CHECK(is_symmetrizable(star.uncertainty.legitimate));
    CHECK(cr_capacity_avc(star.uncertainty.legitimate).value > 0.0);
    CHECK(useless_eavesdropper(star.uncertainty.eavesdropper));
}

TEST_CASE("discontinuity sweep rows are internally consistent") {
    const std::vector<double> grid = {0.0, 0.25, 0.5, 0.75, 1.0};
    const std::vector<SweepRow> rows = discontinuity_sweep(grid);
    REQUIRE(rows.size() == grid.size());

    CHECK(rows[0].symmetrizable);
    CHECK(rows[0].cs_capacity == 0.0);
    CHECK(rows[0].cr_capacity > 0.0);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(!rows[i].symmetrizable);
        CHECK(rows[i].cs_capacity == rows[i].cr_capacity);
        CHECK(rows[i].cs_capacity > 0.0);
    }
    // Identical members at the top of the grid: a clean 1-bit channel.
    CHECK(rows.back().cr_capacity == doctest::Approx(1.0).epsilon(1e-5));

    CHECK_THROWS_AS(discontinuity_sweep({0.5, 0.2}), Error);
    CHECK_THROWS_AS(discontinuity_sweep({-0.1}), Error);
}

TEST_CASE("single-point sweep at zero") {
    const std::vector<SweepRow> rows = discontinuity_sweep({0.0});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].symmetrizable);
    CHECK(rows[0].cs_capacity == 0.0);
}

TEST_CASE("zero_region_probe degenerate and sampled runs") {
    const ProbeReport degenerate = zero_region_probe(0.0, 5, 17);
    CHECK(degenerate.samples == 5);
    CHECK(degenerate.fraction_symmetrizable == 1.0);
    CHECK(degenerate.fraction_cr_positive == 1.0);

    const ProbeReport sampled = zero_region_probe(1e-3, 20, 17);
    CHECK(sampled.symmetrizable_count + (sampled.samples - sampled.symmetrizable_count) ==
          sampled.samples);
    CHECK(sampled.fraction_cr_positive >= 0.0);
    CHECK(sampled.fraction_cr_positive <= 1.0);

    const ProbeReport wide = zero_region_probe(0.5, 10, 17);
    CHECK(wide.epsilon == 0.5);
    CHECK(wide.samples == 10);
}

TEST_CASE("default sweep grid") {
    const std::vector<double> grid = default_sweep_grid();
    REQUIRE(grid.size() == 51);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == 1.0);
    CHECK(grid[1] == doctest::Approx(0.02));
}
