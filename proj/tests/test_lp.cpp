#include <doctest.h>

#include <cmath>

#include "avwc/errors.hpp"
#include "avwc/lp.hpp"

using namespace avwc;

TEST_CASE("simplex solves a textbook maximization") {
    // max 3x + 2y s.t. x + y <= 4, x + 3y <= 6  ->  min -3x - 2y.
    // Optimum at (4, 0), objective -12.
    LpProblem p;
    p.c = {-3.0, -2.0};
    p.a_ub = {{1.0, 1.0}, {1.0, 3.0}};
    p.b_ub = {4.0, 6.0};
    const LpSolution s = solve_lp(p);
    CHECK(s.objective == doctest::Approx(-12.0));
    CHECK(s.x[0] == doctest::Approx(4.0));
    CHECK(s.x[1] == doctest::Approx(0.0));
}

TEST_CASE("simplex handles equality constraints") {
    // min x + 2y + 3z s.t. x + y + z = 1, y >= 0.3 (as -y <= -0.3).
    LpProblem p;
    p.c = {1.0, 2.0, 3.0};
    p.a_eq = {{1.0, 1.0, 1.0}};
    p.b_eq = {1.0};
    p.a_ub = {{0.0, -1.0, 0.0}};
    p.b_ub = {-0.3};
    const LpSolution s = solve_lp(p);
    CHECK(s.objective == doctest::Approx(0.7 + 0.6));
    CHECK(s.x[0] == doctest::Approx(0.7));
    CHECK(s.x[1] == doctest::Approx(0.3));
    CHECK(s.x[2] == doctest::Approx(0.0));
}

TEST_CASE("simplex reports infeasible systems") {
    LpProblem p;
    p.c = {1.0};
    p.a_eq = {{1.0}};
    p.b_eq = {2.0};
    p.a_ub = {{1.0}};
    p.b_ub = {1.0};
    CHECK_THROWS_AS(solve_lp(p), Error);
    try {
        solve_lp(p);
    } catch (const Error& e) {
        CHECK(e.code() == "SolverFailure");
    }
}

TEST_CASE("simplex reports unbounded problems") {
    LpProblem p;
    p.c = {-1.0, 0.0};
    p.a_ub = {{0.0, 1.0}};
    p.b_ub = {1.0};
    CHECK_THROWS_AS(solve_lp(p), Error);
}

TEST_CASE("degenerate vertices terminate under the deterministic rule") {
    // A classic degenerate configuration; the anti-cycling rule must still
    // terminate at the optimum.
    LpProblem p;
    p.c = {-0.75, 150.0, -0.02, 6.0};
    p.a_ub = {{0.25, -60.0, -0.04, 9.0}, {0.5, -90.0, -0.02, 3.0}, {0.0, 0.0, 1.0, 0.0}};
    p.b_ub = {0.0, 0.0, 1.0};
    const LpSolution s = solve_lp(p);
    CHECK(s.objective == doctest::Approx(-0.05));
}

TEST_CASE("repeated solves are bit-identical") {
    LpProblem p;
    p.c = {1.0, -2.0, 0.5, 0.0};
    p.a_ub = {{1.0, 1.0, 1.0, 1.0}, {-1.0, 2.0, 0.0, 1.0}};
    p.b_ub = {2.0, 1.0};
    p.a_eq = {{1.0, 0.0, 1.0, 0.0}};
    p.b_eq = {1.0};
    const LpSolution a = solve_lp(p);
    const LpSolution b = solve_lp(p);
    CHECK(a.objective == b.objective);
    CHECK(a.x == b.x);
    CHECK(a.iterations == b.iterations);
}
