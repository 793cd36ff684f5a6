#pragma once

#include <vector>

namespace avwc {

/// minimize c.x  subject to  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0
struct LpProblem {
    std::vector<double> c;
    std::vector<std::vector<double>> a_ub;
    std::vector<double> b_ub;
    std::vector<std::vector<double>> a_eq;
    std::vector<double> b_eq;
};

struct LpSolution {
    std::vector<double> x;
    double objective = 0.0;
    int iterations = 0;
};

/// Dense two-phase simplex with Bland's rule (deterministic pivoting, no
/// cycling). Meant for the small instances this project produces (tens of
/// variables); throws SolverFailure on infeasible, unbounded, or iteration
/// cap hit.
LpSolution solve_lp(const LpProblem& problem, double tol = 1e-9, int max_iterations = 50000);

}  // namespace avwc
