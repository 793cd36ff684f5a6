#include "avwc/lp.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "avwc/errors.hpp"

namespace avwc {

namespace {

// Dictionary simplex in the KACTL style: maximizes c.x subject to
// Ax <= b, x >= 0, with one auxiliary column driving phase 1. Pivoting is
// deterministic (most negative reduced cost, ties by variable id; leaving
// row by min ratio with ties by basic id), so repeated solves are
// bit-identical and stalls are cut off by the pivot cap.
struct Dictionary {
    static constexpr double kEps = 1e-9;

    int m, n;
    std::vector<int> nonbasic, basic;
    std::vector<std::vector<double>> d;
    int pivots = 0;
    int max_pivots;

    Dictionary(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
               const std::vector<double>& c, int pivot_cap)
        : m(static_cast<int>(b.size())),
          n(static_cast<int>(c.size())),
          nonbasic(static_cast<std::size_t>(n) + 1),
          basic(static_cast<std::size_t>(m)),
          d(static_cast<std::size_t>(m) + 2, std::vector<double>(static_cast<std::size_t>(n) + 2)),
          max_pivots(pivot_cap) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        for (int i = 0; i < m; ++i) {
            basic[static_cast<std::size_t>(i)] = n + i;
            d[i][n] = -1.0;
            d[i][n + 1] = b[static_cast<std::size_t>(i)];
        }
        for (int j = 0; j < n; ++j) {
            nonbasic[static_cast<std::size_t>(j)] = j;
            d[m][j] = -c[static_cast<std::size_t>(j)];
        }
        nonbasic[static_cast<std::size_t>(n)] = -1;
        d[m + 1][n] = 1.0;
    }

    void pivot(int r, int s) {
        double* a = d[static_cast<std::size_t>(r)].data();
        const double inv = 1.0 / a[s];
        for (int i = 0; i < m + 2; ++i) {
            if (i != r && std::abs(d[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)]) > kEps) {
                double* row = d[static_cast<std::size_t>(i)].data();
                const double inv2 = row[s] * inv;
                for (int j = 0; j < n + 2; ++j) row[j] -= a[j] * inv2;
                row[s] = a[s] * inv2;
            }
        }
        for (int j = 0; j < n + 2; ++j)
            if (j != s) d[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] *= inv;
        for (int i = 0; i < m + 2; ++i)
            if (i != r) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] *= -inv;
        d[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = inv;
        std::swap(basic[static_cast<std::size_t>(r)], nonbasic[static_cast<std::size_t>(s)]);
        if (++pivots > max_pivots)
            fail("SolverFailure", "simplex pivot cap " + std::to_string(max_pivots) + " exceeded");
    }

    bool simplex(int phase) {
        const int x = m + phase - 1;
        for (;;) {
            // Bland: entering = smallest variable id among negative reduced
            // costs (ids give a total order that includes the auxiliary -1),
            // so no cycle can form even on degenerate dictionaries.
            int s = -1;
            for (int j = 0; j <= n; ++j) {
                if (nonbasic[static_cast<std::size_t>(j)] == -phase) continue;
                if (d[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)] < -kEps &&
                    (s == -1 || nonbasic[static_cast<std::size_t>(j)] < nonbasic[static_cast<std::size_t>(s)]))
                    s = j;
            }
            if (s == -1) return true;
            int r = -1;
            for (int i = 0; i < m; ++i) {
                if (d[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] <= kEps) continue;
                if (r == -1 ||
                    std::make_pair(d[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + 1)] /
                                       d[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)],
                                   basic[static_cast<std::size_t>(i)]) <
                        std::make_pair(d[static_cast<std::size_t>(r)][static_cast<std::size_t>(n + 1)] /
                                           d[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)],
                                       basic[static_cast<std::size_t>(r)]))
                    r = i;
            }
            if (r == -1) return false;  // unbounded in this phase
            pivot(r, s);
        }
    }

    // Maximum of c.x; solution written to x.
    double solve(std::vector<double>& x) {
        int r = 0;
        for (int i = 1; i < m; ++i)
            if (d[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + 1)] <
                d[static_cast<std::size_t>(r)][static_cast<std::size_t>(n + 1)])
                r = i;
        if (d[static_cast<std::size_t>(r)][static_cast<std::size_t>(n + 1)] < -kEps) {
            pivot(r, n);
            if (!simplex(2) || d[static_cast<std::size_t>(m) + 1][static_cast<std::size_t>(n) + 1] < -kEps)
                fail("SolverFailure", "linear program is infeasible");
            for (int i = 0; i < m; ++i)
                if (basic[static_cast<std::size_t>(i)] == -1) {
                    int s = 0;
                    for (int j = 1; j <= n; ++j)
                        if (s == -1 ||
                            std::make_pair(d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                           nonbasic[static_cast<std::size_t>(j)]) <
                                std::make_pair(d[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)],
                                               nonbasic[static_cast<std::size_t>(s)]))
                            s = j;
                    pivot(i, s);
                }
        }
        const bool ok = simplex(1);
        if (!ok) fail("SolverFailure", "linear program is unbounded");
        x.assign(static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < m; ++i)
            if (basic[static_cast<std::size_t>(i)] < n)
                x[static_cast<std::size_t>(basic[static_cast<std::size_t>(i)])] =
                    d[static_cast<std::size_t>(i)][static_cast<std::size_t>(n) + 1];
        return d[static_cast<std::size_t>(m)][static_cast<std::size_t>(n) + 1];
    }
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem, double tol, int max_iterations) {
    (void)tol;  // the dictionary runs at its fixed kEps; kept for signature stability
    const int n = static_cast<int>(problem.c.size());
    if (static_cast<int>(problem.b_ub.size()) != static_cast<int>(problem.a_ub.size()) ||
        static_cast<int>(problem.b_eq.size()) != static_cast<int>(problem.a_eq.size()))
        fail("SolverFailure", "constraint matrix and rhs sizes disagree");
    for (const auto& row : problem.a_ub)
        if (static_cast<int>(row.size()) != n) fail("SolverFailure", "a_ub row width mismatch");
    for (const auto& row : problem.a_eq)
        if (static_cast<int>(row.size()) != n) fail("SolverFailure", "a_eq row width mismatch");

    // Equalities become inequality pairs; min c.x becomes max (-c).x.
    std::vector<std::vector<double>> a = problem.a_ub;
    std::vector<double> b = problem.b_ub;
    for (std::size_t i = 0; i < problem.a_eq.size(); ++i) {
        a.push_back(problem.a_eq[i]);
        b.push_back(problem.b_eq[i]);
        std::vector<double> negated = problem.a_eq[i];
        for (double& v : negated) v = -v;
        a.push_back(std::move(negated));
        b.push_back(-problem.b_eq[i]);
    }
    std::vector<double> c(problem.c);
    for (double& v : c) v = -v;

    Dictionary dictionary(a, b, c, max_iterations);
    LpSolution solution;
    solution.objective = -dictionary.solve(solution.x);
    solution.iterations = dictionary.pivots;
    return solution;
}

}  // namespace avwc
