#pragma once

#include <Eigen/Dense>

namespace polyrot {

/// Outcome of a dense simplex solve.
struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };
    Status status = Status::IterationLimit;
    Eigen::VectorXd x;          // primal solution (free variables)
    double objective = 0.0;     // c.dot(x) at the optimum
    Eigen::VectorXd duals;      // one multiplier >= 0 per inequality row
};

/// Maximize c.dot(x) subject to A x <= b with x unrestricted in sign.
///
/// Two-phase dense tableau simplex sized for small problems (tens of
/// variables, a few hundred rows). Dantzig pricing with a switch to Bland's
/// rule after a burn-in, so termination is guaranteed. The duals satisfy
/// A^T y = c, y >= 0, b.dot(y) = objective at an optimal basis.
LpResult solve_inequality_lp(const Eigen::MatrixXd& A,
                             const Eigen::VectorXd& b,
                             const Eigen::VectorXd& c,
                             int max_iterations = 20000);

}  // namespace polyrot
