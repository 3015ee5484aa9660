#pragma once

#include <cstddef>
#include <vector>

namespace alphabwm::lp {

enum class Status { optimal, infeasible, unbounded };

// minimize cost.x  subject to  upper_rows.x <= upper_rhs,
//                              equality_rows.x == equality_rhs,
//                              x >= lower_bound (zero when empty).
struct Problem {
    explicit Problem(std::size_t vars = 0) : num_vars(vars), cost(vars, 0.0) {}

    void add_upper(std::vector<double> row, double rhs);
    void add_equality(std::vector<double> row, double rhs);

    std::size_t num_vars;
    std::vector<double> cost;
    std::vector<double> lower_bound;
    std::vector<std::vector<double>> upper_rows;
    std::vector<double> upper_rhs;
    std::vector<std::vector<double>> equality_rows;
    std::vector<double> equality_rhs;
};

struct Solution {
    Status status = Status::infeasible;
    std::vector<double> x;
    double objective = 0.0;
    std::size_t pivots = 0;
};

// Solves the problem through its dual with a two-phase tableau simplex, which
// keeps the tableau at num_vars rows no matter how many inequalities there
// are. Dantzig pricing, switching to Bland's rule on degenerate stalls.
// `unbounded` also covers "infeasible or unbounded" when the dual is empty.
Solution minimize(const Problem& problem);

}  // namespace alphabwm::lp
