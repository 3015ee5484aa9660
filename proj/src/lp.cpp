#include "alphabwm/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "alphabwm/errors.hpp"

namespace alphabwm::lp {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-10;
constexpr double kPhaseOneTol = 1e-9;
constexpr std::size_t kStallLimit = 50;
constexpr std::size_t kPivotLimit = 200000;

enum class Outcome { optimal, unbounded };

// Dense tableau for  min d.v  s.t.  M v = r, v >= 0  with r >= 0.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(cols + 1), data_((rows + 1) * (cols + 1), 0.0), basis_(rows, 0),
          allowed_(cols, true) {}

    double& at(std::size_t r, std::size_t c) { return data_[r * stride_ + c]; }
    double at(std::size_t r, std::size_t c) const { return data_[r * stride_ + c]; }
    double& rhs(std::size_t r) { return data_[r * stride_ + cols_]; }
    double& cost(std::size_t c) { return data_[rows_ * stride_ + c]; }
    double& value() { return data_[rows_ * stride_ + cols_]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::vector<std::size_t>& basis() { return basis_; }
    std::vector<bool>& allowed() { return allowed_; }
    std::size_t pivots() const { return pivots_; }

    void price(const std::vector<double>& d) {
        for (std::size_t c = 0; c <= cols_; ++c) {
            double v = c < cols_ ? d[c] : 0.0;
            for (std::size_t r = 0; r < rows_; ++r) v -= d[basis_[r]] * at(r, c);
            data_[rows_ * stride_ + c] = v;
        }
    }

    void pivot(std::size_t pr, std::size_t pc) {
        double* prow = &data_[pr * stride_];
        const double inv = 1.0 / prow[pc];
        for (std::size_t c = 0; c <= cols_; ++c) prow[c] *= inv;
        prow[pc] = 1.0;
        for (std::size_t r = 0; r <= rows_; ++r) {
            if (r == pr) continue;
            double* row = &data_[r * stride_];
            const double f = row[pc];
            if (f == 0.0) continue;
            for (std::size_t c = 0; c <= cols_; ++c) row[c] -= f * prow[c];
            row[pc] = 0.0;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (rhs(r) < 0.0 && rhs(r) > -1e-13) rhs(r) = 0.0;
        }
        basis_[pr] = pc;
        ++pivots_;
    }

    Outcome run() {
        bool bland = false;
        std::size_t stalled = 0;
        while (true) {
            if (pivots_ > kPivotLimit) throw SolverError("simplex pivot limit exceeded");
            std::size_t enter = cols_;
            double best = -kCostTol;
            for (std::size_t c = 0; c < cols_; ++c) {
                if (!allowed_[c]) continue;
                const double rc = cost(c);
                if (rc < best) {
                    enter = c;
                    if (bland) break;
                    best = rc;
                }
            }
            if (enter == cols_) return Outcome::optimal;

            std::size_t leave = rows_;
            double ratio = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < rows_; ++r) {
                const double a = at(r, enter);
                if (a <= kPivotTol) continue;
                const double q = rhs(r) / a;
                if (leave == rows_ || q < ratio - 1e-12 * (1.0 + ratio)) {
                    leave = r;
                    ratio = q;
                } else if (q <= ratio + 1e-12 * (1.0 + ratio)) {
                    const bool better = bland ? basis_[r] < basis_[leave] : a > at(leave, enter);
                    if (better) {
                        leave = r;
                        ratio = std::min(ratio, q);
                    }
                }
            }
            if (leave == rows_) return Outcome::unbounded;
            if (ratio <= 1e-12) {
                if (++stalled > kStallLimit) bland = true;
            } else {
                stalled = 0;
            }
            pivot(leave, enter);
        }
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t stride_;
    std::vector<double> data_;
    std::vector<std::size_t> basis_;
    std::vector<bool> allowed_;
    std::size_t pivots_ = 0;
};

}  // namespace

void Problem::add_upper(std::vector<double> row, double rhs) {
    if (row.size() != num_vars) throw std::invalid_argument("constraint row has the wrong width");
    upper_rows.push_back(std::move(row));
    upper_rhs.push_back(rhs);
}

void Problem::add_equality(std::vector<double> row, double rhs) {
    if (row.size() != num_vars) throw std::invalid_argument("constraint row has the wrong width");
    equality_rows.push_back(std::move(row));
    equality_rhs.push_back(rhs);
}

Solution minimize(const Problem& p) {
    const std::size_t n = p.num_vars;
    const std::size_t nu = p.upper_rows.size();
    const std::size_t ne = p.equality_rows.size();
    std::vector<double> floor = p.lower_bound.empty() ? std::vector<double>(n, 0.0) : p.lower_bound;

    // Shift x = x' + floor so that x' >= 0.
    std::vector<double> bu(nu), be(ne);
    for (std::size_t k = 0; k < nu; ++k) {
        double v = p.upper_rhs[k];
        for (std::size_t j = 0; j < n; ++j) v -= p.upper_rows[k][j] * floor[j];
        bu[k] = v;
    }
    for (std::size_t q = 0; q < ne; ++q) {
        double v = p.equality_rhs[q];
        for (std::size_t j = 0; j < n; ++j) v -= p.equality_rows[q][j] * floor[j];
        be[q] = v;
    }

    // Dual in standard form. Columns: y (per inequality), z+, z- (per
    // equality), t (per primal variable), then artificials. Row j reads
    //   -sum_k A_kj y_k + sum_q E_qj (z+_q - z-_q) + t_j = c_j.
    const std::size_t col_zp = nu;
    const std::size_t col_zm = nu + ne;
    const std::size_t col_t = nu + 2 * ne;
    const std::size_t col_art = col_t + n;
    std::vector<double> sign(n, 1.0);
    std::size_t n_art = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (p.cost[j] < 0.0) {
            sign[j] = -1.0;
            ++n_art;
        }
    }
    const std::size_t cols = col_art + n_art;
    Tableau tab(n, cols);
    std::vector<double> d(cols, 0.0);
    for (std::size_t k = 0; k < nu; ++k) d[k] = bu[k];
    for (std::size_t q = 0; q < ne; ++q) {
        d[col_zp + q] = -be[q];
        d[col_zm + q] = be[q];
    }

    std::size_t art = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const double s = sign[j];
        for (std::size_t k = 0; k < nu; ++k) tab.at(j, k) = -s * p.upper_rows[k][j];
        for (std::size_t q = 0; q < ne; ++q) {
            tab.at(j, col_zp + q) = s * p.equality_rows[q][j];
            tab.at(j, col_zm + q) = -s * p.equality_rows[q][j];
        }
        tab.at(j, col_t + j) = s;
        tab.rhs(j) = s * p.cost[j];
        if (s > 0.0) {
            tab.basis()[j] = col_t + j;
        } else {
            tab.at(j, col_art + art) = 1.0;
            tab.basis()[j] = col_art + art;
            ++art;
        }
    }
    // Keep the initial columns to re-solve for the multipliers at the end.
    const Tableau initial = tab;

    Solution out;
    if (n_art > 0) {
        std::vector<double> phase_one(cols, 0.0);
        for (std::size_t a = col_art; a < cols; ++a) phase_one[a] = 1.0;
        tab.price(phase_one);
        tab.run();
        if (-tab.value() > kPhaseOneTol) {
            out.status = Status::unbounded;
            out.pivots = tab.pivots();
            return out;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (tab.basis()[r] < col_art) continue;
            for (std::size_t c = 0; c < col_art; ++c) {
                if (std::abs(tab.at(r, c)) > kPivotTol) {
                    tab.pivot(r, c);
                    break;
                }
            }
        }
        for (std::size_t a = col_art; a < cols; ++a) tab.allowed()[a] = false;
    }

    tab.price(d);
    if (tab.run() == Outcome::unbounded) {
        out.status = Status::infeasible;
        out.pivots = tab.pivots();
        return out;
    }

    // Multipliers of the final basis: B^T pi = d_B, in the sign-adjusted rows.
    Eigen::MatrixXd basis_matrix(n, n);
    Eigen::VectorXd d_basis(n);
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t col = tab.basis()[c];
        for (std::size_t r = 0; r < n; ++r) basis_matrix(r, c) = initial.at(r, col);
        d_basis(c) = d[col];
    }
    const Eigen::VectorXd pi = basis_matrix.transpose().partialPivLu().solve(d_basis);

    out.status = Status::optimal;
    out.pivots = tab.pivots();
    out.x.resize(n);
    out.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double shifted = -sign[j] * pi(static_cast<Eigen::Index>(j));
        out.x[j] = floor[j] + std::max(0.0, shifted);
        out.objective += p.cost[j] * out.x[j];
    }
    return out;
}

}  // namespace alphabwm::lp
