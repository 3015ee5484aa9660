#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alphabwm/consistency.hpp"
#include "alphabwm/fpcs.hpp"

namespace alphabwm {

// Lower bound on every weight component while solving.
inline constexpr double kWeightFloor = 1e-9;

struct SolverOptions {
    // Accepted and echoed for reproducibility; the LP-based search is
    // deterministic and does not draw random numbers.
    std::uint64_t seed = 42;
    double optimality_tol = 5e-4;
    int max_starts = 32;
    int dense_eta_grid = 1001;
};

struct WeightSet {
    std::vector<Tfn> weights;

    double gmir_sum() const;
    static WeightSet uniform(std::size_t n);
};

struct SolveReport {
    WeightSet weights;
    double epsilon_star = 0.0;
    // Largest level proven infeasible; epsilon_star - epsilon_lower bounds the optimality gap.
    double epsilon_lower = 0.0;
    double doa = 0.0;
    std::vector<Interval> interval_weights;
    std::vector<double> midpoint_weights;
    // Max residual of `weights` on a dense uniform grid (estimate of the
    // all-levels objective).
    double eta_dense = 0.0;
    std::optional<CrBound> cr;
    std::vector<bool> effectively_zero;
};

// 4(n-2)+2 absolute residuals at alpha: for each i outside {best, worst} the
// lower/upper best-to-i and lower/upper i-to-worst residuals, then the
// lower/upper best-to-worst residuals. Throws DomainError on a zero denominator.
std::vector<double> residuals(const WeightSet& ws, const Fpcs& fpcs, double alpha);
double max_residual(const WeightSet& ws, const Fpcs& fpcs, std::span<const double> alphas);
double max_residual(const WeightSet& ws, const Fpcs& fpcs, const AlphaGrid& grid);

// Minimax weights over the grid. Interval, midpoint and CR fields are left empty.
SolveReport solve_weights(const Fpcs& fpcs, const AlphaGrid& grid, const SolverOptions& opts = {});

// [min, max] of gmir(w_k) over weight sets whose grid residuals stay within
// epsilon_star (plus a 1e-8 relative slack).
Interval interval_weights(const Fpcs& fpcs, const AlphaGrid& grid, double epsilon_star, std::size_t k);
std::vector<Interval> interval_weights(const Fpcs& fpcs, const AlphaGrid& grid, double epsilon_star);

std::vector<double> midpoint_weights(std::span<const Interval> intervals);

// solve_weights followed by intervals, midpoints, dense residual and CR bound.
SolveReport solve(const Fpcs& fpcs, const AlphaGrid& grid, const SolverOptions& opts = {});

struct OracleOptions {
    std::uint64_t seed = 7;
    int starts = 32;
};

struct OracleResult {
    double value = 0.0;
    WeightSet weights;
};

// Brute-force upper bound on the optimum, independent of the LP machinery:
// exhaustive scan of crisp weights on a simplex lattice of step `resolution`,
// followed by seeded pattern search over the full TFN parameters from the
// best lattice points. Throws DomainError for more than four criteria.
OracleResult oracle_solve(const Fpcs& fpcs, const AlphaGrid& grid, double resolution, const OracleOptions& opts = {});

struct NamedWeight {
    std::string name;
    double weight = 0.0;
};

struct LocalWeights {
    std::vector<std::string> names;
    std::vector<double> weights;
};

// Global weight = parent midpoint x child local midpoint, no renormalization.
// Throws CompositionError when a parent criterion has no child block.
std::vector<NamedWeight> hierarchical_compose(const LocalWeights& parent,
                                              const std::map<std::string, LocalWeights>& children);

struct RankedWeight {
    std::string name;
    double weight = 0.0;
    int rank = 0;
    bool tied = false;
};

// Descending by weight; equal weights keep input order and are flagged.
std::vector<RankedWeight> rank(std::span<const NamedWeight> weights);

struct HierarchyReport {
    SolveReport root;
    std::vector<SolveReport> children;
    std::vector<RankedWeight> global;
};

HierarchyReport solve(const Hierarchy& hierarchy, const AlphaGrid& grid, const SolverOptions& opts = {});

}  // namespace alphabwm
