#include "alphabwm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "alphabwm/errors.hpp"
#include "alphabwm/lp.hpp"

namespace alphabwm {

namespace {

// One fuzzy ratio w_num / w_den constrained to approximate `term`.
struct Ratio {
    std::size_t num;
    std::size_t den;
    LinguisticTerm term;
};

std::vector<Ratio> ratios_of(const Fpcs& fpcs) {
    std::vector<Ratio> out;
    const std::size_t b = fpcs.best();
    const std::size_t w = fpcs.worst();
    for (std::size_t i = 0; i < fpcs.size(); ++i) {
        if (i == b || i == w) continue;
        out.push_back({b, i, fpcs.best_to_others()[i]});
        out.push_back({i, w, fpcs.others_to_worst()[i]});
    }
    out.push_back({b, w, fpcs.best_to_worst()});
    return out;
}

constexpr std::size_t var_l(std::size_t i) { return 3 * i; }
constexpr std::size_t var_m(std::size_t i) { return 3 * i + 1; }
constexpr std::size_t var_u(std::size_t i) { return 3 * i + 2; }

// Feasible region {residuals <= eps on the grid, 0 <= l <= m <= u, sum gmir = 1}
// as linear constraints: |N/D - t| <= eps with D > 0 is (t-eps) D <= N <= (t+eps) D.
lp::Problem feasibility_problem(const Fpcs& fpcs, const std::vector<Ratio>& ratios,
                                std::span<const double> levels, double eps) {
    const std::size_t n = fpcs.size();
    const std::size_t vars = 3 * n;
    lp::Problem prob(vars);
    prob.lower_bound.assign(vars, kWeightFloor);

    auto bound_ratio = [&](std::size_t num_a, std::size_t num_b, std::size_t den_a, std::size_t den_b,
                           double alpha, double target) {
        // N = (1-alpha) x[num_a] + alpha x[num_b], D likewise.
        std::vector<double> row(vars, 0.0);
        row[num_a] += 1.0 - alpha;
        row[num_b] += alpha;
        const double hi = target + eps;
        row[den_a] -= hi * (1.0 - alpha);
        row[den_b] -= hi * alpha;
        prob.add_upper(std::move(row), 0.0);
        const double lo = target - eps;
        if (lo > 0.0) {
            std::vector<double> low(vars, 0.0);
            low[num_a] -= 1.0 - alpha;
            low[num_b] -= alpha;
            low[den_a] += lo * (1.0 - alpha);
            low[den_b] += lo * alpha;
            prob.add_upper(std::move(low), 0.0);
        }
    };

    for (double alpha : levels) {
        for (const Ratio& r : ratios) {
            const Interval cut = r.term.tfn().alpha_cut(alpha);
            // lower end of num over upper end of den
            bound_ratio(var_l(r.num), var_m(r.num), var_u(r.den), var_m(r.den), alpha, cut.lo);
            // upper end of num over lower end of den
            bound_ratio(var_u(r.num), var_m(r.num), var_l(r.den), var_m(r.den), alpha, cut.hi);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> a(vars, 0.0);
        a[var_l(i)] = 1.0;
        a[var_m(i)] = -1.0;
        prob.add_upper(a, 0.0);
        std::vector<double> c(vars, 0.0);
        c[var_m(i)] = 1.0;
        c[var_u(i)] = -1.0;
        prob.add_upper(c, 0.0);
    }
    std::vector<double> norm(vars, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        norm[var_l(i)] = 1.0 / 6.0;
        norm[var_m(i)] = 4.0 / 6.0;
        norm[var_u(i)] = 1.0 / 6.0;
    }
    prob.add_equality(norm, 1.0);
    return prob;
}

void set_gmir_cost(lp::Problem& prob, std::size_t n, const std::vector<bool>& include) {
    std::fill(prob.cost.begin(), prob.cost.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!include[i]) continue;
        prob.cost[var_l(i)] = 1.0 / 6.0;
        prob.cost[var_m(i)] = 4.0 / 6.0;
        prob.cost[var_u(i)] = 1.0 / 6.0;
    }
}

WeightSet weights_from(const std::vector<double>& x, std::size_t n) {
    WeightSet ws;
    for (std::size_t i = 0; i < n; ++i) {
        const double l = x[var_l(i)];
        const double m = std::max(l, x[var_m(i)]);
        const double u = std::max(m, x[var_u(i)]);
        ws.weights.emplace_back(l, m, u);
    }
    return ws;
}

std::optional<WeightSet> feasible_at(const Fpcs& fpcs, const std::vector<Ratio>& ratios,
                                     std::span<const double> levels, double eps) {
    lp::Problem prob = feasibility_problem(fpcs, ratios, levels, eps);
    set_gmir_cost(prob, fpcs.size(), std::vector<bool>(fpcs.size(), true));
    const lp::Solution sol = lp::minimize(prob);
    if (sol.status != lp::Status::optimal) return std::nullopt;
    return weights_from(sol.x, fpcs.size());
}

double slack_for(double epsilon_star) { return 1e-8 * std::max(1.0, epsilon_star); }

}  // namespace

double WeightSet::gmir_sum() const {
    double s = 0.0;
    for (const Tfn& t : weights) s += t.gmir();
    return s;
}

WeightSet WeightSet::uniform(std::size_t n) {
    const double v = 1.0 / static_cast<double>(n);
    return WeightSet{std::vector<Tfn>(n, Tfn(v, v, v))};
}

std::vector<double> residuals(const WeightSet& ws, const Fpcs& fpcs, double alpha) {
    if (ws.weights.size() != fpcs.size()) throw DomainError("weight set size does not match the system");
    std::vector<double> out;
    for (const Ratio& r : ratios_of(fpcs)) {
        const Interval num = ws.weights[r.num].alpha_cut(alpha);
        const Interval den = ws.weights[r.den].alpha_cut(alpha);
        if (!(den.lo > 0.0)) throw DomainError("zero weight in a residual denominator");
        const Interval cut = r.term.tfn().alpha_cut(alpha);
        out.push_back(std::abs(num.lo / den.hi - cut.lo));
        out.push_back(std::abs(num.hi / den.lo - cut.hi));
    }
    return out;
}

double max_residual(const WeightSet& ws, const Fpcs& fpcs, std::span<const double> alphas) {
    double worst = 0.0;
    for (double alpha : alphas) {
        for (double r : residuals(ws, fpcs, alpha)) worst = std::max(worst, r);
    }
    return worst;
}

double max_residual(const WeightSet& ws, const Fpcs& fpcs, const AlphaGrid& grid) {
    return max_residual(ws, fpcs, grid.levels());
}

SolveReport solve_weights(const Fpcs& fpcs, const AlphaGrid& grid, const SolverOptions& opts) {
    (void)opts;
    const auto ratios = ratios_of(fpcs);
    const auto levels = grid.levels();

    SolveReport report;
    report.doa = grid.mesh();
    report.weights = WeightSet::uniform(fpcs.size());
    double best = max_residual(report.weights, fpcs, levels);

    auto accept = [&](const WeightSet& ws) {
        const double r = max_residual(ws, fpcs, levels);
        if (r < best) {
            best = r;
            report.weights = ws;
        }
        return r;
    };

    double lo = 0.0;
    double hi = best;
    if (auto ws = feasible_at(fpcs, ratios, levels, 0.0)) {
        accept(*ws);
        hi = 0.0;
    }
    while (hi - lo > 1e-9 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        if (auto ws = feasible_at(fpcs, ratios, levels, mid)) {
            accept(*ws);
            hi = std::min(mid, best);
        } else {
            lo = mid;
        }
    }
    const double sum = report.weights.gmir_sum();
    if (std::abs(sum - 1.0) > 1e-9) {
        // Residuals are scale free, so rescaling only repairs round-off.
        for (Tfn& t : report.weights.weights) t = Tfn(t.lower() / sum, t.modal() / sum, t.upper() / sum);
    }
    report.epsilon_star = max_residual(report.weights, fpcs, levels);
    report.epsilon_lower = std::min(lo, report.epsilon_star);
    for (const Tfn& t : report.weights.weights) report.effectively_zero.push_back(t.upper() <= 10.0 * kWeightFloor);
    return report;
}

std::vector<Interval> interval_weights(const Fpcs& fpcs, const AlphaGrid& grid, double epsilon_star) {
    if (!(epsilon_star >= 0.0)) throw DomainError("epsilon_star must be nonnegative");
    const std::size_t n = fpcs.size();
    lp::Problem prob = feasibility_problem(fpcs, ratios_of(fpcs), grid.levels(), epsilon_star + slack_for(epsilon_star));
    std::vector<Interval> out;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<bool> only(n, false);
        only[k] = true;
        std::vector<bool> others(n, true);
        others[k] = false;

        set_gmir_cost(prob, n, only);
        const lp::Solution low = lp::minimize(prob);
        // Maximizing gmir(w_k) is minimizing the others' share of the normalization.
        set_gmir_cost(prob, n, others);
        const lp::Solution high = lp::minimize(prob);
        if (low.status != lp::Status::optimal || high.status != lp::Status::optimal) {
            throw SolverError("no weight set attains the given epsilon_star on this grid");
        }
        const double lo_k = weights_from(low.x, n).weights[k].gmir() / weights_from(low.x, n).gmir_sum();
        const double hi_k = weights_from(high.x, n).weights[k].gmir() / weights_from(high.x, n).gmir_sum();
        out.push_back({std::min(lo_k, hi_k), std::max(lo_k, hi_k)});
    }
    return out;
}

Interval interval_weights(const Fpcs& fpcs, const AlphaGrid& grid, double epsilon_star, std::size_t k) {
    if (k >= fpcs.size()) throw LookupError("criterion index out of range");
    return interval_weights(fpcs, grid, epsilon_star)[k];
}

std::vector<double> midpoint_weights(std::span<const Interval> intervals) {
    std::vector<double> out;
    out.reserve(intervals.size());
    for (const Interval& iv : intervals) out.push_back(iv.midpoint());
    return out;
}

SolveReport solve(const Fpcs& fpcs, const AlphaGrid& grid, const SolverOptions& opts) {
    SolveReport report = solve_weights(fpcs, grid, opts);
    report.interval_weights = interval_weights(fpcs, grid, report.epsilon_star);
    report.midpoint_weights = midpoint_weights(report.interval_weights);
    report.eta_dense = max_residual(report.weights, fpcs, AlphaGrid::uniform(std::max(2, opts.dense_eta_grid)));
    if (!fpcs.degenerate()) report.cr = cr_upper(report.epsilon_star, report.doa, fpcs.best_to_worst());
    return report;
}

std::vector<NamedWeight> hierarchical_compose(const LocalWeights& parent,
                                              const std::map<std::string, LocalWeights>& children) {
    if (parent.names.size() != parent.weights.size()) throw CompositionError("parent names and weights differ in length");
    std::vector<NamedWeight> out;
    for (std::size_t p = 0; p < parent.names.size(); ++p) {
        auto it = children.find(parent.names[p]);
        if (it == children.end()) throw CompositionError("missing child block for '" + parent.names[p] + "'");
        const LocalWeights& child = it->second;
        if (child.names.size() != child.weights.size()) {
            throw CompositionError("child block '" + parent.names[p] + "' has mismatched names and weights");
        }
        for (std::size_t c = 0; c < child.names.size(); ++c) {
            out.push_back({child.names[c], parent.weights[p] * child.weights[c]});
        }
    }
    return out;
}

std::vector<RankedWeight> rank(std::span<const NamedWeight> weights) {
    std::vector<std::size_t> order(weights.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return weights[a].weight > weights[b].weight; });
    std::vector<RankedWeight> out;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const NamedWeight& w = weights[order[pos]];
        out.push_back({w.name, w.weight, static_cast<int>(pos) + 1, false});
    }
    for (std::size_t pos = 1; pos < out.size(); ++pos) {
        if (std::abs(out[pos].weight - out[pos - 1].weight) <= 1e-12) {
            out[pos].tied = true;
            out[pos - 1].tied = true;
        }
    }
    return out;
}

HierarchyReport solve(const Hierarchy& hierarchy, const AlphaGrid& grid, const SolverOptions& opts) {
    HierarchyReport report;
    report.root = solve(hierarchy.root, grid, opts);
    LocalWeights parent{hierarchy.root.criteria(), report.root.midpoint_weights};
    std::map<std::string, LocalWeights> children;
    for (std::size_t p = 0; p < hierarchy.children.size(); ++p) {
        const Fpcs& child = hierarchy.children[p];
        report.children.push_back(solve(child, grid, opts));
        children[hierarchy.root.criteria()[p]] = LocalWeights{child.criteria(), report.children.back().midpoint_weights};
    }
    const auto global = hierarchical_compose(parent, children);
    report.global = rank(global);
    return report;
}

}  // namespace alphabwm
