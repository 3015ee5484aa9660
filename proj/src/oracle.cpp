#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <functional>
#include <random>

#include "alphabwm/errors.hpp"
#include "alphabwm/solver.hpp"

namespace alphabwm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::array<double, 5> kSpreads{0.0, 0.125, 0.25, 0.375, 0.5};
constexpr int kBudgetPerStart = 20000;
constexpr std::array<double, 11> kTemperatures{1e-2, 3e-3, 1e-3, 3e-4, 1e-4, 3e-5, 1e-5, 3e-6, 1e-6, 1e-7, 0.0};

struct Judgment {
    std::size_t num;
    std::size_t den;
    std::vector<Interval> cuts;  // one per level
};

// Parameters per criterion: modal m, left spread dl, right spread du.
class Objective {
public:
    Objective(const Fpcs& fpcs, std::span<const double> levels) : n_(fpcs.size()), levels_(levels) {
        const std::size_t b = fpcs.best();
        const std::size_t w = fpcs.worst();
        auto add = [&](std::size_t num, std::size_t den, LinguisticTerm t) {
            Judgment j{num, den, {}};
            for (double a : levels_) j.cuts.push_back(t.tfn().alpha_cut(a));
            judgments_.push_back(std::move(j));
        };
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == b || i == w) continue;
            add(b, i, fpcs.best_to_others()[i]);
            add(i, w, fpcs.others_to_worst()[i]);
        }
        add(b, w, fpcs.best_to_worst());
    }

    std::size_t dims() const { return 3 * n_; }

    double operator()(const std::vector<double>& p) const { return smoothed(p, 0.0); }

    // Log-sum-exp of the residuals at temperature t; the plain maximum at t = 0.
    double smoothed(const std::vector<double>& p, double t) const {
        for (std::size_t i = 0; i < n_; ++i) {
            const double m = p[3 * i];
            const double dl = p[3 * i + 1];
            const double du = p[3 * i + 2];
            if (dl < 0.0 || du < 0.0 || m - dl < kWeightFloor) return kInf;
        }
        residuals_.clear();
        for (std::size_t k = 0; k < levels_.size(); ++k) {
            const double a = levels_[k];
            for (const Judgment& j : judgments_) {
                const double* x = &p[3 * j.num];
                const double* y = &p[3 * j.den];
                const double num_lo = x[0] - (1.0 - a) * x[1];
                const double num_hi = x[0] + (1.0 - a) * x[2];
                const double den_lo = y[0] - (1.0 - a) * y[1];
                const double den_hi = y[0] + (1.0 - a) * y[2];
                residuals_.push_back(std::abs(num_lo / den_hi - j.cuts[k].lo));
                residuals_.push_back(std::abs(num_hi / den_lo - j.cuts[k].hi));
            }
        }
        const double worst = *std::max_element(residuals_.begin(), residuals_.end());
        if (t <= 0.0) return worst;
        double sum = 0.0;
        for (double r : residuals_) sum += std::exp((r - worst) / t);
        return worst + t * std::log(sum);
    }

private:
    std::size_t n_;
    std::span<const double> levels_;
    std::vector<Judgment> judgments_;
    mutable std::vector<double> residuals_;
};

struct Candidate {
    double value;
    std::vector<double> params;
};

void enumerate_lattice(std::size_t n, int total, std::vector<int>& parts, std::size_t depth,
                       const std::function<void(const std::vector<int>&)>& visit) {
    if (depth + 1 == n) {
        parts[depth] = total;
        visit(parts);
        return;
    }
    for (int k = 1; k <= total - static_cast<int>(n - depth - 1); ++k) {
        parts[depth] = k;
        enumerate_lattice(n, total - k, parts, depth + 1, visit);
    }
}

Candidate pattern_search(const Objective& f, double t, Candidate start, double step, double min_step, std::mt19937_64& rng) {
    const std::size_t d = f.dims();
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> trial(d);
    std::vector<double> dir(d);
    int evals = 0;
    while (step > min_step && evals < kBudgetPerStart) {
        Candidate best_move{start.value, {}};
        auto consider = [&]() {
            const double v = f.smoothed(trial, t);
            ++evals;
            if (v < best_move.value) best_move = {v, trial};
        };
        for (std::size_t c = 0; c < d; ++c) {
            for (double s : {step, -step}) {
                trial = start.params;
                trial[c] += s;
                consider();
            }
        }
        for (std::size_t r = 0; r < 2 * d; ++r) {
            double norm = 0.0;
            for (double& v : dir) {
                v = gauss(rng);
                norm += v * v;
            }
            norm = std::sqrt(norm);
            for (std::size_t c = 0; c < d; ++c) trial[c] = start.params[c] + step * dir[c] / norm;
            consider();
        }
        if (best_move.params.empty()) {
            step *= 0.5;
        } else {
            start = std::move(best_move);
        }
    }
    return start;
}

}  // namespace

OracleResult oracle_solve(const Fpcs& fpcs, const AlphaGrid& grid, double resolution, const OracleOptions& opts) {
    const std::size_t n = fpcs.size();
    if (n > 4) throw DomainError("oracle search is limited to at most four criteria");
    if (!(resolution > 0.0 && resolution <= 0.5)) throw DomainError("oracle resolution must lie in (0, 0.5]");
    const Objective f(fpcs, grid.levels());
    const int total = static_cast<int>(std::lround(1.0 / resolution));
    const std::size_t keep = static_cast<std::size_t>(std::max(1, opts.starts));

    // Exhaustive lattice scan of modal weights with symmetric relative spreads.
    std::vector<Candidate> top;
    std::vector<double> params(3 * n);
    std::vector<int> parts(n);
    enumerate_lattice(n, std::max(total, static_cast<int>(n)), parts, 0, [&](const std::vector<int>& k) {
        for (double s : kSpreads) {
            for (std::size_t i = 0; i < n; ++i) {
                const double m = k[i] * resolution;
                params[3 * i] = m;
                params[3 * i + 1] = s * m;
                params[3 * i + 2] = s * m;
            }
            const double v = f(params);
            if (top.size() < keep || v < top.back().value) {
                top.push_back({v, params});
                std::stable_sort(top.begin(), top.end(),
                                 [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
                if (top.size() > keep) top.pop_back();
            }
        }
    });

    Candidate best{kInf, {}};
    for (std::size_t s = 0; s < top.size(); ++s) {
        std::mt19937_64 rng(opts.seed + s);
        // Continuation on the smoothing temperature, ending on the exact maximum.
        Candidate c = top[s];
        for (double t : kTemperatures) {
            c.value = f.smoothed(c.params, t);
            c = pattern_search(f, t, std::move(c), resolution, resolution * 1e-7, rng);
        }
        if (c.value < best.value) best = std::move(c);
    }

    WeightSet ws;
    for (std::size_t i = 0; i < n; ++i) {
        const double m = best.params[3 * i];
        ws.weights.emplace_back(m - best.params[3 * i + 1], m, m + best.params[3 * i + 2]);
    }
    const double sum = ws.gmir_sum();
    for (Tfn& t : ws.weights) t = Tfn(t.lower() / sum, t.modal() / sum, t.upper() / sum);
    return {max_residual(ws, fpcs, grid), std::move(ws)};
}

}  // namespace alphabwm
