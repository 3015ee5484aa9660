#include "alphabwm/consistency.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "alphabwm/errors.hpp"

namespace alphabwm {

namespace {

constexpr double kScanStep = 1e-3;
constexpr double kConstancyTol = 1e-9;
constexpr double kOrderTol = 1e-12;

// Smallest root of phi on [0, hi) given phi(0) > 0 and phi(hi) <= 0. A coarse
// scan isolates the first sign change, then bisection runs to full precision.
double smallest_root(const std::function<double(double)>& phi, double hi) {
    double lo = 0.0;
    double up = hi;
    for (double x = kScanStep; x < hi; x += kScanStep) {
        if (phi(x) <= 0.0) {
            up = x;
            break;
        }
        lo = x;
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + up);
        if (mid <= lo || mid >= up) break;
        (phi(mid) > 0.0 ? lo : up) = mid;
    }
    return std::abs(phi(lo)) <= std::abs(phi(up)) ? lo : up;
}

void require_positive(std::initializer_list<double> values) {
    for (double v : values) {
        if (!(v > 0.0)) throw DomainError("consistency value inputs must be positive");
    }
}

struct Cuts {
    Interval bi;
    Interval iw;
};

}  // namespace

double cv_pair(double p1, double q1, double p2, double q2) {
    require_positive({p1, q1, p2, q2});
    if (p1 * q1 > p2 * q2) {
        std::swap(p1, p2);
        std::swap(q1, q2);
    }
    const double gap = p2 * q2 - p1 * q1;
    if (gap <= 0.0) return 0.0;
    return gap / (p1 + q1 + p2 + q2);
}

double cv_quadratic(double p, double q, double r) {
    require_positive({p, q, r});
    const double excess = p * q - r;
    if (excess <= 0.0) return 0.0;
    const double s = p + q + 1.0;
    const double disc = s * s - 4.0 * excess;
    // Same root as (s - sqrt(disc))/2 without the cancellation.
    return 2.0 * excess / (s + std::sqrt(disc));
}

double cv_quartic_over(double a, double b, double c, double d, double e, double f) {
    require_positive({a, b, c, d, e, f});
    if (a * b * c * d <= e * f) return 0.0;
    auto phi = [=](double x) { return (a - x) * (b - x) * (c - x) * (d - x) - (e + x) * (f + x); };
    return smallest_root(phi, std::min({a, b, c, d}));
}

double cv_quartic_under(double a, double b, double c, double d, double e, double f) {
    require_positive({a, b, c, d, e, f});
    if (a * b * c * d >= e * f) return 0.0;
    auto phi = [=](double x) { return (e - x) * (f - x) - (a + x) * (b + x) * (c + x) * (d + x); };
    return smallest_root(phi, std::min(e, f));
}

double cv_monotonicity(const std::array<double, 3>& lhs, const std::array<double, 3>& rhs) {
    require_positive({lhs[0], lhs[1], lhs[2], rhs[0], rhs[1], rhs[2]});
    if (lhs[0] * lhs[1] * lhs[2] >= rhs[0] * rhs[1] * rhs[2]) return 0.0;
    auto phi = [&](double x) {
        return (rhs[0] - x) * (rhs[1] - x) * (rhs[2] - x) - (lhs[0] + x) * (lhs[1] + x) * (lhs[2] + x);
    };
    return smallest_root(phi, std::min({rhs[0], rhs[1], rhs[2]}));
}

CiRow ci_row(LinguisticTerm a_bw) {
    if (a_bw.value() == 1) {
        throw UndefinedIndexError("consistency index is undefined when best and worst are judged equal");
    }
    const double a = a_bw.tfn().modal();
    CiRow row;
    row.term = a_bw;
    row.pair = cv_pair(1.0, 1.0, a, a);
    row.over = std::max(cv_quadratic(a, a, a), cv_quartic_over(a, a, a, a, a, a));
    row.under = cv_quartic_under(1.0, 1.0, 1.0, 1.0, a, a);
    row.monotonicity_bound = 0.5;
    row.lower_bound = std::max({row.pair, row.over, row.under, row.monotonicity_bound});
    return row;
}

double ci_lower_bound(LinguisticTerm a_bw) { return ci_row(a_bw).lower_bound; }

std::vector<CiRow> ci_table() {
    std::vector<CiRow> rows;
    for (int v = 2; v <= 9; ++v) rows.push_back(ci_row(LinguisticTerm::from_value(v)));
    return rows;
}

CrBound cr_upper(double epsilon_star, double doa, LinguisticTerm a_bw) {
    const double ci = ci_lower_bound(a_bw);
    return {ci, epsilon_star / ci, (epsilon_star + doa) / ci};
}

ConsistencyReport check_conditions(const Fpcs& fpcs, const AlphaGrid& grid) {
    ConsistencyReport report;
    const std::size_t n = fpcs.size();
    const std::size_t b = fpcs.best();
    const std::size_t w = fpcs.worst();
    std::vector<std::size_t> inner;
    for (std::size_t i = 0; i < n; ++i) {
        if (i != b && i != w) inner.push_back(i);
    }
    const auto levels = grid.levels();

    auto cuts_at = [&](std::size_t i, double alpha) {
        return Cuts{fpcs.judgment_cut(b, i, alpha), fpcs.judgment_cut(i, w, alpha)};
    };
    auto add = [&](int id, std::vector<std::size_t> crit, std::vector<double> alphas, double cv) {
        report.violations.push_back({id, std::move(crit), std::move(alphas), cv});
        report.max_cv = std::max(report.max_cv, cv);
    };

    for (double alpha : levels) {
        const Interval bw = fpcs.judgment_cut(b, w, alpha);
        std::vector<Cuts> cuts;
        for (std::size_t i : inner) cuts.push_back(cuts_at(i, alpha));

        // Common products K1 = a_bi^l a_iw^u and K2 = a_bi^u a_iw^l.
        bool k1_common = true;
        bool k2_common = true;
        for (std::size_t x = 0; x < inner.size(); ++x) {
            for (std::size_t y = x + 1; y < inner.size(); ++y) {
                const Cuts& s = cuts[x];
                const Cuts& t = cuts[y];
                if (std::abs(s.bi.lo * s.iw.hi - t.bi.lo * t.iw.hi) > kConstancyTol) {
                    k1_common = false;
                    add(1, {inner[x], inner[y]}, {alpha}, cv_pair(s.bi.lo, s.iw.hi, t.bi.lo, t.iw.hi));
                }
                if (std::abs(s.bi.hi * s.iw.lo - t.bi.hi * t.iw.lo) > kConstancyTol) {
                    k2_common = false;
                    add(2, {inner[x], inner[y]}, {alpha}, cv_pair(s.bi.hi, s.iw.lo, t.bi.hi, t.iw.lo));
                }
            }
        }
        if (!inner.empty()) {
            if (k1_common) report.k1_profile.push_back({alpha, cuts[0].bi.lo * cuts[0].iw.hi});
            if (k2_common) report.k2_profile.push_back({alpha, cuts[0].bi.hi * cuts[0].iw.lo});
        }

        // Product identity with a_bw^l a_bw^u over ordered pairs (i1 may equal i2).
        const double target = bw.lo * bw.hi;
        for (std::size_t x = 0; x < inner.size(); ++x) {
            for (std::size_t y = 0; y < inner.size(); ++y) {
                const Cuts& s = cuts[x];
                const Cuts& t = cuts[y];
                const double q = s.bi.lo * s.iw.hi * t.bi.hi * t.iw.lo;
                if (std::abs(q - target) <= kConstancyTol) continue;
                const double cv = q > target
                                      ? cv_quartic_over(s.bi.lo, s.iw.hi, t.bi.hi, t.iw.lo, bw.lo, bw.hi)
                                      : cv_quartic_under(s.bi.lo, s.iw.hi, t.bi.hi, t.iw.lo, bw.lo, bw.hi);
                add(3, {inner[x], inner[y]}, {alpha}, cv);
            }
        }

        for (std::size_t x = 0; x < inner.size(); ++x) {
            const Cuts& s = cuts[x];
            if (s.bi.lo * s.iw.hi > bw.hi + kOrderTol) add(4, {inner[x]}, {alpha}, cv_quadratic(s.bi.lo, s.iw.hi, bw.hi));
            if (s.bi.hi * s.iw.lo > bw.hi + kOrderTol) add(5, {inner[x]}, {alpha}, cv_quadratic(s.bi.hi, s.iw.lo, bw.hi));
            if (s.bi.lo * s.iw.lo > bw.lo + kOrderTol) add(6, {inner[x]}, {alpha}, cv_quadratic(s.bi.lo, s.iw.lo, bw.lo));
        }
    }

    // f, g, h must not decrease between successive levels.
    for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
        const double a1 = levels[j];
        const double a2 = levels[j + 1];
        const Interval bw1 = fpcs.judgment_cut(b, w, a1);
        const Interval bw2 = fpcs.judgment_cut(b, w, a2);
        for (std::size_t i : inner) {
            const Cuts c1 = cuts_at(i, a1);
            const Cuts c2 = cuts_at(i, a2);
            struct Check {
                int id;
                double before;  // f, g or h at a1
                double after;   // at a2
                std::array<double, 3> lhs;
                std::array<double, 3> rhs;
            };
            const std::array<Check, 3> checks{{
                {7, c1.bi.lo * c1.iw.hi / bw1.hi, c2.bi.lo * c2.iw.hi / bw2.hi,
                 {c2.bi.lo, c2.iw.hi, bw1.hi}, {c1.bi.lo, c1.iw.hi, bw2.hi}},
                {8, c1.bi.hi * c1.iw.lo / bw1.hi, c2.bi.hi * c2.iw.lo / bw2.hi,
                 {c2.bi.hi, c2.iw.lo, bw1.hi}, {c1.bi.hi, c1.iw.lo, bw2.hi}},
                {9, c1.bi.lo * c1.iw.lo / bw1.lo, c2.bi.lo * c2.iw.lo / bw2.lo,
                 {c2.bi.lo, c2.iw.lo, bw1.lo}, {c1.bi.lo, c1.iw.lo, bw2.lo}},
            }};
            for (const Check& c : checks) {
                if (c.after < c.before - kOrderTol) add(c.id, {i}, {a1, a2}, cv_monotonicity(c.lhs, c.rhs));
            }
        }
    }

    if (!fpcs.degenerate()) report.ci_lower = ci_lower_bound(fpcs.best_to_worst());
    return report;
}

}  // namespace alphabwm
