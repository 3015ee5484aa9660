#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "alphabwm/consistency.hpp"
#include "alphabwm/solver.hpp"
#include "fixtures.hpp"

using namespace alphabwm;

namespace {

// Hand-rolled generators; every suite draws from its own seeded engine.
Tfn random_tfn(std::mt19937_64& rng, double lo = -5.0, double hi = 10.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::array<double, 3> v{u(rng), u(rng), u(rng)};
    std::sort(v.begin(), v.end());
    return {v[0], v[1], v[2]};
}

double random_unit(std::mt19937_64& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

AlphaGrid random_grid(std::mt19937_64& rng) {
    const int interior = std::uniform_int_distribution<int>(0, 6)(rng);
    std::vector<double> levels{0.0, 1.0};
    for (int k = 0; k < interior; ++k) levels.push_back(std::uniform_real_distribution<double>(0.01, 0.99)(rng));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return AlphaGrid(levels);
}

}  // namespace

TEST_SUITE("fuzzy arithmetic") {
    TEST_CASE("alpha cuts are nested") {
        std::mt19937_64 rng(101);
        for (int trial = 0; trial < 2000; ++trial) {
            const Tfn t = random_tfn(rng);
            double a1 = random_unit(rng), a2 = random_unit(rng);
            if (a1 > a2) std::swap(a1, a2);
            const Interval outer = alpha_cut(t, a1);
            const Interval inner = alpha_cut(t, a2);
            CHECK(outer.contains(inner, 1e-12));
            CHECK(inner.contains(t.modal(), 1e-12));
        }
    }

    TEST_CASE("gmir is linear") {
        std::mt19937_64 rng(102);
        for (int trial = 0; trial < 2000; ++trial) {
            const Tfn x = random_tfn(rng), y = random_tfn(rng);
            const double lambda = random_unit(rng);
            CHECK(gmir(blend(x, y, lambda)) == doctest::Approx(lambda * gmir(x) + (1 - lambda) * gmir(y)).epsilon(1e-12));
            const double s = std::uniform_real_distribution<double>(0.1, 5.0)(rng);
            const Tfn scaled(s * x.lower(), s * x.modal(), s * x.upper());
            CHECK(gmir(scaled) == doctest::Approx(s * gmir(x)).epsilon(1e-12));
        }
    }

    TEST_CASE("exact quotient cuts contain every pointwise ratio") {
        std::mt19937_64 rng(103);
        for (int trial = 0; trial < 500; ++trial) {
            const Tfn num = random_tfn(rng);
            const Tfn den = random_tfn(rng, 0.5, 6.0);
            const double a = random_unit(rng);
            const Interval q = quotient_cut(num, den, a);
            const Interval n = alpha_cut(num, a), d = alpha_cut(den, a);
            for (double s : {0.0, 0.3, 1.0}) {
                for (double r : {0.0, 0.6, 1.0}) {
                    const double x = (n.lo + s * n.width()) / (d.lo + r * d.width());
                    CHECK(q.contains(x, 1e-12));
                    CHECK(exact_quotient_membership(num, den, x) >= a - 1e-9);
                }
            }
        }
    }
}

TEST_SUITE("solver") {
    TEST_CASE("defuzzified weights sum to one") {
        std::mt19937_64 rng(201);
        for (int trial = 0; trial < 60; ++trial) {
            const Fpcs f = fixtures::random_fpcs(rng, 3 + trial % 4);
            const SolveReport r = solve(f, uniform_grid(2 + trial % 5));
            CHECK(r.weights.gmir_sum() == doctest::Approx(1.0).epsilon(1e-9));
            double mids = 0.0;
            for (double m : r.midpoint_weights) mids += m;
            CHECK(mids > 0.0);
        }
    }

    TEST_CASE("refining the grid never lowers the optimum") {
        std::mt19937_64 rng(202);
        for (int trial = 0; trial < 30; ++trial) {
            const Fpcs f = fixtures::random_fpcs(rng, 3 + trial % 3);
            double previous = 0.0;
            for (int m : {2, 3, 5, 9, 17}) {
                const double eps = solve_weights(f, uniform_grid(m)).epsilon_star;
                CHECK(eps >= previous - 1e-7);
                previous = eps;
            }
        }
    }

    TEST_CASE("interval weights nest as the grid is refined") {
        for (const Fpcs& f : {fixtures::example1(), fixtures::example2()}) {
            std::vector<Interval> previous;
            for (int m : {2, 3, 5, 9, 17}) {
                const SolveReport r = solve(f, uniform_grid(m));
                if (!previous.empty()) {
                    for (std::size_t k = 0; k < f.size(); ++k) CHECK(previous[k].contains(r.interval_weights[k], 2e-3));
                }
                previous = r.interval_weights;
            }
        }
    }

    TEST_CASE("dense residual obeys the degree of approximation") {
        std::mt19937_64 rng(203);
        std::vector<Fpcs> systems{fixtures::example1(), fixtures::example2()};
        for (int k = 0; k < 20; ++k) systems.push_back(fixtures::random_fpcs(rng, 3 + k % 3));
        for (const Fpcs& f : systems) {
            for (int m : {2, 3, 5, 17}) {
                const SolveReport r = solve(f, uniform_grid(m));
                CHECK(r.eta_dense <= r.epsilon_star + 1.0 / (m - 1) + 5e-4);
            }
        }
    }
}

TEST_SUITE("consistency") {
    TEST_CASE("roots satisfy their equations") {
        std::mt19937_64 rng(301);
        std::uniform_real_distribution<double> u(0.1, 10.0);
        for (int trial = 0; trial < 3000; ++trial) {
            const double p = u(rng), q = u(rng), r = u(rng), s = u(rng), e = u(rng), f = u(rng);
            if (const double x = cv_quadratic(p, q, r); x > 0) {
                CHECK(std::abs((p - x) * (q - x) - (r + x)) < 1e-10 * std::max(1.0, p * q));
            }
            if (const double x = cv_quartic_over(p, q, r, s, e, f); x > 0) {
                const double res = (p - x) * (q - x) * (r - x) * (s - x) - (e + x) * (f + x);
                CHECK(std::abs(res) < 1e-10 * std::max(1.0, p * q * r * s));
            }
            if (const double x = cv_quartic_under(p, q, r, s, e, f); x > 0) {
                const double res = (p + x) * (q + x) * (r + x) * (s + x) - (e - x) * (f - x);
                CHECK(std::abs(res) < 1e-10 * std::max(1.0, e * f));
            }
            if (const double x = cv_pair(p, q, r, s); x > 0) {
                const double lo = std::min(p * q, r * s) == p * q ? (p + x) * (q + x) : (r + x) * (s + x);
                const double hi = std::min(p * q, r * s) == p * q ? (r - x) * (s - x) : (p - x) * (q - x);
                CHECK(std::abs(lo - hi) < 1e-10 * std::max(1.0, std::max(p * q, r * s)));
            }
        }
    }

    TEST_CASE("largest consistency value of cases 1-6 occurs at alpha = 1") {
        // Every system with two inner criteria whose judgments stay within a_bw.
        const AlphaGrid grid = uniform_grid(101);
        for (int a = 2; a <= 9; ++a) {
            const CiRow row = ci_row(LinguisticTerm::from_value(a));
            std::array<double, 7> worst{};
            for (int b1 = 1; b1 <= a; ++b1)
                for (int w1 = 1; w1 <= a; ++w1)
                    for (int b2 = b1; b2 <= a; ++b2)
                        for (int w2 = 1; w2 <= a; ++w2) {
                            const Fpcs f = fixtures::make(0, 3, {1, b1, b2, a}, {a, w1, w2, 1});
                            for (const Violation& v : check_conditions(f, grid).violations) {
                                if (v.case_id <= 6) worst[v.case_id] = std::max(worst[v.case_id], v.cv);
                            }
                        }
            INFO("a_bw = " << a);
            CHECK(worst[1] <= row.pair + 1e-9);
            CHECK(worst[2] <= row.pair + 1e-9);
            CHECK(worst[3] <= std::max(row.over, row.under) + 1e-9);
            for (int c = 4; c <= 6; ++c) CHECK(worst[c] <= row.over + 1e-9);
        }
    }

    TEST_CASE("monotonicity violations are bounded by half the level gap") {
        std::mt19937_64 rng(302);
        int seen = 0;
        for (int trial = 0; trial < 400; ++trial) {
            const Fpcs f = fixtures::random_fpcs(rng, 3 + trial % 4);
            const AlphaGrid grid = random_grid(rng);
            for (const Violation& v : check_conditions(f, grid).violations) {
                if (v.case_id < 7) continue;
                ++seen;
                CHECK(v.cv <= (v.alphas[1] - v.alphas[0]) / 2 + 1e-12);
                CHECK(v.cv <= 0.5);
            }
        }
        CHECK(seen > 0);
    }

    TEST_CASE("consistency values never exceed the optimum") {
        std::mt19937_64 rng(303);
        for (int trial = 0; trial < 200; ++trial) {
            const Fpcs f = fixtures::random_fpcs(rng, 3 + trial % 4);
            const AlphaGrid grid = uniform_grid(2 + trial % 8);
            const ConsistencyReport rep = check_conditions(f, grid);
            const double eps = solve_weights(f, grid).epsilon_star;
            CHECK(rep.max_cv <= eps + 5e-4);
            if (rep.ci_lower) CHECK(rep.max_cv <= *rep.ci_lower + 1e-9);
        }
    }
}
