#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "alphabwm/fpcs.hpp"

namespace alphabwm {

// Smallest x >= 0 with (p1 + x)(q1 + x) = (p2 - x)(q2 - x), taking the pair
// with the smaller product as (p1, q1). Zero when the products agree.
double cv_pair(double p1, double q1, double p2, double q2);

// Smallest positive root of (p - x)(q - x) = r + x; zero when p*q <= r.
double cv_quadratic(double p, double q, double r);

// Smallest positive root of (a-x)(b-x)(c-x)(d-x) = (e+x)(f+x) on [0, min(a,b,c,d)).
// Zero when a*b*c*d <= e*f.
double cv_quartic_over(double a, double b, double c, double d, double e, double f);

// Smallest positive root of (a+x)(b+x)(c+x)(d+x) = (e-x)(f-x) on [0, min(e,f)).
// Zero when a*b*c*d >= e*f.
double cv_quartic_under(double a, double b, double c, double d, double e, double f);

// Smallest positive root of prod(lhs_k + x) = prod(rhs_k - x); zero when
// prod(lhs) >= prod(rhs).
double cv_monotonicity(const std::array<double, 3>& lhs, const std::array<double, 3>& rhs);

struct CiRow {
    LinguisticTerm term;
    double pair = 0.0;            // cases 1 and 2
    double over = 0.0;            // case 3 (product too large) and cases 4-6
    double under = 0.0;           // case 3 (product too small)
    double monotonicity_bound = 0.5;
    double lower_bound = 0.0;
};

// Throws UndefinedIndexError for the term "1".
CiRow ci_row(LinguisticTerm a_bw);
double ci_lower_bound(LinguisticTerm a_bw);
// Rows for "2".."9".
std::vector<CiRow> ci_table();

struct CrBound {
    double ci_lower = 0.0;
    double reported = 0.0;      // epsilon / ci_lower
    double conservative = 0.0;  // (epsilon + doa) / ci_lower
};

CrBound cr_upper(double epsilon_star, double doa, LinguisticTerm a_bw);

struct Violation {
    int case_id = 0;
    std::vector<std::size_t> criteria;
    std::vector<double> alphas;
    double cv = 0.0;
};

struct ProductProfile {
    double alpha = 0.0;
    double value = 0.0;
};

struct ConsistencyReport {
    std::vector<Violation> violations;
    // Filled only at levels where the product is the same for every criterion.
    std::vector<ProductProfile> k1_profile;
    std::vector<ProductProfile> k2_profile;
    double max_cv = 0.0;
    std::optional<double> ci_lower;

    bool consistent() const { return violations.empty(); }
};

// Checks every necessary condition for a consistent system on the grid and
// records the consistency value of each violation. max_cv is a lower bound
// on the optimal objective over the same grid.
ConsistencyReport check_conditions(const Fpcs& fpcs, const AlphaGrid& grid);

}  // namespace alphabwm
