#include "alphabwm/fuzzy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "alphabwm/errors.hpp"

namespace alphabwm {

namespace {

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        std::ostringstream msg;
        msg << "alpha " << alpha << " outside [0,1]";
        throw DomainError(msg.str());
    }
}

// Linear function v0 + v1*alpha.
struct Linear {
    double v0;
    double v1;
    double at(double alpha) const { return v0 + v1 * alpha; }
};

Linear lower_end(const Tfn& t) { return {t.lower(), t.modal() - t.lower()}; }
Linear upper_end(const Tfn& t) { return {t.upper(), t.modal() - t.upper()}; }

// Largest alpha in [0,1] with h0 + h1*alpha <= 0, or -inf when there is none.
double sup_nonpositive(double h0, double h1, double scale) {
    const double tol = 1e-12 * std::max(1.0, scale);
    if (h0 + h1 <= tol) return 1.0;
    if (h0 > tol) return -std::numeric_limits<double>::infinity();
    if (h0 >= 0.0) return 0.0;
    return std::min(1.0, -h0 / h1);  // h1 > 0 here because h(1) > h(0)
}

}  // namespace

Interval make_interval(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
        std::ostringstream msg;
        msg << "invalid interval [" << lo << ", " << hi << "]";
        throw DomainError(msg.str());
    }
    return {lo, hi};
}

TriangularFuzzyNumber::TriangularFuzzyNumber(double lower, double modal, double upper)
    : a_(lower), b_(modal), c_(upper) {
    if (!std::isfinite(a_) || !std::isfinite(b_) || !std::isfinite(c_) || a_ > b_ || b_ > c_) {
        std::ostringstream msg;
        msg << "invalid triangular fuzzy number (" << a_ << ", " << b_ << ", " << c_ << ")";
        throw DomainError(msg.str());
    }
}

double TriangularFuzzyNumber::membership(double x) const {
    if (x < a_ || x > c_) return 0.0;
    if (x == b_) return 1.0;
    if (x < b_) return (x - a_) / (b_ - a_);
    return (c_ - x) / (c_ - b_);
}

Interval TriangularFuzzyNumber::alpha_cut(double alpha) const {
    check_alpha(alpha);
    return {a_ + alpha * (b_ - a_), c_ - alpha * (c_ - b_)};
}

Interval alpha_cut(const Tfn& t, double alpha) { return t.alpha_cut(alpha); }

double gmir(const Tfn& t) { return t.gmir(); }

Tfn blend(const Tfn& x, const Tfn& y, double lambda) {
    const double mu = 1.0 - lambda;
    return Tfn(lambda * x.lower() + mu * y.lower(), lambda * x.modal() + mu * y.modal(),
               lambda * x.upper() + mu * y.upper());
}

Interval interval_divide(const Interval& num, const Interval& den) {
    if (den.lo <= 0.0 && den.hi >= 0.0) {
        std::ostringstream msg;
        msg << "divisor [" << den.lo << ", " << den.hi << "] contains zero";
        throw DomainError(msg.str());
    }
    const std::array<double, 4> q{num.lo / den.lo, num.lo / den.hi, num.hi / den.lo, num.hi / den.hi};
    return {*std::min_element(q.begin(), q.end()), *std::max_element(q.begin(), q.end())};
}

Interval quotient_cut(const Tfn& num, const Tfn& den, double alpha) {
    return interval_divide(num.alpha_cut(alpha), den.alpha_cut(alpha));
}

double exact_quotient_membership(const Tfn& num, const Tfn& den, double x) {
    if (den.lower() <= 0.0 && den.upper() >= 0.0) {
        throw DomainError("denominator support contains zero");
    }
    const double sign = den.lower() > 0.0 ? 1.0 : -1.0;
    const std::array<Linear, 2> nums{lower_end(num), upper_end(num)};
    const std::array<Linear, 2> dens{lower_end(den), upper_end(den)};

    // The cut's left end is the smallest endpoint ratio and its right end the
    // largest, so "x >= left end at alpha" holds iff some ratio is <= x.
    double left = -std::numeric_limits<double>::infinity();
    double right = -std::numeric_limits<double>::infinity();
    for (const Linear& n : nums) {
        for (const Linear& d : dens) {
            // ratio <= x  <=>  sign*(n - x d) <= 0
            const double h0 = sign * (n.v0 - x * d.v0);
            const double h1 = sign * (n.v1 - x * d.v1);
            const double scale = std::abs(n.v0) + std::abs(x * d.v0);
            left = std::max(left, sup_nonpositive(h0, h1, scale));
            right = std::max(right, sup_nonpositive(-h0, -h1, scale));
        }
    }
    return std::max(0.0, std::min(left, right));
}

Tfn approximate_quotient(const Tfn& num, const Tfn& den) {
    if (den.lower() <= 0.0) {
        throw DomainError("approximate quotient needs a positive denominator");
    }
    // Extreme endpoint ratios; for positive numerators this is (a1/c2, b1/b2, c1/a2).
    const double lo = std::min(num.lower() / den.upper(), num.lower() / den.lower());
    const double hi = std::max(num.upper() / den.lower(), num.upper() / den.upper());
    return Tfn(lo, num.modal() / den.modal(), hi);
}

}  // namespace alphabwm
