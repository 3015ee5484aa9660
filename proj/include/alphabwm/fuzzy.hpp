#pragma once

namespace alphabwm {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
    bool contains(double x, double tol = 0.0) const { return x >= lo - tol && x <= hi + tol; }
    bool contains(const Interval& other, double tol = 0.0) const {
        return other.lo >= lo - tol && other.hi <= hi + tol;
    }

    friend bool operator==(const Interval&, const Interval&) = default;
};

// Throws DomainError unless lo <= hi and both are finite.
Interval make_interval(double lo, double hi);

class TriangularFuzzyNumber {
public:
    TriangularFuzzyNumber() = default;
    // Throws DomainError unless lower <= modal <= upper (all finite).
    TriangularFuzzyNumber(double lower, double modal, double upper);

    double lower() const { return a_; }
    double modal() const { return b_; }
    double upper() const { return c_; }

    double membership(double x) const;
    Interval alpha_cut(double alpha) const;
    Interval support() const { return {a_, c_}; }
    double gmir() const { return (a_ + 4.0 * b_ + c_) / 6.0; }

    friend bool operator==(const TriangularFuzzyNumber&, const TriangularFuzzyNumber&) = default;

private:
    double a_ = 0.0;
    double b_ = 0.0;
    double c_ = 0.0;
};

using Tfn = TriangularFuzzyNumber;

// Lower endpoint l + alpha (m - l) and upper endpoint u - alpha (u - m) of the
// alpha-cut. Alpha 0 yields the closed support. Throws DomainError outside [0,1].
Interval alpha_cut(const Tfn& t, double alpha);

double gmir(const Tfn& t);

// Componentwise lambda*x + (1-lambda)*y.
Tfn blend(const Tfn& x, const Tfn& y, double lambda);

// Exact interval quotient. Throws DomainError when den contains zero.
Interval interval_divide(const Interval& num, const Interval& den);

// Alpha-cut of the exact fuzzy quotient num/den.
Interval quotient_cut(const Tfn& num, const Tfn& den, double alpha);

// Membership of x in the exact fuzzy quotient, i.e. the largest alpha with
// x inside quotient_cut(num, den, alpha). Each cut endpoint is a ratio of two
// linear functions of alpha, so every boundary is found in closed form.
double exact_quotient_membership(const Tfn& num, const Tfn& den, double x);

// (a1/c2, b1/b2, c1/a2) for positive numerators; a negative lower endpoint is
// divided by a2 instead so the support covers the exact one. Requires den.lower() > 0.
Tfn approximate_quotient(const Tfn& num, const Tfn& den);

}  // namespace alphabwm
