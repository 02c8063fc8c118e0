#pragma once

#include "omegact/laurent.hpp"

#include <string>

namespace omegact {

// Quotient of Laurent polynomials, reduced lazily. Carrier for
// partial-fraction coefficients and for final one-variable results.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    explicit RationalFunction(LaurentPoly num)
        : num_(std::move(num)), den_(Rational(1)) {}
    RationalFunction(LaurentPoly num, LaurentPoly den);

    static RationalFunction constant(const Rational& c) {
        return RationalFunction(LaurentPoly(c));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;

    // Equality by cross-multiplication (no reduction needed).
    bool equals(const RationalFunction& o) const;

    // Cancels num/den where cheaply possible: shared monomial content and,
    // for univariate inputs, the full polynomial gcd. Also normalizes the
    // denominator's leading unit. gcd reduction is deliberately on-demand.
    RationalFunction normalized() const;

    std::string str() const;

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

} // namespace omegact
