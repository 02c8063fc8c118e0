#pragma once

#include "omegact/numeric.hpp"

#include <vector>

namespace omegact {

// Dense univariate polynomial over Q, coefficients ascending by degree.
// Used for the one-variable endgame: gcd reduction, cyclotomic
// factorization, power-series inversion.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(Rational constant);
    explicit QPoly(std::vector<Rational> coeffs); // trailing zeros trimmed

    static QPoly monomial(const Rational& c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;

    QPoly mul_scalar(const Rational& c) const;
    Rational eval(const Rational& x) const;

    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

// Euclidean division; b must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

// Exact division; throws NotDivisible on nonzero remainder.
QPoly exact_div(const QPoly& a, const QPoly& b);

// Monic gcd; integer primitive-part Euclid underneath, so coefficient
// growth stays tame on the degrees that show up here.
QPoly gcd(const QPoly& a, const QPoly& b);

// m-th cyclotomic polynomial (integer coefficients), memoized.
const QPoly& cyclotomic(unsigned m);

// 1 - x^a.
QPoly one_minus_power(unsigned a);

} // namespace omegact
