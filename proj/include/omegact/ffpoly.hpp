#pragma once

#include "omegact/rational_function.hpp"

#include <vector>

namespace omegact {

// Polynomial in one distinguished variable with coefficients in the
// fraction field of the remaining variables. Dense, ascending by degree.
class FFPoly {
public:
    FFPoly() = default;
    explicit FFPoly(std::vector<RationalFunction> coeffs);
    explicit FFPoly(RationalFunction constant);

    // p must have nonnegative exponents of v.
    static FFPoly from_laurent(const LaurentPoly& p, VarId v);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<RationalFunction>& coeffs() const { return coeffs_; }
    RationalFunction coeff(std::size_t i) const;
    const RationalFunction& leading() const;

    FFPoly operator-() const;
    FFPoly operator+(const FFPoly& o) const;
    FFPoly operator-(const FFPoly& o) const;
    FFPoly operator*(const FFPoly& o) const;
    FFPoly mul(const RationalFunction& c) const;

    // Value at v = 0 is just the constant coefficient.
    RationalFunction at_zero() const { return coeff(0); }

    // Reassemble as num/den of Laurent polynomials (common denominator).
    RationalFunction to_rational(VarId v) const;

    bool equals(const FFPoly& o) const;

private:
    void trim();
    std::vector<RationalFunction> coeffs_;
};

std::pair<FFPoly, FFPoly> divmod(const FFPoly& a, const FFPoly& b);

struct BezoutResult {
    FFPoly g; // gcd up to a unit of the coefficient field
    FFPoly s; // s*a + u*b = g
    FFPoly u;
};

// Extended Euclid over the fraction field; not both inputs zero.
BezoutResult extended_euclid_in_var(const FFPoly& a, const FFPoly& b);

} // namespace omegact
