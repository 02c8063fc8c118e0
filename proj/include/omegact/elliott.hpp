#pragma once

#include "omegact/laurent.hpp"
#include "omegact/rational_function.hpp"
#include "omegact/series_order.hpp"

#include <string>
#include <vector>

namespace omegact {

// One denominator factor (1 - m)^mult, m a nonunit monomial.
struct BinomialFactor {
    Monomial m;
    unsigned mult = 1;

    LaurentPoly expand() const; // (1 - m)^mult as a polynomial
    bool operator==(const BinomialFactor& o) const {
        return mult == o.mult && m == o.m;
    }
};

// Elliott-rational function: Laurent-polynomial numerator over a product
// of binomial factors. The class is closed under taking constant terms.
class ElliottRational {
public:
    ElliottRational() = default;
    explicit ElliottRational(LaurentPoly num) : num_(std::move(num)) {}
    ElliottRational(LaurentPoly num, std::vector<BinomialFactor> den);

    const LaurentPoly& num() const { return num_; }
    const std::vector<BinomialFactor>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    // Factors sorted by monomial, duplicates aggregated into mult.
    // Degenerate (m = 1) factors are rejected.
    void normalize_factors();

    // All variables of num and den, sorted.
    std::vector<VarId> variables() const;
    bool free_of(VarId v) const;

    ElliottRational mul_term(const Rational& c, const Monomial& m) const;
    ElliottRational add_same_den(const ElliottRational& o) const;

    // Stable text key for the denominator (used for summand aggregation).
    std::string den_key() const;

    std::size_t hash() const;
    bool operator==(const ElliottRational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

private:
    LaurentPoly num_;
    std::vector<BinomialFactor> den_;
};

// Rewrites every denominator factor so its monomial is small under order
// (flip rule 1/(1-M) = -M^{-1}/(1-M^{-1})), absorbs extracted units into
// the numerator, and cancels (1-M) factors shared by numerator and
// denominator. Value as an iterated Laurent series is unchanged.
ElliottRational canonicalize(ElliottRational f, const SeriesOrder& order);

// Monomial-difference helper: represents 1/(x - y) as unit/(1 - M) with M
// small under order. Returns the unit (coefficient, monomial) to multiply
// into a numerator and the binomial factor for the denominator (absent
// when the difference collapses to a scalar multiple of a monomial).
struct DifferenceFactor {
    Rational unit_coeff;
    Monomial unit_mono;
    std::optional<BinomialFactor> factor;
};
DifferenceFactor binomial_from_difference(const Rational& cx, const Monomial& x,
                                          const Rational& cy, const Monomial& y,
                                          const SeriesOrder& order);

// Trick (2): divides every exponent of v by the gcd g of all its
// exponents across numerator and denominator. The constant term over all
// variables is unchanged. Returns g (1 when v is absent).
std::pair<ElliottRational, Monomial::Exp> scale_exponents(
    const ElliottRational& f, VarId v);

// Expands the denominator product into a single rational function.
RationalFunction to_rational(const ElliottRational& f);

// Combines a sum of Elliott-rational functions over the least common
// denominator (factor-multiset lcm), cancelling where possible.
ElliottRational combine_sum(const std::vector<ElliottRational>& parts,
                            const SeriesOrder& order);

} // namespace omegact
