#pragma once

#include "omegact/monomial.hpp"
#include "omegact/numeric.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace omegact {

// Sparse multivariate Laurent polynomial with exact rational coefficients.
// Terms are kept sorted by monomial (ascending) with no zero coefficients,
// so equality is structural.
class LaurentPoly {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
    };

    LaurentPoly() = default;
    explicit LaurentPoly(Rational constant);
    explicit LaurentPoly(long constant);
    LaurentPoly(Rational coeff, Monomial mono);
    static LaurentPoly variable(VarId v, Monomial::Exp e = 1);

    // Terms must be sorted with unique monomials and nonzero coefficients.
    static LaurentPoly from_sorted_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    Rational coefficient(const Monomial& m) const;

    // True when every term's monomial has zero exponent on v.
    bool free_of(VarId v) const;

    // Smallest/largest exponent of v over the support; nullopt when zero
    // polynomial or v absent everywhere (min/max over empty support).
    std::optional<Monomial::Exp> min_exponent(VarId v) const;
    std::optional<Monomial::Exp> max_exponent(VarId v) const;

    // gcd of |exponents| of v over the support, 0 if v absent.
    Monomial::Exp exponent_gcd(VarId v) const;

    // Divides every exponent of v by g (g must divide them all).
    LaurentPoly scale_variable_exponents(VarId v, Monomial::Exp g) const;

    std::vector<VarId> variables() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;

    LaurentPoly mul_monomial(const Monomial& m) const;
    LaurentPoly mul_scalar(const Rational& c) const;
    LaurentPoly mul_term(const Rational& c, const Monomial& m) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    std::size_t hash() const;
    std::string str() const;

private:
    std::vector<Term> terms_; // ascending by Monomial::compare
};

inline bool operator==(const LaurentPoly::Term& a, const LaurentPoly::Term& b) {
    return a.mono == b.mono && a.coeff == b.coeff;
}

// Accumulator for building polynomials term by term.
class LaurentBuilder {
public:
    void add(const Monomial& m, const Rational& c);
    void add(const LaurentPoly& p);
    void add_scaled(const LaurentPoly& p, const Rational& c, const Monomial& m);
    LaurentPoly build();

private:
    std::vector<LaurentPoly::Term> terms_;
};

// Exact division in the Laurent ring; returns nullopt when b does not
// divide a (finitely many terms required).
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& a,
                                         const LaurentPoly& b);

// Specialized quotient a / (1 - m), m a nonunit monomial. Linear-time:
// groups the support into cosets of <m> and takes prefix sums.
std::optional<LaurentPoly> try_div_one_minus(const LaurentPoly& a,
                                             const Monomial& m);

// Throwing flavor: signals NotDivisible when the remainder is nonzero.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

// Collects p as a polynomial in v: ascending (degree, coefficient free of
// v) pairs with nonzero coefficients; reassembly equals p.
std::vector<std::pair<Monomial::Exp, LaurentPoly>>
univariate_view(const LaurentPoly& p, VarId v);

// Ring homomorphism v -> value. Monomial values remap exponents
// multiplicatively; substituting zero requires no negative v-exponents
// (PoleAtZero otherwise).
LaurentPoly substitute(const LaurentPoly& p, VarId v, const Monomial& value);
LaurentPoly substitute_zero(const LaurentPoly& p, VarId v);

LaurentPoly pow(const LaurentPoly& p, unsigned long k);

} // namespace omegact
