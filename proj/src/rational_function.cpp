#include "omegact/rational_function.hpp"

#include "omegact/error.hpp"
#include "omegact/qpoly.hpp"

#include <algorithm>

namespace omegact {

namespace {

// Converts a Laurent polynomial in a single variable v to a dense poly,
// returning the shift applied so all exponents are nonnegative.
std::pair<QPoly, Monomial::Exp> to_dense(const LaurentPoly& p, VarId v) {
    Monomial::Exp lo = p.min_exponent(v).value_or(0);
    Monomial::Exp shift = lo < 0 ? -lo : 0;
    std::vector<Rational> coeffs;
    for (const auto& t : p.terms()) {
        std::size_t deg = static_cast<std::size_t>(t.mono.exponent(v) + shift);
        if (coeffs.size() <= deg)
            coeffs.resize(deg + 1, Rational(0));
        coeffs[deg] += t.coeff;
    }
    return {QPoly(std::move(coeffs)), shift};
}

LaurentPoly from_dense(const QPoly& p, VarId v, Monomial::Exp shift) {
    LaurentBuilder b;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        b.add(Monomial(v, static_cast<Monomial::Exp>(i) - shift), p.coeffs()[i]);
    return b.build();
}

} // namespace

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw Error(ErrorKind::Internal, "zero denominator");
}

RationalFunction RationalFunction::operator-() const {
    return RationalFunction(-num_, den_);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (den_ == o.den_)
        return RationalFunction(num_ + o.num_, den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero())
        throw Error(ErrorKind::Internal, "division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

bool RationalFunction::equals(const RationalFunction& o) const {
    return (num_ * o.den_) == (o.num_ * den_);
}

RationalFunction RationalFunction::normalized() const {
    if (num_.is_zero())
        return RationalFunction();

    // Shared monomial shift: slide the joint support so per-variable
    // minima sit at zero.
    std::vector<VarId> vars = num_.variables();
    for (VarId v : den_.variables())
        vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

    std::vector<Monomial::Entry> shift_entries;
    for (VarId v : vars) {
        Monomial::Exp lo = std::min(num_.min_exponent(v).value_or(0),
                                    den_.min_exponent(v).value_or(0));
        if (lo != 0)
            shift_entries.emplace_back(v, -lo);
    }
    Monomial shift = Monomial::from_sorted(std::move(shift_entries));
    LaurentPoly n = num_.mul_monomial(shift);
    LaurentPoly d = den_.mul_monomial(shift);

    if (vars.size() == 1) {
        VarId v = vars[0];
        auto [dn, sn] = to_dense(n, v);
        auto [dd, sd] = to_dense(d, v);
        QPoly g = gcd(dn, dd);
        if (g.degree() > 0) {
            dn = exact_div(dn, g);
            dd = exact_div(dd, g);
        }
        n = from_dense(dn, v, sn);
        d = from_dense(dd, v, sd);
        // Drop any leftover t^k shift shared by both sides.
        Monomial::Exp lo = std::min(n.min_exponent(v).value_or(0),
                                    d.min_exponent(v).value_or(0));
        if (lo != 0) {
            n = n.mul_monomial(Monomial(v, -lo));
            d = d.mul_monomial(Monomial(v, -lo));
        }
    }

    // Unit rule: trailing (smallest-monomial) coefficient of the
    // denominator becomes 1.
    const Rational unit = d.terms().front().coeff;
    if (!omegact::is_one(unit)) {
        Rational inv = Rational(1) / unit;
        n = n.mul_scalar(inv);
        d = d.mul_scalar(inv);
    }
    return RationalFunction(std::move(n), std::move(d));
}

std::string RationalFunction::str() const {
    if (den_.is_one())
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace omegact
