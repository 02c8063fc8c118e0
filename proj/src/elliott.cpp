#include "omegact/elliott.hpp"

#include "omegact/error.hpp"

#include <algorithm>
#include <map>

namespace omegact {

LaurentPoly BinomialFactor::expand() const {
    LaurentPoly base = LaurentPoly(Rational(1)) - LaurentPoly(Rational(1), m);
    return pow(base, mult);
}

ElliottRational::ElliottRational(LaurentPoly num,
                                 std::vector<BinomialFactor> den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize_factors();
}

void ElliottRational::normalize_factors() {
    for (const auto& f : den_) {
        if (f.m.is_unit())
            throw Error(ErrorKind::DegenerateFactor,
                        "denominator factor (1 - 1) is zero");
        if (f.mult == 0)
            throw Error(ErrorKind::Internal, "factor with zero multiplicity");
    }
    std::sort(den_.begin(), den_.end(),
              [](const BinomialFactor& a, const BinomialFactor& b) {
                  return Monomial::compare(a.m, b.m) < 0;
              });
    std::vector<BinomialFactor> merged;
    for (auto& f : den_) {
        if (!merged.empty() && merged.back().m == f.m)
            merged.back().mult += f.mult;
        else
            merged.push_back(std::move(f));
    }
    den_ = std::move(merged);
    if (num_.is_zero())
        den_.clear();
}

std::vector<VarId> ElliottRational::variables() const {
    std::vector<VarId> vars = num_.variables();
    for (const auto& f : den_)
        for (const auto& [var, exp] : f.m.entries())
            vars.push_back(var);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

bool ElliottRational::free_of(VarId v) const {
    if (!num_.free_of(v))
        return false;
    for (const auto& f : den_)
        if (f.m.depends_on(v))
            return false;
    return true;
}

ElliottRational ElliottRational::mul_term(const Rational& c,
                                          const Monomial& m) const {
    ElliottRational out = *this;
    out.num_ = out.num_.mul_term(c, m);
    if (out.num_.is_zero())
        out.den_.clear();
    return out;
}

ElliottRational ElliottRational::add_same_den(const ElliottRational& o) const {
    if (!(den_ == o.den_))
        throw Error(ErrorKind::Internal, "add_same_den on unequal denominators");
    ElliottRational out = *this;
    out.num_ = out.num_ + o.num_;
    if (out.num_.is_zero())
        out.den_.clear();
    return out;
}

std::string ElliottRational::den_key() const {
    std::string key;
    for (const auto& f : den_) {
        key += f.m.str();
        key += "^";
        key += std::to_string(f.mult);
        key += ";";
    }
    return key;
}

std::size_t ElliottRational::hash() const {
    std::size_t h = num_.hash();
    for (const auto& f : den_) {
        h = hash_combine(h, f.m.hash());
        h = hash_combine(h, f.mult);
    }
    return h;
}

ElliottRational canonicalize(ElliottRational f, const SeriesOrder& order) {
    if (f.is_zero())
        return ElliottRational();

    LaurentPoly num = f.num();
    std::vector<BinomialFactor> den;
    den.reserve(f.den().size());
    for (const auto& factor : f.den()) {
        if (factor.m.is_unit())
            throw Error(ErrorKind::DegenerateFactor,
                        "denominator factor (1 - 1) is zero");
        if (is_small(factor.m, order)) {
            den.push_back(factor);
        } else {
            // 1/(1-M) = -M^{-1} / (1 - M^{-1}); applied mult times.
            Monomial inv = factor.m.inverse();
            Rational sign = (factor.mult % 2 == 0) ? Rational(1) : Rational(-1);
            num = num.mul_term(sign, inv.pow(factor.mult));
            den.push_back({inv, factor.mult});
        }
    }

    ElliottRational out(std::move(num), std::move(den));

    // Cancel shared (1 - M) factors. One cancellation can expose another,
    // so iterate to a fixed point.
    bool changed = true;
    while (changed && !out.is_zero()) {
        changed = false;
        LaurentPoly n = out.num();
        std::vector<BinomialFactor> d = out.den();
        for (auto& factor : d) {
            while (factor.mult > 0) {
                auto q = try_div_one_minus(n, factor.m);
                if (!q)
                    break;
                n = std::move(*q);
                --factor.mult;
                changed = true;
            }
        }
        if (changed) {
            d.erase(std::remove_if(
                        d.begin(), d.end(),
                        [](const BinomialFactor& b) { return b.mult == 0; }),
                    d.end());
            out = ElliottRational(std::move(n), std::move(d));
        }
    }
    return out;
}

DifferenceFactor binomial_from_difference(const Rational& cx, const Monomial& x,
                                          const Rational& cy, const Monomial& y,
                                          const SeriesOrder& order) {
    // cx*x - cy*y = cx*x * (1 - (cy/cx) y/x)   when y/x is small,
    //             = -cy*y * (1 - (cx/cy) x/y)  when x/y is small.
    if (omegact::is_zero(cx) || omegact::is_zero(cy))
        throw Error(ErrorKind::Internal, "difference term vanished");
    Monomial ratio = y * x.inverse();
    Rational cratio = cy / cx;
    if (ratio.is_unit()) {
        if (cratio == 1)
            throw Error(ErrorKind::DegenerateFactor,
                        "difference of equal monomials is zero");
        // Scalar binomial: 1/(cx - cy) with x = y = monomial part.
        return {Rational(1) / (cx - cy), x.inverse(), BinomialFactor{}, };
    }
    if (!omegact::is_one(cratio))
        throw Error(ErrorKind::Internal,
                    "difference with nonunit coefficient ratio");
    if (is_small(ratio, order))
        return {Rational(1) / cx, x.inverse(), BinomialFactor{ratio, 1}};
    return {Rational(-1) / cy, y.inverse(),
            BinomialFactor{ratio.inverse(), 1}};
}

std::pair<ElliottRational, Monomial::Exp> scale_exponents(
    const ElliottRational& f, VarId v) {
    Monomial::Exp g = f.num().exponent_gcd(v);
    for (const auto& factor : f.den())
        g = std::gcd(g, factor.m.exponent(v));
    if (g == 0)
        return {f, 1}; // v absent everywhere
    if (g == 1)
        return {f, 1};
    LaurentPoly num = f.num().scale_variable_exponents(v, g);
    std::vector<BinomialFactor> den = f.den();
    for (auto& factor : den) {
        Monomial::Exp e = factor.m.exponent(v);
        factor.m = factor.m.without(v).with_shifted(v, e / g);
    }
    return {ElliottRational(std::move(num), std::move(den)), g};
}

RationalFunction to_rational(const ElliottRational& f) {
    LaurentPoly den(Rational(1));
    for (const auto& factor : f.den())
        den = den * factor.expand();
    return RationalFunction(f.num(), std::move(den));
}

ElliottRational combine_sum(const std::vector<ElliottRational>& parts,
                            const SeriesOrder& order) {
    // lcm of the denominator factor multisets.
    std::map<Monomial, unsigned> lcm;
    for (const auto& p : parts)
        for (const auto& factor : p.den()) {
            auto& slot = lcm[factor.m];
            slot = std::max(slot, factor.mult);
        }

    LaurentPoly num;
    for (const auto& p : parts) {
        if (p.is_zero())
            continue;
        LaurentPoly scaled = p.num();
        for (const auto& [m, mult] : lcm) {
            unsigned have = 0;
            for (const auto& factor : p.den())
                if (factor.m == m)
                    have = factor.mult;
            if (mult > have)
                scaled = scaled * BinomialFactor{m, mult - have}.expand();
        }
        num = num + scaled;
    }

    std::vector<BinomialFactor> den;
    den.reserve(lcm.size());
    for (const auto& [m, mult] : lcm)
        den.push_back({m, mult});
    return canonicalize(ElliottRational(std::move(num), std::move(den)), order);
}

} // namespace omegact
