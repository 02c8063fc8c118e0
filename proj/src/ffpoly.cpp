#include "omegact/ffpoly.hpp"

#include "omegact/error.hpp"

#include <utility>

namespace omegact {

FFPoly::FFPoly(std::vector<RationalFunction> coeffs)
    : coeffs_(std::move(coeffs)) {
    trim();
}

FFPoly::FFPoly(RationalFunction constant) {
    coeffs_.push_back(std::move(constant));
    trim();
}

void FFPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

FFPoly FFPoly::from_laurent(const LaurentPoly& p, VarId v) {
    if (p.min_exponent(v).value_or(0) < 0)
        throw Error(ErrorKind::Internal,
                    "negative exponent in polynomial conversion");
    std::vector<RationalFunction> coeffs;
    for (const auto& [deg, c] : univariate_view(p, v)) {
        std::size_t d = static_cast<std::size_t>(deg);
        if (coeffs.size() <= d)
            coeffs.resize(d + 1);
        coeffs[d] = RationalFunction(c);
    }
    return FFPoly(std::move(coeffs));
}

RationalFunction FFPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : RationalFunction();
}

const RationalFunction& FFPoly::leading() const {
    if (coeffs_.empty())
        throw Error(ErrorKind::Internal, "leading coefficient of zero");
    return coeffs_.back();
}

FFPoly FFPoly::operator-() const {
    FFPoly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

FFPoly FFPoly::operator+(const FFPoly& o) const {
    std::vector<RationalFunction> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        v[i] = v[i] + o.coeffs_[i];
    return FFPoly(std::move(v));
}

FFPoly FFPoly::operator-(const FFPoly& o) const { return *this + (-o); }

FFPoly FFPoly::operator*(const FFPoly& o) const {
    if (is_zero() || o.is_zero())
        return FFPoly();
    std::vector<RationalFunction> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] = v[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    return FFPoly(std::move(v));
}

FFPoly FFPoly::mul(const RationalFunction& c) const {
    if (c.is_zero())
        return FFPoly();
    FFPoly out = *this;
    for (auto& x : out.coeffs_)
        x = x * c;
    return out;
}

RationalFunction FFPoly::to_rational(VarId v) const {
    RationalFunction acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * RationalFunction(LaurentPoly::variable(v)) + *it;
    return acc;
}

bool FFPoly::equals(const FFPoly& o) const {
    if (coeffs_.size() != o.coeffs_.size())
        return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].equals(o.coeffs_[i]))
            return false;
    return true;
}

std::pair<FFPoly, FFPoly> divmod(const FFPoly& a, const FFPoly& b) {
    if (b.is_zero())
        throw Error(ErrorKind::Internal, "division by zero polynomial");
    std::vector<RationalFunction> r = a.coeffs();
    const long db = b.degree();
    long dr = a.degree();
    if (dr < db)
        return {FFPoly(), a};
    std::vector<RationalFunction> q(static_cast<std::size_t>(dr - db) + 1);
    while (dr >= db) {
        RationalFunction f =
            (r[static_cast<std::size_t>(dr)] / b.leading()).normalized();
        q[static_cast<std::size_t>(dr - db)] = f;
        for (long i = 0; i <= db; ++i) {
            auto& slot = r[static_cast<std::size_t>(dr - db + i)];
            slot = (slot - f * b.coeffs()[static_cast<std::size_t>(i)])
                       .normalized();
        }
        --dr;
        while (dr >= 0 && r[static_cast<std::size_t>(dr)].is_zero())
            --dr;
        r.resize(static_cast<std::size_t>(dr + 1));
        if (dr < db)
            break;
    }
    return {FFPoly(std::move(q)), FFPoly(std::move(r))};
}

BezoutResult extended_euclid_in_var(const FFPoly& a, const FFPoly& b) {
    if (a.is_zero() && b.is_zero())
        throw Error(ErrorKind::Internal, "gcd of two zero polynomials");
    FFPoly r0 = a, r1 = b;
    FFPoly s0{RationalFunction(LaurentPoly(Rational(1)))}, s1;
    FFPoly u0, u1{RationalFunction(LaurentPoly(Rational(1)))};
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        u0 = std::exchange(u1, u0 - q * u1);
    }
    return {r0, s0, u0};
}

} // namespace omegact
