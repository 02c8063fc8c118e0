#include "omegact/qpoly.hpp"

#include "omegact/error.hpp"

#include <map>
#include <mutex>

namespace omegact {

QPoly::QPoly(Rational constant) {
    if (sgn(constant) != 0)
        coeffs_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
        coeffs_.pop_back();
}

QPoly QPoly::monomial(const Rational& c, std::size_t degree) {
    if (sgn(c) == 0)
        return QPoly();
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return QPoly(std::move(v));
}

Rational QPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& QPoly::leading() const {
    if (coeffs_.empty())
        throw Error(ErrorKind::Internal, "leading coefficient of zero");
    return coeffs_.back();
}

QPoly QPoly::operator-() const {
    QPoly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()),
                            Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        v[i] += o.coeffs_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero())
        return QPoly();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return QPoly(std::move(v));
}

QPoly QPoly::mul_scalar(const Rational& c) const {
    if (sgn(c) == 0)
        return QPoly();
    QPoly out = *this;
    for (auto& x : out.coeffs_)
        x *= c;
    return out;
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero())
        throw Error(ErrorKind::Internal, "division by zero polynomial");
    std::vector<Rational> r(a.coeffs());
    const long db = b.degree();
    long dr = a.degree();
    if (dr < db)
        return {QPoly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(dr - db) + 1, Rational(0));
    const Rational& lb = b.leading();
    while (dr >= db) {
        Rational f = r[static_cast<std::size_t>(dr)] / lb;
        if (sgn(f) != 0) {
            q[static_cast<std::size_t>(dr - db)] = f;
            for (long i = 0; i <= db; ++i)
                r[static_cast<std::size_t>(dr - db + i)] -=
                    f * b.coeffs()[static_cast<std::size_t>(i)];
        }
        --dr;
        while (dr >= 0 && sgn(r[static_cast<std::size_t>(dr)]) == 0)
            --dr;
        r.resize(static_cast<std::size_t>(dr + 1));
        if (dr < db)
            break;
    }
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw Error(ErrorKind::NotDivisible, "univariate division has remainder");
    return q;
}

namespace {

// Integer-coefficient view with content stripped.
std::vector<Integer> primitive_int(const QPoly& p) {
    Integer lcm_den(1);
    for (const auto& c : p.coeffs())
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                c.get_den().get_mpz_t());
    std::vector<Integer> v;
    v.reserve(p.coeffs().size());
    Integer content(0);
    for (const auto& c : p.coeffs()) {
        Integer x = c.get_num() * (lcm_den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
        v.push_back(std::move(x));
    }
    if (content > 1)
        for (auto& x : v)
            x /= content;
    return v;
}

void strip_content(std::vector<Integer>& v) {
    Integer g(0);
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v)
            x /= g;
}

// Pseudo-remainder of a by b (content handled by the caller).
std::vector<Integer> pseudo_rem(std::vector<Integer> a,
                                const std::vector<Integer>& b) {
    const Integer& lb = b.back();
    while (a.size() >= b.size()) {
        Integer f = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& x : a)
            x *= lb;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        while (!a.empty() && sgn(a.back()) == 0)
            a.pop_back();
    }
    return a;
}

} // namespace

QPoly gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero() && b.is_zero())
        return QPoly();
    std::vector<Integer> u = primitive_int(a);
    std::vector<Integer> v = primitive_int(b);
    if (u.empty())
        std::swap(u, v);
    while (!v.empty()) {
        std::vector<Integer> r = pseudo_rem(u, v);
        strip_content(r);
        u = std::move(v);
        v = std::move(r);
    }
    // Monic result.
    std::vector<Rational> out;
    out.reserve(u.size());
    const Integer& lead = u.back();
    for (const auto& x : u)
        out.push_back(Rational(x) / Rational(lead));
    return QPoly(std::move(out));
}

const QPoly& cyclotomic(unsigned m) {
    static std::mutex mutex;
    static std::map<unsigned, QPoly> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end())
        return it->second;
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, built bottom-up over
    // the divisors of m.
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d != 0 || cache.count(d))
            continue;
        std::vector<Rational> xd(d + 1, Rational(0));
        xd[0] = Rational(-1);
        xd[d] = Rational(1);
        QPoly num{std::move(xd)};
        for (unsigned e = 1; e < d; ++e)
            if (d % e == 0)
                num = exact_div(num, cache.at(e));
        cache.emplace(d, std::move(num));
    }
    return cache.at(m);
}

QPoly one_minus_power(unsigned a) {
    std::vector<Rational> v(a + 1, Rational(0));
    v[0] = Rational(1);
    v[a] = Rational(-1);
    return QPoly(std::move(v));
}

} // namespace omegact
