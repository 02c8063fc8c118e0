#include "omegact/numeric.hpp"

#include "omegact/error.hpp"

namespace omegact {

std::string format_integer(const Integer& z) { return z.get_str(); }

std::string format_rational(const Rational& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw Error(ErrorKind::Parse, "malformed rational: " + text);
    r.canonicalize();
    if (sgn(r.get_den()) <= 0)
        throw Error(ErrorKind::Parse, "nonpositive denominator: " + text);
    return r;
}

std::size_t hash_integer(const Integer& z) {
    const mpz_srcptr p = z.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(mpz_sgn(p)) + 0x51ed2701;
    const std::size_t n = mpz_size(p);
    for (std::size_t i = 0; i < n; ++i)
        h = hash_combine(h, static_cast<std::size_t>(mpz_getlimbn(p, i)));
    return h;
}

std::size_t hash_rational(const Rational& r) {
    return hash_combine(hash_integer(r.get_num()), hash_integer(r.get_den()));
}

} // namespace omegact
