#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>

namespace omegact {

// Exact arithmetic foundation. GMP already enforces the invariants we
// need: mpq_class values are kept in lowest terms with positive
// denominator, and 0 is 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

inline bool fits_int64(const Integer& z) { return z.fits_slong_p(); }

std::string format_integer(const Integer& z);
std::string format_rational(const Rational& r); // "p" or "p/q"

// Parses "p" or "p/q" (q > 0 after canonicalization). Throws Error on
// malformed input.
Rational parse_rational(const std::string& text);

std::size_t hash_integer(const Integer& z);
std::size_t hash_rational(const Rational& r);

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace omegact
