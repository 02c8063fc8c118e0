#pragma once

#include "omegact/variable.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace omegact {

// Laurent monomial: sparse map variable -> nonzero integer exponent,
// kept sorted by variable id. The empty monomial is 1.
class Monomial {
public:
    using Exp = std::int64_t;
    using Entry = std::pair<VarId, Exp>;

    Monomial() = default;
    Monomial(VarId v, Exp e);

    // Entries must be sorted by var id, unique, with nonzero exponents;
    // asserted in debug builds.
    static Monomial from_sorted(std::vector<Entry> entries);

    bool is_unit() const { return entries_.empty(); }
    const std::vector<Entry>& entries() const { return entries_; }

    Exp exponent(VarId v) const;
    bool depends_on(VarId v) const { return exponent(v) != 0; }

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(Exp k) const;

    // Removes v entirely (exponent forced to zero).
    Monomial without(VarId v) const;
    // Multiplies by v^delta.
    Monomial with_shifted(VarId v, Exp delta) const;

    bool operator==(const Monomial& o) const { return entries_ == o.entries_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    // Total order treating absent exponents as 0, walking variables in id
    // order; any fixed total order works for canonical term placement.
    static int compare(const Monomial& a, const Monomial& b);
    bool operator<(const Monomial& o) const { return compare(*this, o) < 0; }

    std::size_t hash() const;

    // "q1^2*q2^-1", "1" for the unit.
    std::string str() const;

private:
    std::vector<Entry> entries_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

} // namespace omegact
