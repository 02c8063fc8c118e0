#pragma once

#include "omegact/monomial.hpp"

#include <string>
#include <vector>

namespace omegact {

// Ordered variable list, most significant first (e.g. [t, q1, ..., qk]).
// Defines the field of iterated Laurent series 0 < t << q1 << ... << 1:
// the first listed variable with nonzero exponent decides whether a
// monomial is small.
class SeriesOrder {
public:
    SeriesOrder() = default;
    explicit SeriesOrder(std::vector<VarId> vars);
    static SeriesOrder of_names(const std::vector<std::string>& names);

    const std::vector<VarId>& vars() const { return vars_; }
    bool contains(VarId v) const;
    // Position in the list; throws UnknownVariable if absent.
    std::size_t rank(VarId v) const;

    std::string str() const;

private:
    std::vector<VarId> vars_;
};

// True iff m expands geometrically (m -> 0 in the series field). m must
// not be the unit monomial and all its variables must be listed.
bool is_small(const Monomial& m, const SeriesOrder& order);

} // namespace omegact
