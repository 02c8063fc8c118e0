#include "omegact/series_order.hpp"

#include "omegact/error.hpp"

#include <unordered_set>

namespace omegact {

SeriesOrder::SeriesOrder(std::vector<VarId> vars) : vars_(std::move(vars)) {
    std::unordered_set<VarId> seen;
    for (VarId v : vars_)
        if (!seen.insert(v).second)
            throw Error(ErrorKind::Internal,
                        "duplicate variable in series order: " +
                            variable_name(v));
}

SeriesOrder SeriesOrder::of_names(const std::vector<std::string>& names) {
    return SeriesOrder(intern_variables(names));
}

bool SeriesOrder::contains(VarId v) const {
    for (VarId x : vars_)
        if (x == v)
            return true;
    return false;
}

std::size_t SeriesOrder::rank(VarId v) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == v)
            return i;
    throw Error(ErrorKind::UnknownVariable,
                "variable not in series order: " + variable_name(v));
}

std::string SeriesOrder::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i)
            out += ",";
        out += variable_name(vars_[i]);
    }
    return out + "]";
}

bool is_small(const Monomial& m, const SeriesOrder& order) {
    if (m.is_unit())
        throw Error(ErrorKind::UnitMonomial,
                    "unit monomial is neither small nor large");
    for (const auto& [var, exp] : m.entries())
        if (!order.contains(var))
            throw Error(ErrorKind::UnknownVariable,
                        "variable not in series order: " + variable_name(var));
    for (VarId v : order.vars()) {
        Monomial::Exp e = m.exponent(v);
        if (e != 0)
            return e > 0;
    }
    throw Error(ErrorKind::Internal, "unreachable: nonunit monomial");
}

} // namespace omegact
