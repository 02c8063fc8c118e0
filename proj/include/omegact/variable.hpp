#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace omegact {

// Variable identifiers are interned process-wide; indices are stable for
// the lifetime of the process, so monomials can store bare ids.
using VarId = std::int32_t;

VarId intern_variable(const std::string& name);

// Returns the id of an already-interned name, or -1.
VarId lookup_variable(const std::string& name);

const std::string& variable_name(VarId id);

std::vector<VarId> intern_variables(const std::vector<std::string>& names);

} // namespace omegact
