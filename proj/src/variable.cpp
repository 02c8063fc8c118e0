#include "omegact/variable.hpp"

#include "omegact/error.hpp"

#include <mutex>
#include <unordered_map>

namespace omegact {

namespace {

struct Registry {
    std::mutex mutex;
    std::vector<std::string> names;
    std::unordered_map<std::string, VarId> ids;
};

Registry& registry() {
    static Registry r;
    return r;
}

} // namespace

VarId intern_variable(const std::string& name) {
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mutex);
    auto it = r.ids.find(name);
    if (it != r.ids.end())
        return it->second;
    VarId id = static_cast<VarId>(r.names.size());
    r.names.push_back(name);
    r.ids.emplace(name, id);
    return id;
}

VarId lookup_variable(const std::string& name) {
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mutex);
    auto it = r.ids.find(name);
    return it == r.ids.end() ? -1 : it->second;
}

const std::string& variable_name(VarId id) {
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mutex);
    if (id < 0 || static_cast<std::size_t>(id) >= r.names.size())
        throw Error(ErrorKind::UnknownVariable,
                    "unknown variable id " + std::to_string(id));
    return r.names[static_cast<std::size_t>(id)];
}

std::vector<VarId> intern_variables(const std::vector<std::string>& names) {
    std::vector<VarId> ids;
    ids.reserve(names.size());
    for (const auto& n : names)
        ids.push_back(intern_variable(n));
    return ids;
}

} // namespace omegact
