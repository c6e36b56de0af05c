#include <confcause/feature_space.hpp>

#include <confcause/errors.hpp>

#include "space_state.hpp"

#include <cctype>
#include <unordered_set>

namespace confcause {

namespace {

bool valid_identifier(const std::string& name)
{
    if (name.empty())
        return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
        return false;
    for (char c : name)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}

} // namespace

feature_space feature_space::create(std::vector<std::string> names)
{
    if (names.empty())
        throw error("feature space needs at least one feature");
    if (names.size() > max_features)
        throw error("feature space exceeds the 64-feature engine limit (got " +
                    std::to_string(names.size()) + ")");
    std::unordered_set<std::string> seen;
    for (const auto& name : names) {
        if (!valid_identifier(name))
            throw error("invalid feature identifier '" + name + "'");
        if (name == "true" || name == "false")
            throw error("feature identifier '" + name + "' is a reserved word");
        if (!seen.insert(name).second)
            throw error("duplicate feature identifier '" + name + "'");
    }
    return feature_space(std::make_shared<detail::space_state>(std::move(names)));
}

int feature_space::size() const noexcept
{
    return static_cast<int>(state_->names().size());
}

const std::string& feature_space::name(int feature) const
{
    return state_->names().at(static_cast<std::size_t>(feature));
}

const std::vector<std::string>& feature_space::names() const noexcept
{
    return state_->names();
}

std::optional<int> feature_space::index_of(std::string_view name) const noexcept
{
    const auto& index = state_->index();
    auto it = index.find(std::string(name));
    if (it == index.end())
        return std::nullopt;
    return it->second;
}

detail::bdd_store& feature_space::store() const noexcept
{
    return state_->store();
}

} // namespace confcause
