#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace confcause {

namespace detail {
class space_state;
class bdd_store;
} // namespace detail

/// Ordered universe of named Boolean features. Identifiers must match
/// [A-Za-z_][A-Za-z0-9_]*, be unique, and number between 1 and 64; "true" and
/// "false" are reserved words of the expression grammar and rejected as names.
///
/// A feature_space is a cheap shared handle. It owns the decision-diagram node
/// store used by every config_set over it, so two spaces created separately
/// are distinct even if their name lists coincide. The store is confined to
/// one analysis session; independent spaces may be used from different threads.
class feature_space {
public:
    static constexpr int max_features = 64;

    static feature_space create(std::vector<std::string> names);

    int size() const noexcept;
    const std::string& name(int feature) const;
    const std::vector<std::string>& names() const noexcept;
    std::optional<int> index_of(std::string_view name) const noexcept;

    /// Identity, not name-list equality.
    bool same_as(const feature_space& other) const noexcept
    {
        return state_ == other.state_;
    }

    /// Internal: shared node store backing all sets over this space.
    detail::bdd_store& store() const noexcept;

private:
    explicit feature_space(std::shared_ptr<detail::space_state> state)
        : state_(std::move(state))
    {
    }

    std::shared_ptr<detail::space_state> state_;
};

} // namespace confcause
