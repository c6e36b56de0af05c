#pragma once

#include <confcause/config.hpp>
#include <confcause/rational.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace confcause {

/// A set of total configurations in canonical form (reduced ordered binary
/// decision diagram, variable order = feature declaration order, no dynamic
/// reordering). Two sets over the same space compare equal iff they denote the
/// same set of configurations. Immutable value type; all operations require
/// operands over the same space and throw error("space-mismatch") otherwise.
class config_set {
public:
    static config_set empty(const feature_space& space);
    static config_set universe(const feature_space& space);
    /// The cube of all total configurations agreeing with p on its support.
    static config_set cube(const partial_config& p);
    static config_set point(const total_config& config);

    config_set operator&(const config_set& other) const;
    config_set operator|(const config_set& other) const;
    config_set operator-(const config_set& other) const;
    /// Complement within the full configuration space Theta(F).
    config_set complement() const;

    bool is_subset_of(const config_set& other) const;
    bool is_empty() const noexcept;
    bool contains(const total_config& config) const;

    big_int count() const;
    /// All members in lexicographic bit-string order (declaration order,
    /// false < true).
    std::vector<total_config> enumerate() const;
    /// Lexicographically least member, if any.
    std::optional<total_config> least() const;

    const feature_space& space() const noexcept { return space_; }
    std::size_t node_count() const;

    friend bool operator==(const config_set& a, const config_set& b)
    {
        return a.space_.same_as(b.space_) && a.root_ == b.root_;
    }

    /// Internal handles for the diagram-level algorithms.
    std::uint32_t root() const noexcept { return root_; }
    static config_set from_root(const feature_space& space, std::uint32_t root);

private:
    config_set(feature_space space, std::uint32_t root)
        : space_(std::move(space)), root_(root)
    {
    }

    feature_space space_;
    std::uint32_t root_;
};

/// semantics(p): the cube of all total configurations agreeing with p.
config_set semantics(const partial_config& p);

struct switch_result {
    int distance;
    total_config witness;
};

/// Minimum Hamming distance from origin to any member of target that differs
/// from origin on at least one feature of `required`, plus the
/// lexicographically least witness attaining it. Returns nothing when no such
/// member exists. `required` must be non-empty.
std::optional<switch_result> min_switch(const config_set& target,
                                        const total_config& origin,
                                        std::uint64_t required);

} // namespace confcause
