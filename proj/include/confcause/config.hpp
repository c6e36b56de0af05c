#pragma once

#include <confcause/feature_space.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace confcause {

/// One Boolean per feature, packed into a 64-bit word (bit i = feature i).
/// Immutable value type.
class total_config {
public:
    total_config(feature_space space, std::uint64_t bits);

    const feature_space& space() const noexcept { return space_; }
    std::uint64_t bits() const noexcept { return bits_; }
    bool value(int feature) const;

    /// Space-separated selected feature names, "-" when nothing is selected.
    std::string selected_names() const;
    /// Declaration-order 0/1 string, feature 0 first.
    std::string bit_string() const;

    friend bool operator==(const total_config& a, const total_config& b)
    {
        return a.space_.same_as(b.space_) && a.bits_ == b.bits_;
    }

private:
    feature_space space_;
    std::uint64_t bits_;
};

/// Partial assignment defined exactly on its support. Empty support is legal
/// and denotes the whole configuration space. Immutable value type.
class partial_config {
public:
    explicit partial_config(feature_space space);
    static partial_config from_literals(feature_space space,
                                        const std::vector<std::pair<int, bool>>& literals);
    static partial_config from_names(feature_space space,
                                     const std::vector<std::pair<std::string, bool>>& literals);
    static partial_config from_total(const total_config& config);

    const feature_space& space() const noexcept { return space_; }
    std::uint64_t support_mask() const noexcept { return support_; }
    std::uint64_t positive_mask() const noexcept { return values_; }
    int support_size() const noexcept;
    bool empty_support() const noexcept { return support_ == 0; }

    bool defines(int feature) const;
    bool value(int feature) const; // requires defines(feature)

    /// Copy with one more literal (feature must not be defined yet).
    partial_config with(int feature, bool value) const;
    /// The x-expansion: drops the feature from the support.
    /// Throws error("not-in-support") when the feature is not defined.
    partial_config expanded(int feature) const;

    /// Literals in declaration order.
    std::vector<std::pair<int, bool>> literals() const;

    /// Conjunction syntax: "e & !c"; "true" for empty support.
    std::string render() const;

    /// Does the total configuration agree with this assignment on the support?
    bool covers(const total_config& config) const;
    /// Cube containment: semantics(other) subseteq semantics(*this).
    bool covers(const partial_config& other) const;

    friend bool operator==(const partial_config& a, const partial_config& b)
    {
        return a.space_.same_as(b.space_) && a.support_ == b.support_ &&
               a.values_ == b.values_;
    }

    /// Canonical ordering used for cause sets and prime listings: support size
    /// ascending, then lexicographic on the literal sequence ordered by feature
    /// index with a positive literal before a negative one.
    static bool canonical_less(const partial_config& a, const partial_config& b);

private:
    partial_config(feature_space space, std::uint64_t support, std::uint64_t values)
        : space_(std::move(space)), support_(support), values_(values)
    {
    }

    feature_space space_;
    std::uint64_t support_; // bit set = feature in the support
    std::uint64_t values_;  // meaningful only on support bits
};

} // namespace confcause
