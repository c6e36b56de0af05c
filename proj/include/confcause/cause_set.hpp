#pragma once

#include <confcause/config.hpp>

#include <vector>

namespace confcause {

/// Deduplicated sequence of partial configurations in canonical order
/// (support size ascending, then lexicographic literal sequence).
class cause_set {
public:
    cause_set() = default;
    explicit cause_set(std::vector<partial_config> items);

    const std::vector<partial_config>& items() const noexcept { return items_; }
    bool empty() const noexcept { return items_.empty(); }
    std::size_t size() const noexcept { return items_.size(); }

    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }

    friend bool operator==(const cause_set& a, const cause_set& b)
    {
        return a.items_ == b.items_;
    }

private:
    std::vector<partial_config> items_;
};

} // namespace confcause
