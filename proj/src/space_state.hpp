#pragma once

#include "bdd_store.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace confcause::detail {

class space_state {
public:
    explicit space_state(std::vector<std::string> names)
        : names_(std::move(names)), store_(static_cast<int>(names_.size()))
    {
        for (int i = 0; i < static_cast<int>(names_.size()); ++i)
            index_.emplace(names_[i], i);
    }

    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::unordered_map<std::string, int>& index() const noexcept { return index_; }
    bdd_store& store() noexcept { return store_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    bdd_store store_;
};

} // namespace confcause::detail
