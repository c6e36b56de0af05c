#include <confcause/cause_set.hpp>

#include <algorithm>

namespace confcause {

cause_set::cause_set(std::vector<partial_config> items) : items_(std::move(items))
{
    std::sort(items_.begin(), items_.end(), partial_config::canonical_less);
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

} // namespace confcause
