#include <confcause/config_set.hpp>

#include <confcause/errors.hpp>

#include "bdd_store.hpp"

namespace confcause {

namespace {

detail::bdd_store& same_store(const config_set& a, const config_set& b)
{
    if (!a.space().same_as(b.space()))
        throw error("space-mismatch: operands belong to different feature spaces");
    return a.space().store();
}

} // namespace

config_set config_set::empty(const feature_space& space)
{
    return config_set(space, detail::bdd_store::terminal_false);
}

config_set config_set::universe(const feature_space& space)
{
    return config_set(space, detail::bdd_store::terminal_true);
}

config_set config_set::cube(const partial_config& p)
{
    return config_set(p.space(), p.space().store().cube(p.support_mask(), p.positive_mask()));
}

config_set config_set::point(const total_config& config)
{
    return config_set(config.space(), config.space().store().minterm(config.bits()));
}

config_set config_set::from_root(const feature_space& space, std::uint32_t root)
{
    return config_set(space, root);
}

config_set config_set::operator&(const config_set& other) const
{
    return config_set(space_, same_store(*this, other).apply_and(root_, other.root_));
}

config_set config_set::operator|(const config_set& other) const
{
    return config_set(space_, same_store(*this, other).apply_or(root_, other.root_));
}

config_set config_set::operator-(const config_set& other) const
{
    return config_set(space_, same_store(*this, other).apply_diff(root_, other.root_));
}

config_set config_set::complement() const
{
    return config_set(space_, space_.store().complement(root_));
}

bool config_set::is_subset_of(const config_set& other) const
{
    return same_store(*this, other).is_subset(root_, other.root_);
}

bool config_set::is_empty() const noexcept
{
    return root_ == detail::bdd_store::terminal_false;
}

bool config_set::contains(const total_config& config) const
{
    if (!space_.same_as(config.space()))
        throw error("space-mismatch");
    return space_.store().contains(root_, config.bits());
}

big_int config_set::count() const
{
    return space_.store().count(root_);
}

std::vector<total_config> config_set::enumerate() const
{
    std::vector<std::uint64_t> raw;
    space_.store().enumerate(root_, raw);
    std::vector<total_config> out;
    out.reserve(raw.size());
    for (std::uint64_t bits : raw)
        out.emplace_back(space_, bits);
    return out;
}

std::optional<total_config> config_set::least() const
{
    auto bits = space_.store().least(root_);
    if (!bits)
        return std::nullopt;
    return total_config(space_, *bits);
}

std::size_t config_set::node_count() const
{
    return space_.store().size();
}

config_set semantics(const partial_config& p)
{
    return config_set::cube(p);
}

std::optional<switch_result> min_switch(const config_set& target,
                                        const total_config& origin,
                                        std::uint64_t required)
{
    if (!target.space().same_as(origin.space()))
        throw error("space-mismatch");
    if (required == 0)
        throw error("min_switch requires a non-empty set of required features");

    auto& store = target.space().store();

    // Restrict the target to configurations that differ from the origin on at
    // least one required feature, then search for the cheapest flip set.
    std::uint32_t flips = detail::bdd_store::terminal_false;
    for (int f = 0; f < target.space().size(); ++f) {
        if (!(required & (std::uint64_t{1} << f)))
            continue;
        const bool flipped = !((origin.bits() >> f) & 1);
        const std::uint64_t mask = std::uint64_t{1} << f;
        flips = store.apply_or(flips, store.cube(mask, flipped ? mask : 0));
    }
    const std::uint32_t restricted = store.apply_and(target.root(), flips);

    auto hit = store.min_switch(restricted, origin.bits());
    if (!hit)
        return std::nullopt;
    return switch_result{hit->distance, total_config(target.space(), hit->witness)};
}

} // namespace confcause
