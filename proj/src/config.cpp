#include <confcause/config.hpp>

#include <confcause/errors.hpp>

#include <bit>

namespace confcause {

namespace {

std::uint64_t bit(int i)
{
    return std::uint64_t{1} << i;
}

std::uint64_t full_mask(const feature_space& space)
{
    return space.size() == 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << space.size()) - 1;
}

void check_feature(const feature_space& space, int feature)
{
    if (feature < 0 || feature >= space.size())
        throw error("feature index " + std::to_string(feature) +
                    " outside the space");
}

} // namespace

total_config::total_config(feature_space space, std::uint64_t bits)
    : space_(std::move(space)), bits_(bits & full_mask(space_))
{
}

bool total_config::value(int feature) const
{
    check_feature(space_, feature);
    return (bits_ & bit(feature)) != 0;
}

std::string total_config::selected_names() const
{
    std::string out;
    for (int i = 0; i < space_.size(); ++i) {
        if (!(bits_ & bit(i)))
            continue;
        if (!out.empty())
            out += ' ';
        out += space_.name(i);
    }
    return out.empty() ? "-" : out;
}

std::string total_config::bit_string() const
{
    std::string out(static_cast<std::size_t>(space_.size()), '0');
    for (int i = 0; i < space_.size(); ++i)
        if (bits_ & bit(i))
            out[static_cast<std::size_t>(i)] = '1';
    return out;
}

partial_config::partial_config(feature_space space)
    : space_(std::move(space)), support_(0), values_(0)
{
}

partial_config partial_config::from_literals(
    feature_space space, const std::vector<std::pair<int, bool>>& literals)
{
    partial_config p(std::move(space));
    for (const auto& [feature, value] : literals)
        p = p.with(feature, value);
    return p;
}

partial_config partial_config::from_names(
    feature_space space, const std::vector<std::pair<std::string, bool>>& literals)
{
    partial_config p(space);
    for (const auto& [name, value] : literals) {
        auto feature = space.index_of(name);
        if (!feature)
            throw error("unknown feature '" + name + "'");
        p = p.with(*feature, value);
    }
    return p;
}

partial_config partial_config::from_total(const total_config& config)
{
    return partial_config(config.space(), full_mask(config.space()), config.bits());
}

int partial_config::support_size() const noexcept
{
    return std::popcount(support_);
}

bool partial_config::defines(int feature) const
{
    check_feature(space_, feature);
    return (support_ & bit(feature)) != 0;
}

bool partial_config::value(int feature) const
{
    if (!defines(feature))
        throw error("not-in-support: feature '" + space_.name(feature) + "'");
    return (values_ & bit(feature)) != 0;
}

partial_config partial_config::with(int feature, bool value) const
{
    check_feature(space_, feature);
    if (support_ & bit(feature))
        throw error("feature '" + space_.name(feature) + "' already assigned");
    return partial_config(space_, support_ | bit(feature),
                          value ? values_ | bit(feature) : values_);
}

partial_config partial_config::expanded(int feature) const
{
    if (!defines(feature))
        throw error("not-in-support: cannot expand on feature '" +
                    space_.name(feature) + "'");
    return partial_config(space_, support_ & ~bit(feature), values_ & ~bit(feature));
}

std::vector<std::pair<int, bool>> partial_config::literals() const
{
    std::vector<std::pair<int, bool>> out;
    out.reserve(static_cast<std::size_t>(support_size()));
    for (int i = 0; i < space_.size(); ++i)
        if (support_ & bit(i))
            out.emplace_back(i, (values_ & bit(i)) != 0);
    return out;
}

std::string partial_config::render() const
{
    if (support_ == 0)
        return "true";
    std::string out;
    for (const auto& [feature, value] : literals()) {
        if (!out.empty())
            out += " & ";
        if (!value)
            out += '!';
        out += space_.name(feature);
    }
    return out;
}

bool partial_config::covers(const total_config& config) const
{
    if (!space_.same_as(config.space()))
        throw error("space-mismatch");
    return ((config.bits() ^ values_) & support_) == 0;
}

bool partial_config::covers(const partial_config& other) const
{
    if (!space_.same_as(other.space_))
        throw error("space-mismatch");
    return (other.support_ & support_) == support_ &&
           ((other.values_ ^ values_) & support_) == 0;
}

bool partial_config::canonical_less(const partial_config& a, const partial_config& b)
{
    const int sa = a.support_size();
    const int sb = b.support_size();
    if (sa != sb)
        return sa < sb;
    for (int i = 0; i < a.space_.size(); ++i) {
        const bool in_a = (a.support_ & bit(i)) != 0;
        const bool in_b = (b.support_ & bit(i)) != 0;
        if (in_a != in_b)
            return in_a; // the cube whose next literal comes earlier is smaller
        if (!in_a)
            continue;
        const bool pos_a = (a.values_ & bit(i)) != 0;
        const bool pos_b = (b.values_ & bit(i)) != 0;
        if (pos_a != pos_b)
            return pos_a; // positive before negative
    }
    return false;
}

} // namespace confcause
