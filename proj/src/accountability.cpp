#include <confcause/accountability.hpp>

#include <confcause/errors.hpp>

namespace confcause {

distribution distribution::uniform_over_effects(const analysis_session& session)
{
    if (session.effect().is_empty())
        throw error("empty-effect: uniform distribution over effects is undefined");
    const rational share(1, session.effect().count());
    std::map<std::uint64_t, rational> weights;
    for (const auto& config : session.effect().enumerate())
        weights.emplace(config.bits(), share);
    return distribution(session.space(), std::move(weights));
}

distribution distribution::uniform_over_valid(const analysis_session& session)
{
    const rational share(1, session.valid().count());
    std::map<std::uint64_t, rational> weights;
    for (const auto& config : session.valid().enumerate())
        weights.emplace(config.bits(), share);
    return distribution(session.space(), std::move(weights));
}

distribution distribution::from_weights(
    const std::vector<std::pair<total_config, rational>>& weights,
    const config_set& valid)
{
    std::map<std::uint64_t, rational> table;
    rational total = 0;
    for (const auto& [config, weight] : weights) {
        if (!config.space().same_as(valid.space()))
            throw error("space-mismatch");
        if (weight < 0)
            throw error("negative weight for configuration '" +
                        config.selected_names() + "'");
        if (!valid.contains(config))
            throw error("weighted configuration '" + config.selected_names() +
                        "' is not valid");
        if (!table.emplace(config.bits(), weight).second)
            throw error("duplicate weight for configuration '" +
                        config.selected_names() + "'");
        total += weight;
    }
    if (total != 1)
        throw error("weights sum to " + to_fraction_string(total) + ", expected 1");
    return distribution(valid.space(), std::move(table));
}

total_config switch_features(std::uint64_t flip_mask, const total_config& config)
{
    return total_config(config.space(), config.bits() ^ flip_mask);
}

namespace {

void check_effect_instance(const total_config& context, const analysis_session& session)
{
    if (!session.effect().contains(context))
        throw error("not-an-effect-instance: context '" + context.selected_names() +
                    "' is outside E");
}

rational switch_share(const analysis_session& session, const total_config& context,
                      std::uint64_t required)
{
    auto hit = min_switch(session.non_effect(), context, required);
    if (!hit)
        throw std::logic_error("responsibility gate passed but no witness exists");
    return rational(1, hit->distance);
}

} // namespace

rational responsibility(int feature, const total_config& context,
                        const analysis_session& session)
{
    check_effect_instance(context, session);
    if (!session.feature_cause_coverage(feature).contains(context))
        return 0;
    return switch_share(session, context, std::uint64_t{1} << feature);
}

rational blame(int feature, const distribution& pi, const analysis_session& session)
{
    rational total = 0;
    for (const auto& [bits, weight] : pi.weights()) {
        const total_config context(session.space(), bits);
        if (!session.effect().contains(context))
            continue;
        if (weight == 0)
            continue;
        total += weight * responsibility(feature, context, session);
    }
    return total;
}

rational interaction_responsibility(const partial_config& p, const total_config& context,
                                    const analysis_session& session)
{
    check_effect_instance(context, session);
    if (p.empty_support())
        throw error("interaction responsibility needs a non-empty support");
    // Some cause must extend p (supp(p) inside its support, agreeing there)
    // and cover the context.
    bool gate = false;
    for (const auto& cause : session.causes()) {
        if (p.covers(cause) && cause.covers(context)) {
            gate = true;
            break;
        }
    }
    if (!gate)
        return 0;
    return switch_share(session, context, p.support_mask());
}

rational interaction_blame(const partial_config& p, const distribution& pi,
                           const analysis_session& session)
{
    rational total = 0;
    for (const auto& [bits, weight] : pi.weights()) {
        const total_config context(session.space(), bits);
        if (!session.effect().contains(context))
            continue;
        if (weight == 0)
            continue;
        total += weight * interaction_responsibility(p, context, session);
    }
    return total;
}

} // namespace confcause
