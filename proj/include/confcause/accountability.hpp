#pragma once

#include <confcause/rational.hpp>
#include <confcause/session.hpp>

#include <map>
#include <utility>
#include <vector>

namespace confcause {

/// Exact probability mass over valid configurations: weights non-negative,
/// support within V, total exactly 1.
class distribution {
public:
    static distribution uniform_over_effects(const analysis_session& session);
    static distribution uniform_over_valid(const analysis_session& session);
    static distribution from_weights(
        const std::vector<std::pair<total_config, rational>>& weights,
        const config_set& valid);

    const feature_space& space() const noexcept { return space_; }
    /// Keyed by configuration bits; iteration order is deterministic.
    const std::map<std::uint64_t, rational>& weights() const noexcept { return weights_; }

private:
    distribution(feature_space space, std::map<std::uint64_t, rational> weights)
        : space_(std::move(space)), weights_(std::move(weights))
    {
    }

    feature_space space_;
    std::map<std::uint64_t, rational> weights_;
};

/// Flips exactly the features of the mask.
total_config switch_features(std::uint64_t flip_mask, const total_config& config);

/// Def-4 responsibility: 0 when no cause covering the context mentions the
/// feature, else 1 / (minimum switch-set size containing the feature that
/// reaches V\E). The context must be an effect instance.
rational responsibility(int feature, const total_config& context,
                        const analysis_session& session);

/// Expected responsibility under the distribution.
rational blame(int feature, const distribution& pi, const analysis_session& session);

/// Responsibility of a partial configuration (feature interaction): 0 unless
/// some cause covering the context extends it, else 1 / (minimum switch-set
/// size meeting its support that reaches V\E).
rational interaction_responsibility(const partial_config& p, const total_config& context,
                                    const analysis_session& session);

rational interaction_blame(const partial_config& p, const distribution& pi,
                           const analysis_session& session);

} // namespace confcause
