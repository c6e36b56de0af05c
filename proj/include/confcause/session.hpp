#pragma once

#include <confcause/cause_set.hpp>
#include <confcause/config_set.hpp>

#include <memory>
#include <optional>
#include <vector>

namespace confcause {

/// One causal analysis over a fixed pair (V, E): the valid configurations and
/// the effect set. Construction enforces E subseteq V and V nonempty.
///
/// Cause-related results are computed lazily and cached. A session (and the
/// node store of its feature space) is confined to one thread; independent
/// sessions over separately created spaces may run in parallel.
class analysis_session {
public:
    analysis_session(config_set valid, config_set effect);

    const feature_space& space() const noexcept { return valid_.space(); }
    const config_set& valid() const noexcept { return valid_; }
    const config_set& effect() const noexcept { return effect_; }
    const config_set& non_effect() const noexcept { return non_effect_; }

    /// Feature causes of E w.r.t. V (primes of (Theta \ V) | E that meet E).
    const cause_set& causes() const;

    /// Union of the cubes of the causes whose support contains the feature;
    /// the responsibility gate tests membership here.
    const config_set& feature_cause_coverage(int feature) const;

    /// Cache slot used by most_general_causes(); empty until computed.
    std::optional<cause_set>& most_general_cache() const { return most_general_; }

private:
    config_set valid_;
    config_set effect_;
    config_set non_effect_;
    mutable std::optional<cause_set> causes_;
    mutable std::optional<std::vector<config_set>> coverage_;
    mutable std::optional<cause_set> most_general_;
};

} // namespace confcause
