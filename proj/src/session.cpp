#include <confcause/session.hpp>

#include <confcause/errors.hpp>
#include <confcause/primes.hpp>

namespace confcause {

analysis_session::analysis_session(config_set valid, config_set effect)
    : valid_(valid), effect_(effect), non_effect_(valid - effect)
{
    if (!valid.space().same_as(effect.space()))
        throw error("space-mismatch: valid and effect sets use different spaces");
    if (valid.is_empty())
        throw error("empty-valid: the set of valid configurations must be non-empty");
    if (!effect.is_subset_of(valid))
        throw error("effect-not-within-valid: E must be a subset of V");
}

const cause_set& analysis_session::causes() const
{
    if (!causes_) {
        std::vector<partial_config> kept;
        if (!effect_.is_empty()) {
            const config_set target = valid_.complement() | effect_;
            for (auto& p : prime_implicants(target))
                if (!(semantics(p) & effect_).is_empty())
                    kept.push_back(std::move(p));
        }
        causes_.emplace(std::move(kept));
    }
    return *causes_;
}

const config_set& analysis_session::feature_cause_coverage(int feature) const
{
    if (!coverage_) {
        std::vector<config_set> unions(static_cast<std::size_t>(space().size()),
                                       config_set::empty(space()));
        for (const auto& cause : causes())
            for (const auto& [f, value] : cause.literals())
                unions[static_cast<std::size_t>(f)] =
                    unions[static_cast<std::size_t>(f)] | semantics(cause);
        coverage_.emplace(std::move(unions));
    }
    return coverage_->at(static_cast<std::size_t>(feature));
}

} // namespace confcause
