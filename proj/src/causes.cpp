#include <confcause/causes.hpp>

#include <confcause/errors.hpp>

#include <algorithm>

namespace confcause {

bool is_sufficient(const partial_config& p, const analysis_session& session)
{
    const config_set covered = semantics(p) & session.valid();
    return !covered.is_empty() && covered.is_subset_of(session.effect());
}

bool is_cause(const partial_config& p, const analysis_session& session)
{
    if (!is_sufficient(p, session))
        return false;
    for (const auto& [feature, value] : p.literals()) {
        const config_set widened = semantics(p.expanded(feature)) & session.valid();
        if (widened.is_subset_of(session.effect()))
            return false;
    }
    return true;
}

cause_set compute_causes(const analysis_session& session)
{
    return session.causes();
}

cause_set compute_causes_naive(const analysis_session& session)
{
    const int n = session.space().size();
    if (n > 12)
        throw error("oracle-too-large: naive cause enumeration limited to 12 features");

    std::vector<partial_config> found;
    auto enumerate = [&](auto&& self, const partial_config& p, int next) -> void {
        if (next == n) {
            if (is_cause(p, session))
                found.push_back(p);
            return;
        }
        self(self, p, next + 1);
        self(self, p.with(next, false), next + 1);
        self(self, p.with(next, true), next + 1);
    };
    enumerate(enumerate, partial_config(session.space()), 0);
    return cause_set(std::move(found));
}

total_config counterfactual_witness(const partial_config& cause, int feature,
                                    const analysis_session& session)
{
    if (!cause.defines(feature))
        throw error("not-in-support: witness feature must occur in the cause");
    if (!is_cause(cause, session))
        throw error("not-a-cause: counterfactual witnesses exist only for causes");
    const config_set candidates =
        semantics(cause.expanded(feature)) & session.non_effect();
    auto witness = candidates.least();
    if (!witness)
        throw std::logic_error("cause without counterfactual witness");
    return *witness;
}

} // namespace confcause
