#include <confcause/interactions.hpp>

#include <confcause/causes.hpp>
#include <confcause/errors.hpp>

#include <algorithm>

namespace confcause {

std::optional<int> min_support_size(const analysis_session& session)
{
    const auto& causes = session.causes();
    if (causes.empty())
        return std::nullopt;
    // Canonical order puts minimal support first.
    return causes.items().front().support_size();
}

tway_witness_set tway_witnesses(const analysis_session& session)
{
    auto t = min_support_size(session);
    if (!t)
        throw error("no-causes: interaction witnesses require a non-empty cause set");
    std::vector<partial_config> witnesses;
    for (const auto& cause : session.causes()) {
        if (cause.support_size() != *t)
            break;
        witnesses.push_back(cause);
    }
    return {*t, cause_set(std::move(witnesses))};
}

namespace {

bool any_sufficient_of_size(const analysis_session& session, int size)
{
    if (size < 0)
        return false;
    const int n = session.space().size();
    bool found = false;
    auto enumerate = [&](auto&& self, const partial_config& p, int next, int left) -> void {
        if (found)
            return;
        if (left == 0) {
            if (is_sufficient(p, session))
                found = true;
            return;
        }
        if (next >= n || n - next < left)
            return;
        self(self, p.with(next, false), next + 1, left - 1);
        self(self, p.with(next, true), next + 1, left - 1);
        self(self, p, next + 1, left);
    };
    enumerate(enumerate, partial_config(session.space()), 0, size);
    return found;
}

} // namespace

bool is_tway_witness(const partial_config& candidate, const analysis_session& session)
{
    if (session.space().size() > 12)
        throw error("oracle-too-large: the direct witness check is limited to 12 features");
    if (!is_sufficient(candidate, session))
        return false;
    return !any_sufficient_of_size(session, candidate.support_size() - 1);
}

bool interaction_necessity(const analysis_session& session)
{
    auto t = min_support_size(session);
    return t.has_value() && *t >= 2;
}

} // namespace confcause
