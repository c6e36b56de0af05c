#include <confcause/explications.hpp>

#include <confcause/errors.hpp>

#include <algorithm>
#include <map>
#include <optional>

namespace confcause {

namespace {

struct literal {
    int feature;
    bool positive;

    friend bool operator==(const literal&, const literal&) = default;
};

using cube = std::vector<literal>;      // literal order preserved
using cube_list = std::vector<cube>;    // cube order preserved

formula cube_to_formula(const cube& c)
{
    if (c.empty())
        return formula::truth();
    std::vector<formula> lits;
    lits.reserve(c.size());
    for (const auto& l : c)
        lits.push_back(formula::make_literal(l.feature, l.positive));
    return formula::conjunction_of(std::move(lits));
}

formula cubes_to_formula(const cube_list& cubes)
{
    if (cubes.empty())
        return formula::falsity();
    std::vector<formula> disjuncts;
    disjuncts.reserve(cubes.size());
    for (const auto& c : cubes)
        disjuncts.push_back(cube_to_formula(c));
    return formula::disjunction_of(std::move(disjuncts));
}

cube normalized_cube(const cube& c)
{
    cube out;
    for (const auto& l : c) {
        bool seen = false;
        for (const auto& prev : out) {
            if (prev.feature != l.feature)
                continue;
            if (prev.positive != l.positive)
                throw error("contradictory cube: feature appears with both polarities");
            seen = true;
        }
        if (!seen)
            out.push_back(l);
    }
    return out;
}

void push_unique(cube_list& cubes, cube c)
{
    auto key = [](const cube& k) {
        cube s = k;
        std::sort(s.begin(), s.end(), [](const literal& a, const literal& b) {
            return a.feature < b.feature;
        });
        return s;
    };
    const cube ck = key(c);
    for (const auto& existing : cubes)
        if (key(existing) == ck)
            return;
    cubes.push_back(std::move(c));
}

cube_list dnf_to_cubes(const formula& f)
{
    cube_list cubes;
    auto add_cube = [&](const formula& node) {
        if (node.node_kind() == formula::kind::truth) {
            push_unique(cubes, {});
            return;
        }
        if (node.node_kind() == formula::kind::literal) {
            push_unique(cubes, {{node.feature(), node.positive()}});
            return;
        }
        if (node.node_kind() != formula::kind::conjunction)
            throw error("dls-input-not-dnf");
        cube c;
        for (const auto& lit : node.children()) {
            if (lit.node_kind() != formula::kind::literal)
                throw error("dls-input-not-dnf");
            c.push_back({lit.feature(), lit.positive()});
        }
        push_unique(cubes, normalized_cube(c));
    };

    switch (f.node_kind()) {
    case formula::kind::falsity:
        break;
    case formula::kind::disjunction:
        for (const auto& child : f.children())
            add_cube(child);
        break;
    default:
        add_cube(f);
        break;
    }
    return cubes;
}

// Occurrence table keyed by (feature, polarity); the factoring order is fixed:
// highest cube count first, then lowest feature index, positive before
// negative.
std::optional<literal> best_factor(const cube_list& cubes, int num_features)
{
    std::optional<literal> best;
    int best_count = 1;
    for (int f = 0; f < num_features; ++f) {
        for (bool positive : {true, false}) {
            int count = 0;
            for (const auto& c : cubes)
                for (const auto& l : c)
                    if (l.feature == f && l.positive == positive)
                        ++count;
            if (count > best_count) {
                best_count = count;
                best = literal{f, positive};
            }
        }
    }
    return best;
}

formula dls_rec(const cube_list& cubes, int num_features)
{
    auto factor = best_factor(cubes, num_features);
    if (!factor)
        return cubes_to_formula(cubes);

    cube_list factored;
    cube_list remainder;
    for (const auto& c : cubes) {
        if (std::find(c.begin(), c.end(), *factor) != c.end()) {
            cube reduced;
            for (const auto& l : c)
                if (!(l == *factor))
                    reduced.push_back(l);
            factored.push_back(std::move(reduced));
        } else {
            remainder.push_back(c);
        }
    }

    formula factored_part = formula::conjunction_of(
        {formula::make_literal(factor->feature, factor->positive),
         dls_rec(factored, num_features)});
    if (remainder.empty())
        return factored_part;
    return formula::disjunction_of(
        {std::move(factored_part), dls_rec(remainder, num_features)});
}

cube_list expand_rec(const formula& f)
{
    switch (f.node_kind()) {
    case formula::kind::truth:
        return {{}};
    case formula::kind::falsity:
        return {};
    case formula::kind::literal:
        return {{{f.feature(), f.positive()}}};
    case formula::kind::disjunction: {
        cube_list out;
        for (const auto& child : f.children())
            for (auto& c : expand_rec(child))
                push_unique(out, std::move(c));
        return out;
    }
    case formula::kind::conjunction: {
        cube_list acc = {{}};
        for (const auto& child : f.children()) {
            const cube_list rights = expand_rec(child);
            cube_list next;
            for (const auto& left : acc) {
                for (const auto& right : rights) {
                    cube merged = left;
                    merged.insert(merged.end(), right.begin(), right.end());
                    bool contradictory = false;
                    try {
                        merged = normalized_cube(merged);
                    } catch (const error&) {
                        contradictory = true;
                    }
                    if (!contradictory)
                        push_unique(next, std::move(merged));
                }
            }
            acc = std::move(next);
        }
        return acc;
    }
    }
    return {};
}

config_set cause_coverage(const partial_config& cause, const analysis_session& session)
{
    return semantics(cause) & session.effect();
}

} // namespace

formula characteristic_formula(const cause_set& causes)
{
    cube_list cubes;
    for (const auto& cause : causes) {
        cube c;
        for (const auto& [feature, value] : cause.literals())
            c.push_back({feature, value});
        cubes.push_back(std::move(c));
    }
    return cubes_to_formula(cubes);
}

formula dls_simplify(const formula& dnf)
{
    const cube_list cubes = dnf_to_cubes(dnf);
    if (cubes.empty())
        return formula::falsity();
    // The feature horizon only bounds the occurrence scan.
    int horizon = 0;
    for (const auto& c : cubes)
        for (const auto& l : c)
            horizon = std::max(horizon, l.feature + 1);
    return dls_rec(cubes, horizon);
}

formula dls_expand(const formula& f)
{
    return cubes_to_formula(expand_rec(f));
}

std::vector<partial_config> dnf_cubes(const formula& dnf, const feature_space& space)
{
    std::vector<partial_config> out;
    for (const auto& c : dnf_to_cubes(dnf)) {
        partial_config p(space);
        for (const auto& l : c)
            p = p.with(l.feature, l.positive);
        out.push_back(std::move(p));
    }
    return out;
}

bool at_least_as_general(const partial_config& p, const partial_config& q,
                         const analysis_session& session)
{
    return (semantics(p) & session.effect()).is_subset_of(semantics(q) & session.effect());
}

cause_set most_general_causes(const analysis_session& session)
{
    auto& cache = session.most_general_cache();
    if (cache)
        return *cache;

    const auto& causes = session.causes().items();
    std::vector<config_set> coverage;
    coverage.reserve(causes.size());
    for (const auto& cause : causes)
        coverage.push_back(cause_coverage(cause, session));

    std::vector<partial_config> kept;
    std::vector<std::uint32_t> kept_roots;
    for (std::size_t i = 0; i < causes.size(); ++i) {
        bool strictly_dominated = false;
        for (std::size_t j = 0; j < causes.size() && !strictly_dominated; ++j)
            if (j != i && coverage[i].is_subset_of(coverage[j]) &&
                !(coverage[j] == coverage[i]))
                strictly_dominated = true;
        if (strictly_dominated)
            continue;
        // Identical coverage: keep only the first representative in canonical
        // order, which has minimal support and breaks ties lexicographically.
        bool duplicate_coverage = false;
        for (std::uint32_t root : kept_roots)
            if (root == coverage[i].root())
                duplicate_coverage = true;
        if (duplicate_coverage)
            continue;
        kept.push_back(causes[i]);
        kept_roots.push_back(coverage[i].root());
    }
    cache.emplace(std::move(kept));
    return *cache;
}

bool is_cover(const cause_set& causes, const analysis_session& session)
{
    config_set covered = config_set::empty(session.space());
    for (const auto& cause : causes)
        covered = covered | semantics(cause);
    return session.effect().is_subset_of(covered);
}

namespace {

cause_set greedy_cover(const analysis_session& session)
{
    std::vector<partial_config> chosen;
    config_set uncovered = session.effect();
    const auto& causes = session.causes().items();
    while (!uncovered.is_empty()) {
        std::optional<std::size_t> best;
        big_int best_gain = 0;
        for (std::size_t i = 0; i < causes.size(); ++i) {
            const big_int gain = (semantics(causes[i]) & uncovered).count();
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        if (!best)
            throw std::logic_error("effect instance not covered by any cause");
        chosen.push_back(causes[*best]);
        uncovered = uncovered - semantics(causes[*best]);
    }
    return cause_set(std::move(chosen));
}

struct cover_search {
    const std::vector<partial_config>& causes;
    std::size_t best_size;
    std::optional<std::vector<std::size_t>> best;

    // Branch on one uncovered instance: only causes covering it can help.
    void run(const config_set& uncovered, std::vector<std::size_t>& chosen)
    {
        if (uncovered.is_empty()) {
            if (chosen.size() < best_size) {
                best_size = chosen.size();
                best = chosen;
            }
            return;
        }
        if (chosen.size() + 1 >= best_size)
            return;
        const total_config pivot = *uncovered.least();
        for (std::size_t i = 0; i < causes.size(); ++i) {
            if (!causes[i].covers(pivot))
                continue;
            chosen.push_back(i);
            run(uncovered - semantics(causes[i]), chosen);
            chosen.pop_back();
        }
    }
};

cause_set exact_cover(const analysis_session& session)
{
    const auto& causes = session.causes().items();
    if (causes.size() > 24)
        throw error("cover-too-large: exact cover limited to 24 causes (got " +
                    std::to_string(causes.size()) + ")");

    const cause_set greedy = greedy_cover(session);
    cover_search search{causes, greedy.size(), std::nullopt};
    std::vector<std::size_t> chosen;
    search.run(session.effect(), chosen);

    if (!search.best)
        return greedy;
    std::vector<partial_config> out;
    out.reserve(search.best->size());
    for (std::size_t i : *search.best)
        out.push_back(causes[i]);
    return cause_set(std::move(out));
}

} // namespace

cause_set cause_effect_cover(const analysis_session& session, cover_strategy strategy)
{
    if (session.effect().is_empty())
        return cause_set();
    return strategy == cover_strategy::greedy ? greedy_cover(session)
                                              : exact_cover(session);
}

} // namespace confcause
