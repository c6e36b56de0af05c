#pragma once

#include <confcause/causes.hpp>
#include <confcause/formula.hpp>

namespace confcause {

/// The characteristic DNF: one disjunct per cause, literals in declaration
/// order. An empty set renders as false, an empty-support cause as true.
formula characteristic_formula(const cause_set& causes);

/// Distributive-law simplification of a DNF: repeatedly factor out the literal
/// occurring in the most cubes (ties: lowest feature index, positive before
/// negative), recursing into the factored group and the remainder, until no
/// literal occurs twice. Semantics-preserving and reversible.
formula dls_simplify(const formula& dnf);

/// Full redistribution back to DNF; inverse of dls_simplify at cube-set level.
formula dls_expand(const formula& f);

/// The disjuncts of a DNF as partial configurations (for cube-set comparison).
std::vector<partial_config> dnf_cubes(const formula& dnf, const feature_space& space);

/// Coverage preorder of Def-style generality: semantics(p) & E subseteq
/// semantics(q) & E.
bool at_least_as_general(const partial_config& p, const partial_config& q,
                         const analysis_session& session);

/// Coverage-maximal causes; among maximal causes with identical effect
/// coverage only the minimal-support (then lexicographically least)
/// representative is kept. Always a cause-effect cover when E is non-empty.
cause_set most_general_causes(const analysis_session& session);

/// Does the union of the causes' cubes contain every effect instance?
bool is_cover(const cause_set& causes, const analysis_session& session);

enum class cover_strategy { greedy, exact };

/// Cause-effect cover. Greedy picks the cause covering the most yet-uncovered
/// effect configurations (ties: canonical cause order). Exact runs a
/// branch-and-bound minimum-cardinality search and throws
/// error("cover-too-large") beyond 24 causes.
cause_set cause_effect_cover(const analysis_session& session, cover_strategy strategy);

} // namespace confcause
