#pragma once

#include <confcause/session.hpp>

namespace confcause {

/// FC1: the cube meets V and its valid part lies entirely inside E.
bool is_sufficient(const partial_config& p, const analysis_session& session);

/// FC1 and FC2: sufficient, and every single-feature expansion is not.
bool is_cause(const partial_config& p, const analysis_session& session);

/// All feature causes, via the prime-implicant route.
cause_set compute_causes(const analysis_session& session);

/// Exhaustive 3^|F| check of FC1/FC2 per partial configuration; the slow
/// reference route, independent of the prime computation. Throws
/// error("oracle-too-large") beyond 12 features.
cause_set compute_causes_naive(const analysis_session& session);

/// Lexicographically least member of semantics(expand(cause, feature)) & (V\E).
/// Requires the feature in the support and the argument to be a cause.
total_config counterfactual_witness(const partial_config& cause, int feature,
                                    const analysis_session& session);

} // namespace confcause
