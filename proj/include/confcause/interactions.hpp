#pragma once

#include <confcause/session.hpp>

#include <optional>

namespace confcause {

/// Minimum cause support size; nothing when there are no causes.
std::optional<int> min_support_size(const analysis_session& session);

struct tway_witness_set {
    int t;
    cause_set witnesses;
};

/// All causes of minimal support size t; by the witness/cause correspondence
/// these are exactly the t-way interaction witnesses. Throws
/// error("no-causes") when the cause set is empty.
tway_witness_set tway_witnesses(const analysis_session& session);

/// Direct FI1/FI2 check: sufficiency of the candidate, and no sufficient
/// partial configuration of support size |supp|-1 (exhaustive scan). Throws
/// error("oracle-too-large") beyond 12 features.
bool is_tway_witness(const partial_config& candidate, const analysis_session& session);

/// Does every minimal cause involve at least two features?
bool interaction_necessity(const analysis_session& session);

} // namespace confcause
