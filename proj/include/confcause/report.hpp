#pragma once

#include <confcause/accountability.hpp>
#include <confcause/explications.hpp>
#include <confcause/session.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace confcause {

/// Which report sections to compute and how.
struct report_request {
    bool with_causes = false;
    bool with_explications = false;
    bool with_accountability = false;
    bool with_interactions = false;
    bool per_instance = false;
    std::vector<int> blame_features;        // empty = every feature
    std::vector<partial_config> pairs;      // interaction blame queries
    std::optional<cover_strategy> cover;    // empty = greedy plus exact when feasible
    std::string distribution_label = "uniform-effects";
};

/// Machine-readable report: keys sorted, counts as integers (strings once they
/// exceed 2^53), every rational rendered exactly as "p/q". Byte-identical for
/// identical inputs. `dist` may be null unless accountability is requested on
/// a non-empty effect set.
nlohmann::json build_report(const analysis_session& session, const distribution* dist,
                            const report_request& request);

/// Human-readable rendering of a built report (no timing; the CLI appends it).
std::string render_text(const nlohmann::json& report);

/// Flat "section,key,subkey,value" rows.
std::string render_csv(const nlohmann::json& report);

} // namespace confcause
