#pragma once

#include <confcause/config_set.hpp>
#include <confcause/formula.hpp>
#include <confcause/rational.hpp>

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace confcause {

/// Feature model file:
///   # comment
///   features: <id> <id> ...
///   valid: <expression>
/// Expressions use ! & | ( ) -> <-> with identifiers and true/false;
/// precedence ! > & > | > -> > <->. UTF-8, LF or CRLF.
struct model {
    feature_space space;
    config_set valid;
};

model parse_model(std::string_view text);

/// Parses a Boolean expression over the space. Implication and equivalence
/// are desugared and negation is pushed to the literals while parsing, so the
/// result uses only constants, literals, conjunction, and disjunction.
formula parse_expression(std::string_view text, const feature_space& space);

/// Config list: one configuration per line as space-separated selected
/// feature names, "-" for the empty selection, # comments.
config_set parse_config_list(std::string_view text, const feature_space& space);
std::string render_config_list(const config_set& set);

/// Per-configuration metric values from an RFC-4180 CSV. The header names one
/// column per feature (cells 0/1, any column order) and one column per metric
/// (exact decimals, at most nine fractional digits).
class measurement_table {
public:
    measurement_table(feature_space space, std::vector<std::string> metrics,
                      std::vector<std::uint64_t> row_order,
                      std::map<std::uint64_t, std::vector<rational>> rows);

    const feature_space& space() const noexcept { return space_; }
    const std::vector<std::string>& metrics() const noexcept { return metrics_; }
    std::size_t row_count() const noexcept { return row_order_.size(); }
    bool has_metric(std::string_view name) const;
    const rational* value(std::uint64_t config_bits, std::string_view metric) const;
    const std::vector<std::uint64_t>& row_order() const noexcept { return row_order_; }

private:
    feature_space space_;
    std::vector<std::string> metrics_;
    std::vector<std::uint64_t> row_order_;
    std::map<std::uint64_t, std::vector<rational>> rows_;
};

measurement_table load_measurements(std::string_view csv, const feature_space& space);

enum class relation { less, less_equal, greater, greater_equal, equal, not_equal };

struct threshold_spec {
    std::string metric;
    relation rel;
    rational value;
};

/// "metric REL value" with REL one of < <= > >= = !=.
threshold_spec parse_threshold(std::string_view text);

/// The three ways to describe an effect property.
using effect_spec = std::variant<formula, config_set, threshold_spec>;

struct effect_result {
    config_set set;
    std::vector<std::string> warnings;
};

/// Builds E from the given effect description: expressions and config lists
/// are intersected with V (listed configurations outside V only produce
/// warnings); thresholds require a table covering V exactly.
effect_result effect_set(const effect_spec& spec, const measurement_table* table,
                         const config_set& valid);

/// Weight table CSV with header "config,weight"; the config cell uses the
/// config-list syntax and the weight is "p/q" or a decimal.
std::vector<std::pair<total_config, rational>> load_weights(std::string_view csv,
                                                            const feature_space& space);

} // namespace confcause
