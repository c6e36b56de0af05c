#include <confcause/causes.hpp>
#include <confcause/errors.hpp>
#include <confcause/ingest.hpp>
#include <confcause/report.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace confcause;

struct cli_options {
    std::string model_path;
    std::string effect_expr;
    std::string effect_list_path;
    std::string measurements_path;
    std::string threshold;
    bool negate = false;
    std::string format = "text";
    std::string dist = "uniform-effects";
    bool per_instance = false;
    std::string features;
    std::string pairs;
    std::string cover;
    int jobs = 1;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(current);
    return out;
}

partial_config parse_pair_group(const std::string& group, const feature_space& space)
{
    partial_config p(space);
    for (const auto& item : split(group, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw error("pair item '" + item + "' must look like feature=0|1");
        const std::string name = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        auto feature = space.index_of(name);
        if (!feature)
            throw error("unknown feature '" + name + "' in --pairs");
        if (value != "0" && value != "1")
            throw error("pair value for '" + name + "' must be 0 or 1");
        p = p.with(*feature, value == "1");
    }
    if (p.empty_support())
        throw error("--pairs group must name at least one feature");
    return p;
}

void add_common_options(CLI::App* sub, cli_options& opts)
{
    sub->add_option("--model", opts.model_path, "feature model file")->required();
    sub->add_option("--effect-expr", opts.effect_expr, "effect as a Boolean expression");
    sub->add_option("--effect-list", opts.effect_list_path, "effect as a config-list file");
    sub->add_option("--measurements", opts.measurements_path,
                    "per-configuration metric CSV");
    sub->add_option("--threshold", opts.threshold, "\"metric REL value\" over the CSV");
    sub->add_flag("--negate", opts.negate, "analyse the complement effect V\\E");
    sub->add_option("--format", opts.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--dist", opts.dist,
                    "uniform-effects|uniform-valid|<weight CSV path>");
    sub->add_flag("--per-instance", opts.per_instance,
                  "responsibility table per effect instance");
    sub->add_option("--features", opts.features, "comma-separated feature filter");
    sub->add_option("--pairs", opts.pairs,
                    "interaction queries, e.g. \"a=1,b=1;a=1,c=0\"");
    sub->add_option("--cover", opts.cover, "greedy|exact (default: both)")
        ->check(CLI::IsMember({"greedy", "exact"}));
    sub->add_option("--jobs", opts.jobs, "parallel effect files (accepted, single-effect runs use 1)")
        ->check(CLI::PositiveNumber);
}

int run(const std::string& command, const cli_options& opts)
{
    const auto started = std::chrono::steady_clock::now();

    const model parsed = parse_model(read_file(opts.model_path));
    const feature_space& space = parsed.space;

    const int effect_sources = (opts.effect_expr.empty() ? 0 : 1) +
                               (opts.effect_list_path.empty() ? 0 : 1) +
                               (opts.measurements_path.empty() ? 0 : 1);
    if (effect_sources != 1)
        throw error("exactly one of --effect-expr, --effect-list, or "
                    "--measurements with --threshold is required");

    std::optional<measurement_table> table;
    effect_spec spec = formula::falsity();
    if (!opts.effect_expr.empty()) {
        spec = parse_expression(opts.effect_expr, space);
    } else if (!opts.effect_list_path.empty()) {
        spec = parse_config_list(read_file(opts.effect_list_path), space);
    } else {
        if (opts.threshold.empty())
            throw error("--measurements needs --threshold");
        table = load_measurements(read_file(opts.measurements_path), space);
        spec = parse_threshold(opts.threshold);
    }

    effect_result effect =
        effect_set(spec, table ? &*table : nullptr, parsed.valid);
    for (const auto& warning : effect.warnings)
        std::cerr << "warning: " << warning << "\n";

    config_set effect_configs = effect.set;
    if (opts.negate)
        effect_configs = parsed.valid - effect_configs;

    analysis_session session(parsed.valid, effect_configs);

    report_request request;
    if (command == "causes") {
        request.with_causes = true;
    } else if (command == "explicate") {
        request.with_causes = true;
        request.with_explications = true;
    } else if (command == "account") {
        request.with_accountability = true;
    } else if (command == "interactions") {
        request.with_interactions = true;
    } else {
        request.with_causes = true;
        request.with_explications = true;
        request.with_accountability = true;
        request.with_interactions = true;
    }
    request.per_instance = opts.per_instance;
    request.distribution_label = opts.dist;

    if (!opts.features.empty()) {
        for (const auto& name : split(opts.features, ',')) {
            auto feature = space.index_of(name);
            if (!feature)
                throw error("unknown feature '" + name + "' in --features");
            request.blame_features.push_back(*feature);
        }
    }
    if (!opts.pairs.empty())
        for (const auto& group : split(opts.pairs, ';'))
            request.pairs.push_back(parse_pair_group(group, space));
    if (opts.cover == "greedy")
        request.cover = cover_strategy::greedy;
    else if (opts.cover == "exact")
        request.cover = cover_strategy::exact;

    std::optional<distribution> dist;
    if (request.with_accountability && !effect_configs.is_empty()) {
        if (opts.dist == "uniform-effects")
            dist = distribution::uniform_over_effects(session);
        else if (opts.dist == "uniform-valid")
            dist = distribution::uniform_over_valid(session);
        else
            dist = distribution::from_weights(
                load_weights(read_file(opts.dist), space), parsed.valid);
    }

    const nlohmann::json report =
        build_report(session, dist ? &*dist : nullptr, request);

    if (opts.format == "json") {
        std::cout << report.dump(2) << "\n";
    } else if (opts.format == "csv") {
        std::cout << render_csv(report);
    } else {
        std::cout << render_text(report);
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - started);
        std::cout << "time: " << elapsed.count() << " ms\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"confcause: counterfactual feature-cause analysis for "
                 "configurable systems"};
    app.require_subcommand(1);

    cli_options opts;
    const char* commands[] = {"causes", "explicate", "account", "interactions", "report"};
    const char* blurbs[] = {"compute feature causes",
                            "characteristic formula, DLS, most general causes, covers",
                            "responsibility and blame",
                            "interaction witnesses and necessity",
                            "all sections"};
    for (std::size_t i = 0; i < 5; ++i)
        add_common_options(app.add_subcommand(commands[i], blurbs[i]), opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // flag errors are input errors
    }

    try {
        return run(app.get_subcommands().front()->get_name(), opts);
    } catch (const confcause::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
