#include <confcause/report.hpp>

#include <confcause/errors.hpp>
#include <confcause/interactions.hpp>

#include <sstream>

namespace confcause {

namespace {

using nlohmann::json;

json count_value(const big_int& n)
{
    static const big_int json_safe = big_int(1) << 53;
    if (n < json_safe)
        return static_cast<std::uint64_t>(n);
    return n.str();
}

json render_causes(const cause_set& causes)
{
    json items = json::array();
    for (const auto& cause : causes)
        items.push_back(cause.render());
    return items;
}

json causes_section(const analysis_session& session)
{
    return {{"count", session.causes().size()},
            {"empty_effect", session.effect().is_empty()},
            {"items", render_causes(session.causes())}};
}

json explications_section(const analysis_session& session,
                          const report_request& request)
{
    const cause_set& causes = session.causes();
    const formula chi = characteristic_formula(causes);
    const formula dls = dls_simplify(chi);
    const cause_set mgc = most_general_causes(session);
    const formula mgc_dls = dls_simplify(characteristic_formula(mgc));

    json section{{"characteristic", chi.render(session.space())},
                 {"characteristic_length", chi.length()},
                 {"dls", dls.render(session.space())},
                 {"dls_length", dls.length()},
                 {"dls_ratio", to_fraction_string(rational(dls.length(), chi.length()))},
                 {"most_general", render_causes(mgc)},
                 {"most_general_count", mgc.size()},
                 {"most_general_dls", mgc_dls.render(session.space())}};

    const bool want_greedy = !request.cover || *request.cover == cover_strategy::greedy;
    const bool want_exact = !request.cover || *request.cover == cover_strategy::exact;
    if (want_greedy) {
        const cause_set greedy = cause_effect_cover(session, cover_strategy::greedy);
        section["cover_greedy"] = render_causes(greedy);
        section["cover_greedy_size"] = greedy.size();
    }
    if (want_exact) {
        if (request.cover && *request.cover == cover_strategy::exact) {
            const cause_set exact = cause_effect_cover(session, cover_strategy::exact);
            section["cover_exact"] = render_causes(exact);
            section["cover_exact_size"] = exact.size();
        } else {
            // Default mode: skip quietly when the instance is too large.
            try {
                const cause_set exact = cause_effect_cover(session, cover_strategy::exact);
                section["cover_exact"] = render_causes(exact);
                section["cover_exact_size"] = exact.size();
            } catch (const error&) {
                section["cover_exact"] = nullptr;
                section["cover_exact_size"] = nullptr;
            }
        }
    }
    return section;
}

json accountability_section(const analysis_session& session, const distribution* dist,
                            const report_request& request)
{
    json section{{"distribution", request.distribution_label}};
    if (session.effect().is_empty() || dist == nullptr) {
        section["blame"] = json::object();
        section["note"] = "empty effect set";
        return section;
    }

    std::vector<int> features = request.blame_features;
    if (features.empty())
        for (int f = 0; f < session.space().size(); ++f)
            features.push_back(f);

    json blame_table = json::object();
    for (int f : features)
        blame_table[session.space().name(f)] =
            to_fraction_string(blame(f, *dist, session));
    section["blame"] = std::move(blame_table);

    if (!request.pairs.empty()) {
        json rows = json::array();
        for (const auto& p : request.pairs)
            rows.push_back({{"blame", to_fraction_string(interaction_blame(p, *dist, session))},
                            {"pattern", p.render()}});
        section["interaction_blame"] = std::move(rows);
    }

    if (request.per_instance) {
        json rows = json::array();
        for (const auto& context : session.effect().enumerate()) {
            json values = json::object();
            for (int f : features)
                values[session.space().name(f)] =
                    to_fraction_string(responsibility(f, context, session));
            rows.push_back({{"context", context.selected_names()},
                            {"responsibility", std::move(values)}});
        }
        section["per_instance"] = std::move(rows);
    }
    return section;
}

json interactions_section(const analysis_session& session)
{
    json section;
    const auto t = min_support_size(session);
    section["min_support_size"] = t ? json(*t) : json(nullptr);
    section["necessary"] = interaction_necessity(session);
    if (t) {
        const auto result = tway_witnesses(session);
        section["witnesses"] = render_causes(result.witnesses);
        section["witness_count"] = result.witnesses.size();
    } else {
        section["witnesses"] = json::array();
        section["witness_count"] = 0;
    }
    return section;
}

std::string csv_escape(const std::string& field)
{
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string scalar_to_string(const json& value)
{
    if (value.is_string())
        return value.get<std::string>();
    if (value.is_null())
        return "";
    return value.dump();
}

// "p/q" strings become decimals for the human-readable views.
std::string with_decimal(const std::string& fraction)
{
    const rational r = parse_rational(fraction);
    const std::string decimal = to_decimal_string(r);
    if (decimal == fraction)
        return fraction;
    return fraction + " (" + decimal + ")";
}

} // namespace

json build_report(const analysis_session& session, const distribution* dist,
                  const report_request& request)
{
    json report;
    report["model"] = {{"effect_count", count_value(session.effect().count())},
                       {"feature_count", session.space().size()},
                       {"features", session.space().names()},
                       {"valid_count", count_value(session.valid().count())}};
    if (request.with_causes)
        report["causes"] = causes_section(session);
    if (request.with_explications)
        report["explications"] = explications_section(session, request);
    if (request.with_accountability)
        report["accountability"] = accountability_section(session, dist, request);
    if (request.with_interactions)
        report["interactions"] = interactions_section(session);
    return report;
}

std::string render_text(const json& report)
{
    std::ostringstream out;
    const auto& model = report.at("model");
    out << "model: " << model.at("feature_count") << " features, |V| = "
        << scalar_to_string(model.at("valid_count")) << ", |E| = "
        << scalar_to_string(model.at("effect_count")) << "\n";

    if (report.contains("causes")) {
        const auto& causes = report.at("causes");
        if (causes.at("empty_effect").get<bool>()) {
            out << "no causes (empty effect set)\n";
        } else {
            out << "causes (" << causes.at("count") << "):\n";
            for (const auto& item : causes.at("items"))
                out << "  " << item.get<std::string>() << "\n";
        }
    }

    if (report.contains("explications")) {
        const auto& ex = report.at("explications");
        out << "characteristic: " << ex.at("characteristic").get<std::string>()
            << "  [length " << ex.at("characteristic_length") << "]\n";
        out << "DLS: " << ex.at("dls").get<std::string>() << "  [length "
            << ex.at("dls_length") << ", "
            << to_decimal_string(parse_rational(ex.at("dls_ratio").get<std::string>()) * 100, 3)
            << "% of characteristic]\n";
        out << "most general causes (" << ex.at("most_general_count") << "):\n";
        for (const auto& item : ex.at("most_general"))
            out << "  " << item.get<std::string>() << "\n";
        out << "DLS of most general: " << ex.at("most_general_dls").get<std::string>()
            << "\n";
        if (ex.contains("cover_greedy")) {
            out << "cover (greedy, " << ex.at("cover_greedy_size") << "):";
            for (const auto& item : ex.at("cover_greedy"))
                out << " " << item.get<std::string>() << ";";
            out << "\n";
        }
        if (ex.contains("cover_exact")) {
            if (ex.at("cover_exact").is_null()) {
                out << "cover (exact): skipped, too many causes\n";
            } else {
                out << "cover (exact, " << ex.at("cover_exact_size") << "):";
                for (const auto& item : ex.at("cover_exact"))
                    out << " " << item.get<std::string>() << ";";
                out << "\n";
            }
        }
    }

    if (report.contains("accountability")) {
        const auto& acc = report.at("accountability");
        out << "blame [" << acc.at("distribution").get<std::string>() << "]:\n";
        if (acc.contains("note"))
            out << "  (" << acc.at("note").get<std::string>() << ")\n";
        for (const auto& [name, value] : acc.at("blame").items())
            out << "  " << name << ": " << with_decimal(value.get<std::string>()) << "\n";
        if (acc.contains("interaction_blame")) {
            out << "interaction blame:\n";
            for (const auto& row : acc.at("interaction_blame"))
                out << "  " << row.at("pattern").get<std::string>() << ": "
                    << with_decimal(row.at("blame").get<std::string>()) << "\n";
        }
        if (acc.contains("per_instance")) {
            out << "responsibility per effect instance:\n";
            for (const auto& row : acc.at("per_instance")) {
                out << "  " << row.at("context").get<std::string>() << ":";
                for (const auto& [name, value] : row.at("responsibility").items())
                    out << " " << name << "=" << value.get<std::string>();
                out << "\n";
            }
        }
    }

    if (report.contains("interactions")) {
        const auto& in = report.at("interactions");
        if (in.at("min_support_size").is_null()) {
            out << "interactions: no causes\n";
        } else {
            out << "interactions: t = " << in.at("min_support_size")
                << ", necessary = " << (in.at("necessary").get<bool>() ? "true" : "false")
                << "\n";
            out << "  witnesses (" << in.at("witness_count") << "):";
            for (const auto& item : in.at("witnesses"))
                out << " " << item.get<std::string>() << ";";
            out << "\n";
        }
    }
    return out.str();
}

std::string render_csv(const json& report)
{
    std::ostringstream out;
    out << "section,key,subkey,value\n";
    auto row = [&](const std::string& section, const std::string& key,
                   const std::string& subkey, const std::string& value) {
        out << csv_escape(section) << ',' << csv_escape(key) << ',' << csv_escape(subkey)
            << ',' << csv_escape(value) << "\n";
    };

    const auto& model = report.at("model");
    row("model", "effect_count", "", scalar_to_string(model.at("effect_count")));
    row("model", "feature_count", "", scalar_to_string(model.at("feature_count")));
    row("model", "valid_count", "", scalar_to_string(model.at("valid_count")));

    if (report.contains("causes")) {
        const auto& causes = report.at("causes");
        row("causes", "count", "", scalar_to_string(causes.at("count")));
        int index = 0;
        for (const auto& item : causes.at("items"))
            row("causes", "item", std::to_string(++index), item.get<std::string>());
    }

    if (report.contains("explications")) {
        const auto& ex = report.at("explications");
        for (const char* key : {"characteristic", "characteristic_length", "dls",
                                "dls_length", "dls_ratio", "most_general_dls"})
            row("explications", key, "", scalar_to_string(ex.at(key)));
        int index = 0;
        for (const auto& item : ex.at("most_general"))
            row("explications", "most_general", std::to_string(++index),
                item.get<std::string>());
        for (const char* key : {"cover_greedy", "cover_exact"}) {
            if (!ex.contains(key))
                continue;
            if (ex.at(key).is_null()) {
                row("explications", key, "", "");
                continue;
            }
            index = 0;
            for (const auto& item : ex.at(key))
                row("explications", key, std::to_string(++index), item.get<std::string>());
        }
    }

    if (report.contains("accountability")) {
        const auto& acc = report.at("accountability");
        for (const auto& [name, value] : acc.at("blame").items())
            row("blame", name, "", value.get<std::string>());
        if (acc.contains("interaction_blame"))
            for (const auto& entry : acc.at("interaction_blame"))
                row("interaction_blame", entry.at("pattern").get<std::string>(), "",
                    entry.at("blame").get<std::string>());
        if (acc.contains("per_instance"))
            for (const auto& entry : acc.at("per_instance"))
                for (const auto& [name, value] : entry.at("responsibility").items())
                    row("responsibility", entry.at("context").get<std::string>(), name,
                        value.get<std::string>());
    }

    if (report.contains("interactions")) {
        const auto& in = report.at("interactions");
        row("interactions", "min_support_size", "",
            scalar_to_string(in.at("min_support_size")));
        row("interactions", "necessary", "", in.at("necessary").get<bool>() ? "true" : "false");
        int index = 0;
        for (const auto& item : in.at("witnesses"))
            row("interactions", "witness", std::to_string(++index), item.get<std::string>());
    }
    return out.str();
}

} // namespace confcause
