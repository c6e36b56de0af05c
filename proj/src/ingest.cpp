#include <confcause/ingest.hpp>

#include <confcause/errors.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <unordered_set>

namespace confcause {

namespace {

// ---------------------------------------------------------------------------
// Expression parsing
// ---------------------------------------------------------------------------

enum class token_kind { ident, kw_true, kw_false, bang, amp, pipe, lparen, rparen,
                        arrow, iff, end };

struct token {
    token_kind kind;
    std::string text;
    int column; // 1-based
};

std::vector<token> tokenize(std::string_view text, int line)
{
    std::vector<token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        const int column = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            std::string word(text.substr(i, j - i));
            token_kind kind = word == "true"    ? token_kind::kw_true
                              : word == "false" ? token_kind::kw_false
                                                : token_kind::ident;
            out.push_back({kind, std::move(word), column});
            i = j;
            continue;
        }
        switch (c) {
        case '!':
            out.push_back({token_kind::bang, "!", column});
            ++i;
            continue;
        case '&':
            out.push_back({token_kind::amp, "&", column});
            ++i;
            continue;
        case '|':
            out.push_back({token_kind::pipe, "|", column});
            ++i;
            continue;
        case '(':
            out.push_back({token_kind::lparen, "(", column});
            ++i;
            continue;
        case ')':
            out.push_back({token_kind::rparen, ")", column});
            ++i;
            continue;
        case '-':
            if (i + 1 < text.size() && text[i + 1] == '>') {
                out.push_back({token_kind::arrow, "->", column});
                i += 2;
                continue;
            }
            throw parse_error("expected '->' after '-'", line, column);
        case '<':
            if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
                out.push_back({token_kind::iff, "<->", column});
                i += 3;
                continue;
            }
            throw parse_error("expected '<->' after '<'", line, column);
        default:
            throw parse_error(std::string("unexpected character '") + c + "'", line, column);
        }
    }
    out.push_back({token_kind::end, "", static_cast<int>(text.size()) + 1});
    return out;
}

// Raw syntax tree; implication/equivalence and general negation live only
// here and disappear during normalization.
struct enode {
    enum class kind { truth, falsity, var, neg, conj, disj, imp, iff };

    explicit enode(kind kk) : k(kk) {}

    kind k;
    int feature = -1;
    std::vector<enode> children;
};

class expr_parser {
public:
    expr_parser(std::vector<token> tokens, const feature_space& space, int line)
        : tokens_(std::move(tokens)), space_(space), line_(line)
    {
    }

    enode parse()
    {
        enode e = parse_iff();
        expect(token_kind::end, "unexpected trailing input");
        return e;
    }

private:
    const token& peek() const { return tokens_[pos_]; }
    token take() { return tokens_[pos_++]; }

    void expect(token_kind kind, const std::string& message)
    {
        if (peek().kind != kind)
            throw parse_error(message, line_, peek().column);
    }

    enode parse_iff()
    {
        enode left = parse_imp();
        while (peek().kind == token_kind::iff) {
            take();
            enode right = parse_imp();
            enode node{enode::kind::iff};
            node.children = {std::move(left), std::move(right)};
            left = std::move(node);
        }
        return left;
    }

    enode parse_imp()
    {
        enode left = parse_or();
        if (peek().kind == token_kind::arrow) {
            take();
            enode right = parse_imp(); // right-associative
            enode node{enode::kind::imp};
            node.children = {std::move(left), std::move(right)};
            return node;
        }
        return left;
    }

    enode parse_or()
    {
        enode left = parse_and();
        while (peek().kind == token_kind::pipe) {
            take();
            enode node{enode::kind::disj};
            node.children = {std::move(left), parse_and()};
            left = std::move(node);
        }
        return left;
    }

    enode parse_and()
    {
        enode left = parse_unary();
        while (peek().kind == token_kind::amp) {
            take();
            enode node{enode::kind::conj};
            node.children = {std::move(left), parse_unary()};
            left = std::move(node);
        }
        return left;
    }

    enode parse_unary()
    {
        if (peek().kind == token_kind::bang) {
            take();
            enode node{enode::kind::neg};
            node.children = {parse_unary()};
            return node;
        }
        return parse_atom();
    }

    enode parse_atom()
    {
        const token t = take();
        switch (t.kind) {
        case token_kind::kw_true:
            return enode{enode::kind::truth};
        case token_kind::kw_false:
            return enode{enode::kind::falsity};
        case token_kind::ident: {
            auto feature = space_.index_of(t.text);
            if (!feature)
                throw parse_error("unknown identifier '" + t.text + "'", line_, t.column);
            enode node{enode::kind::var};
            node.feature = *feature;
            return node;
        }
        case token_kind::lparen: {
            enode inner = parse_iff();
            expect(token_kind::rparen, "expected ')'");
            take();
            return inner;
        }
        default:
            throw parse_error("expected an expression", line_, t.column);
        }
    }

    std::vector<token> tokens_;
    std::size_t pos_ = 0;
    const feature_space& space_;
    int line_;
};

// Negation-normal form with constant folding; yields the five formula node
// kinds only.
formula normalize(const enode& e, bool negated)
{
    switch (e.k) {
    case enode::kind::truth:
        return negated ? formula::falsity() : formula::truth();
    case enode::kind::falsity:
        return negated ? formula::truth() : formula::falsity();
    case enode::kind::var:
        return formula::make_literal(e.feature, !negated);
    case enode::kind::neg:
        return normalize(e.children[0], !negated);
    case enode::kind::conj:
    case enode::kind::disj: {
        const bool conjunctive = (e.k == enode::kind::conj) != negated;
        std::vector<formula> children;
        for (const auto& child : e.children)
            children.push_back(normalize(child, negated));
        // Constant folding keeps the tree tidy; semantics only.
        std::vector<formula> kept;
        for (auto& child : children) {
            if (conjunctive && child.node_kind() == formula::kind::truth)
                continue;
            if (!conjunctive && child.node_kind() == formula::kind::falsity)
                continue;
            if (conjunctive && child.node_kind() == formula::kind::falsity)
                return formula::falsity();
            if (!conjunctive && child.node_kind() == formula::kind::truth)
                return formula::truth();
            kept.push_back(std::move(child));
        }
        return conjunctive ? formula::conjunction_of(std::move(kept))
                           : formula::disjunction_of(std::move(kept));
    }
    case enode::kind::imp: {
        // a -> b == !a | b
        enode rewritten{enode::kind::disj};
        enode na{enode::kind::neg};
        na.children = {e.children[0]};
        rewritten.children = {std::move(na), e.children[1]};
        return normalize(rewritten, negated);
    }
    case enode::kind::iff: {
        // a <-> b == (a -> b) & (b -> a)
        enode ab{enode::kind::imp};
        ab.children = {e.children[0], e.children[1]};
        enode ba{enode::kind::imp};
        ba.children = {e.children[1], e.children[0]};
        enode rewritten{enode::kind::conj};
        rewritten.children = {std::move(ab), std::move(ba)};
        return normalize(rewritten, negated);
    }
    }
    throw std::logic_error("unhandled expression node");
}

formula parse_expression_line(std::string_view text, const feature_space& space, int line)
{
    expr_parser parser(tokenize(text, line), space, line);
    return normalize(parser.parse(), false);
}

// ---------------------------------------------------------------------------
// Line utilities
// ---------------------------------------------------------------------------

struct source_line {
    std::string text;
    int number;
};

std::vector<source_line> logical_lines(std::string_view text)
{
    std::vector<source_line> out;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string line(text.substr(
            start, end == std::string_view::npos ? std::string_view::npos : end - start));
        ++number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        out.push_back({std::move(line), number});
        if (end == std::string_view::npos)
            break;
        start = end + 1;
    }
    return out;
}

bool blank(const std::string& s)
{
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

std::vector<std::string> split_words(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream stream(s);
    std::string word;
    while (stream >> word)
        out.push_back(word);
    return out;
}

// ---------------------------------------------------------------------------
// CSV (RFC 4180, header required)
// ---------------------------------------------------------------------------

std::vector<std::vector<std::string>> parse_csv(std::string_view text)
{
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool any = false;
    std::size_t i = 0;

    auto end_field = [&]() {
        record.push_back(std::move(field));
        field.clear();
    };
    auto end_record = [&]() {
        end_field();
        records.push_back(std::move(record));
        record.clear();
    };

    while (i < text.size()) {
        const char c = text[i];
        any = true;
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    i += 2;
                    continue;
                }
                quoted = false;
                ++i;
                continue;
            }
            field += c;
            ++i;
            continue;
        }
        switch (c) {
        case '"':
            if (!field.empty())
                throw error("CSV: stray quote inside an unquoted field");
            quoted = true;
            ++i;
            break;
        case ',':
            end_field();
            ++i;
            break;
        case '\r':
            ++i;
            break;
        case '\n':
            end_record();
            ++i;
            break;
        default:
            field += c;
            ++i;
            break;
        }
    }
    if (quoted)
        throw error("CSV: unterminated quoted field");
    if (any && (!field.empty() || !record.empty()))
        end_record();
    return records;
}

std::string trimmed(const std::string& s)
{
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

} // namespace

// ---------------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------------

model parse_model(std::string_view text)
{
    std::optional<feature_space> space;
    std::optional<config_set> valid;
    int valid_line = 0;

    for (const auto& line : logical_lines(text)) {
        if (blank(line.text))
            continue;
        const auto colon = line.text.find(':');
        if (colon == std::string::npos)
            throw parse_error("expected 'features:' or 'valid:'", line.number, 1);
        const std::string key = trimmed(line.text.substr(0, colon));
        const std::string rest = line.text.substr(colon + 1);
        if (key == "features") {
            if (space)
                throw parse_error("duplicate 'features:' line", line.number, 1);
            try {
                space = feature_space::create(split_words(rest));
            } catch (const error& e) {
                throw parse_error(e.what(), line.number, static_cast<int>(colon) + 2);
            }
        } else if (key == "valid") {
            if (!space)
                throw parse_error("'features:' must come before 'valid:'", line.number, 1);
            if (valid)
                throw parse_error("duplicate 'valid:' line", line.number, 1);
            valid = parse_expression_line(rest, *space, line.number).evaluate(*space);
            valid_line = line.number;
        } else {
            throw parse_error("unknown section '" + key + "'", line.number, 1);
        }
    }

    if (!space)
        throw error("model file has no 'features:' line");
    if (!valid)
        throw error("model file has no 'valid:' line");
    if (valid->is_empty())
        throw parse_error("the validity constraint admits no configuration",
                          valid_line, 1);
    return {*space, *valid};
}

formula parse_expression(std::string_view text, const feature_space& space)
{
    return parse_expression_line(text, space, 1);
}

config_set parse_config_list(std::string_view text, const feature_space& space)
{
    config_set out = config_set::empty(space);
    for (const auto& line : logical_lines(text)) {
        if (blank(line.text))
            continue;
        const auto words = split_words(line.text);
        std::uint64_t bits = 0;
        if (!(words.size() == 1 && words[0] == "-")) {
            for (const auto& word : words) {
                auto feature = space.index_of(word);
                if (!feature)
                    throw parse_error("unknown feature '" + word + "'", line.number, 1);
                const std::uint64_t bit = std::uint64_t{1} << *feature;
                if (bits & bit)
                    throw parse_error("duplicate feature '" + word + "' in one configuration",
                                      line.number, 1);
                bits |= bit;
            }
        }
        out = out | config_set::point(total_config(space, bits));
    }
    return out;
}

std::string render_config_list(const config_set& set)
{
    std::string out;
    for (const auto& config : set.enumerate()) {
        out += config.selected_names();
        out += '\n';
    }
    return out;
}

measurement_table::measurement_table(feature_space space, std::vector<std::string> metrics,
                                     std::vector<std::uint64_t> row_order,
                                     std::map<std::uint64_t, std::vector<rational>> rows)
    : space_(std::move(space)),
      metrics_(std::move(metrics)),
      row_order_(std::move(row_order)),
      rows_(std::move(rows))
{
}

bool measurement_table::has_metric(std::string_view name) const
{
    return std::find(metrics_.begin(), metrics_.end(), name) != metrics_.end();
}

const rational* measurement_table::value(std::uint64_t config_bits,
                                         std::string_view metric) const
{
    auto row = rows_.find(config_bits);
    if (row == rows_.end())
        return nullptr;
    auto it = std::find(metrics_.begin(), metrics_.end(), metric);
    if (it == metrics_.end())
        return nullptr;
    return &row->second[static_cast<std::size_t>(it - metrics_.begin())];
}

measurement_table load_measurements(std::string_view csv, const feature_space& space)
{
    const auto records = parse_csv(csv);
    if (records.empty())
        throw error("measurement CSV has no header row");

    const auto& header = records.front();
    std::vector<int> feature_of_column(header.size(), -1);
    std::vector<int> column_of_feature(static_cast<std::size_t>(space.size()), -1);
    std::vector<std::string> metrics;
    std::vector<std::size_t> metric_columns;
    std::unordered_set<std::string> seen_metrics;

    for (std::size_t c = 0; c < header.size(); ++c) {
        const std::string name = trimmed(header[c]);
        if (auto feature = space.index_of(name)) {
            if (column_of_feature[static_cast<std::size_t>(*feature)] != -1)
                throw error("duplicate feature column '" + name + "'");
            column_of_feature[static_cast<std::size_t>(*feature)] = static_cast<int>(c);
            feature_of_column[c] = *feature;
        } else {
            if (name.empty())
                throw error("measurement CSV has an unnamed column");
            if (!seen_metrics.insert(name).second)
                throw error("duplicate metric column '" + name + "'");
            metrics.push_back(name);
            metric_columns.push_back(c);
        }
    }
    for (int f = 0; f < space.size(); ++f)
        if (column_of_feature[static_cast<std::size_t>(f)] == -1)
            throw error("missing feature column '" + space.name(f) + "'");

    std::vector<std::uint64_t> row_order;
    std::map<std::uint64_t, std::vector<rational>> rows;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& record = records[r];
        if (record.size() == 1 && trimmed(record[0]).empty())
            continue;
        if (record.size() != header.size())
            throw error("row " + std::to_string(r + 1) + " has " +
                        std::to_string(record.size()) + " cells, header has " +
                        std::to_string(header.size()));
        std::uint64_t bits = 0;
        for (int f = 0; f < space.size(); ++f) {
            const std::string cell =
                trimmed(record[static_cast<std::size_t>(column_of_feature[f])]);
            if (cell == "1")
                bits |= std::uint64_t{1} << f;
            else if (cell != "0")
                throw error("row " + std::to_string(r + 1) + ": feature cell for '" +
                            space.name(f) + "' must be 0 or 1, got '" + cell + "'");
        }
        std::vector<rational> values;
        values.reserve(metric_columns.size());
        for (std::size_t m = 0; m < metric_columns.size(); ++m) {
            const std::string cell = trimmed(record[metric_columns[m]]);
            try {
                values.push_back(parse_decimal(cell));
            } catch (const error& e) {
                throw error("row " + std::to_string(r + 1) + ", metric '" + metrics[m] +
                            "': " + e.what());
            }
        }
        if (!rows.emplace(bits, std::move(values)).second)
            throw error("duplicate measurement row for configuration '" +
                        total_config(space, bits).selected_names() + "'");
        row_order.push_back(bits);
    }
    return measurement_table(space, std::move(metrics), std::move(row_order),
                             std::move(rows));
}

threshold_spec parse_threshold(std::string_view text)
{
    const auto words = split_words(std::string(text));
    if (words.size() != 3)
        throw error("threshold must be 'metric REL value', got '" + std::string(text) + "'");
    relation rel;
    if (words[1] == "<")
        rel = relation::less;
    else if (words[1] == "<=")
        rel = relation::less_equal;
    else if (words[1] == ">")
        rel = relation::greater;
    else if (words[1] == ">=")
        rel = relation::greater_equal;
    else if (words[1] == "=" || words[1] == "==")
        rel = relation::equal;
    else if (words[1] == "!=")
        rel = relation::not_equal;
    else
        throw error("unknown relation '" + words[1] + "'");
    return {words[0], rel, parse_decimal(words[2])};
}

namespace {

bool satisfies(const rational& value, relation rel, const rational& threshold)
{
    switch (rel) {
    case relation::less:
        return value < threshold;
    case relation::less_equal:
        return value <= threshold;
    case relation::greater:
        return value > threshold;
    case relation::greater_equal:
        return value >= threshold;
    case relation::equal:
        return value == threshold;
    case relation::not_equal:
        return value != threshold;
    }
    return false;
}

} // namespace

effect_result effect_set(const effect_spec& spec, const measurement_table* table,
                         const config_set& valid)
{
    const feature_space& space = valid.space();

    if (const auto* expr = std::get_if<formula>(&spec))
        return {expr->evaluate(space) & valid, {}};

    if (const auto* listed = std::get_if<config_set>(&spec)) {
        std::vector<std::string> warnings;
        const config_set outside = *listed - valid;
        if (!outside.is_empty())
            for (const auto& config : outside.enumerate())
                warnings.push_back("listed configuration '" + config.selected_names() +
                                   "' is not valid and was ignored");
        return {*listed & valid, std::move(warnings)};
    }

    const auto& threshold = std::get<threshold_spec>(spec);
    if (table == nullptr)
        throw error("threshold effects need a measurement table");
    if (!table->has_metric(threshold.metric))
        throw error("unknown metric '" + threshold.metric + "'");

    config_set rows = config_set::empty(space);
    config_set matching = config_set::empty(space);
    for (std::uint64_t bits : table->row_order()) {
        const total_config config(space, bits);
        if (!valid.contains(config))
            throw error("measured configuration '" + config.selected_names() +
                        "' is not valid");
        rows = rows | config_set::point(config);
        if (satisfies(*table->value(bits, threshold.metric), threshold.rel,
                      threshold.value))
            matching = matching | config_set::point(config);
    }
    if (!valid.is_subset_of(rows)) {
        const auto missing = (valid - rows).least();
        throw error("measurement table does not cover V: no row for '" +
                    missing->selected_names() + "'");
    }
    return {matching, {}};
}

std::vector<std::pair<total_config, rational>> load_weights(std::string_view csv,
                                                            const feature_space& space)
{
    const auto records = parse_csv(csv);
    if (records.empty())
        throw error("weight CSV has no header row");
    const auto& header = records.front();
    if (header.size() != 2 || trimmed(header[0]) != "config" || trimmed(header[1]) != "weight")
        throw error("weight CSV header must be 'config,weight'");

    std::vector<std::pair<total_config, rational>> out;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& record = records[r];
        if (record.size() == 1 && trimmed(record[0]).empty())
            continue;
        if (record.size() != 2)
            throw error("weight row " + std::to_string(r + 1) + " needs two cells");
        const auto words = split_words(record[0]);
        std::uint64_t bits = 0;
        if (!(words.size() == 1 && words[0] == "-")) {
            for (const auto& word : words) {
                auto feature = space.index_of(word);
                if (!feature)
                    throw error("weight row " + std::to_string(r + 1) +
                                ": unknown feature '" + word + "'");
                bits |= std::uint64_t{1} << *feature;
            }
        }
        out.emplace_back(total_config(space, bits), parse_rational(trimmed(record[1])));
    }
    return out;
}

} // namespace confcause
