// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits with the number of failed
// criteria.

#include <confcause/accountability.hpp>
#include <confcause/causes.hpp>
#include <confcause/errors.hpp>
#include <confcause/explications.hpp>
#include <confcause/ingest.hpp>
#include <confcause/interactions.hpp>
#include <confcause/primes.hpp>

#include <json.hpp>

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <sys/wait.h>
#include <vector>

using namespace confcause;
using nlohmann::json;

namespace {

std::string fixture_path(const std::string& name)
{
    return std::string(CONFCAUSE_FIXTURE_DIR) + "/" + name;
}

std::string read_file(const std::string& path)
{
    FILE* f = std::fopen(path.c_str(), "rb");
    if (!f)
        throw std::runtime_error("missing file " + path);
    std::string out;
    char buffer[4096];
    std::size_t n;
    while ((n = std::fread(buffer, 1, sizeof buffer, f)) > 0)
        out.append(buffer, n);
    std::fclose(f);
    return out;
}

struct cli_result {
    int exit_code;
    std::string output;
    double seconds;
};

cli_result run_cli(const std::string& args)
{
    const std::string command =
        std::string(CONFCAUSE_CLI_PATH) + " " + args + " 2>/dev/null";
    const auto started = std::chrono::steady_clock::now();
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("popen failed");
    std::string output;
    char buffer[8192];
    std::size_t n;
    while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
        output.append(buffer, n);
    const int status = pclose(pipe);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(output), seconds};
}

class criterion_runner {
public:
    void run(int number, const std::string& title,
             const std::function<void(criterion_runner&)>& body)
    {
        notes_.clear();
        try {
            body(*this);
        } catch (const std::exception& e) {
            notes_.push_back(std::string("exception: ") + e.what());
        }
        const bool passed = notes_.empty();
        std::printf("[%s] criterion %2d: %s\n", passed ? "PASS" : "FAIL", number,
                    title.c_str());
        for (const auto& note : notes_)
            std::printf("        %s\n", note.c_str());
        if (!passed)
            ++failed_;
    }

    void expect(bool condition, const std::string& what)
    {
        if (!condition)
            notes_.push_back(what);
    }

    template <typename A, typename B>
    void expect_eq(const A& actual, const B& expected, const std::string& what)
    {
        std::ostringstream actual_s;
        actual_s << actual;
        std::ostringstream expected_s;
        expected_s << expected;
        expect(actual_s.str() == expected_s.str(),
               what + ": expected " + expected_s.str() + ", got " + actual_s.str());
    }

    int failed() const { return failed_; }

private:
    std::vector<std::string> notes_;
    int failed_ = 0;
};

feature_space small_space(int n)
{
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back("x" + std::to_string(i));
    return feature_space::create(names);
}

config_set random_subset(const feature_space& space, std::mt19937_64& rng,
                         double density)
{
    std::bernoulli_distribution keep(density);
    config_set out = config_set::empty(space);
    const std::uint64_t total = std::uint64_t{1} << space.size();
    for (std::uint64_t bits = 0; bits < total; ++bits)
        if (keep(rng))
            out = out | config_set::point(total_config(space, bits));
    return out;
}

formula random_dnf(const feature_space& space, std::mt19937_64& rng)
{
    const int cube_count = 1 + static_cast<int>(rng() % 6);
    std::vector<formula> cubes;
    for (int i = 0; i < cube_count; ++i) {
        std::vector<formula> lits;
        for (int f = 0; f < space.size(); ++f) {
            switch (rng() % 3) {
            case 0:
                break;
            case 1:
                lits.push_back(formula::make_literal(f, false));
                break;
            default:
                lits.push_back(formula::make_literal(f, true));
                break;
            }
        }
        if (lits.empty())
            lits.push_back(
                formula::make_literal(static_cast<int>(rng() % space.size()), true));
        cubes.push_back(formula::conjunction_of(std::move(lits)));
    }
    return formula::disjunction_of(std::move(cubes));
}

// Random analysis instance; V alternates between explicit random subsets and
// random-expression denotations.
analysis_session random_session(int features, std::mt19937_64& rng, bool via_expression)
{
    const feature_space space = small_space(features);
    config_set valid = config_set::empty(space);
    while (valid.is_empty())
        valid = via_expression ? random_dnf(space, rng).evaluate(space)
                               : random_subset(space, rng, 0.5);
    std::bernoulli_distribution keep(0.5);
    config_set effect = config_set::empty(space);
    for (const auto& config : valid.enumerate())
        if (keep(rng))
            effect = effect | config_set::point(config);
    return analysis_session(valid, effect);
}

partial_config random_partial(const feature_space& space, std::mt19937_64& rng)
{
    partial_config p(space);
    for (int f = 0; f < space.size(); ++f) {
        switch (rng() % 3) {
        case 0:
            break;
        case 1:
            p = p.with(f, false);
            break;
        default:
            p = p.with(f, true);
            break;
        }
    }
    return p;
}

std::vector<partial_config> witnesses_by_definition(const analysis_session& session)
{
    const int n = session.space().size();
    std::vector<std::vector<partial_config>> sufficient_by_size(
        static_cast<std::size_t>(n) + 1);
    auto sweep = [&](auto&& self, const partial_config& p, int next) -> void {
        if (next == n) {
            if (is_sufficient(p, session))
                sufficient_by_size[static_cast<std::size_t>(p.support_size())]
                    .push_back(p);
            return;
        }
        self(self, p, next + 1);
        self(self, p.with(next, false), next + 1);
        self(self, p.with(next, true), next + 1);
    };
    sweep(sweep, partial_config(session.space()), 0);
    for (auto& bucket : sufficient_by_size)
        if (!bucket.empty())
            return bucket;
    return {};
}

std::vector<partial_config> canonical_cubes(const formula& dnf,
                                            const feature_space& space)
{
    auto cubes = dnf_cubes(dnf, space);
    std::sort(cubes.begin(), cubes.end(), partial_config::canonical_less);
    return cubes;
}

analysis_session email_session()
{
    const model m = parse_model(read_file(fixture_path("email.fm")));
    const measurement_table table =
        load_measurements(read_file(fixture_path("email_measurements.csv")), m.space);
    const auto effect =
        effect_set(parse_threshold("decipher_years > 0.25"), &table, m.valid);
    return analysis_session(m.valid, effect.set);
}

analysis_session majority_session()
{
    const feature_space space = small_space(11);
    config_set at_least_six = config_set::empty(space);
    for (std::uint64_t bits = 0; bits < (1u << 11); ++bits)
        if (std::popcount(bits) >= 6)
            at_least_six = at_least_six | config_set::point(total_config(space, bits));
    return analysis_session(config_set::universe(space), at_least_six);
}

void criterion_email_golden(criterion_runner& c)
{
    const auto cli = run_cli("explicate --model " + fixture_path("email.fm") +
                             " --measurements " + fixture_path("email_measurements.csv") +
                             " --threshold \"decipher_years > 0.25\" --format json");
    c.expect_eq(cli.exit_code, 0, "CLI exit code");
    c.expect(cli.seconds < 1.0,
             "runtime " + std::to_string(cli.seconds) + "s exceeds 1s");
    const json report = json::parse(cli.output);
    c.expect(report["causes"]["items"] == json::array({"a", "r", "e & !c"}),
             "cause list mismatch: " + report["causes"]["items"].dump());
    c.expect(report["explications"]["cover_exact"] == json::array({"e & !c"}),
             "exact cover mismatch: " + report["explications"]["cover_exact"].dump());
    c.expect_eq(report["explications"]["cover_exact_size"].dump(), "1",
                "exact cover cardinality");

    const auto session = email_session();
    const auto primes =
        prime_implicants(session.valid().complement() | session.effect());
    c.expect_eq(primes.size(), 5, "prime count");
    std::vector<std::string> filtered;
    for (const auto& p : primes)
        if ((semantics(p) & session.effect()).is_empty())
            filtered.push_back(p.render());
    c.expect(filtered == std::vector<std::string>{"!m", "!e & c"},
             "filtered primes mismatch");
}

void criterion_email_blame(criterion_runner& c)
{
    const auto session = email_session();
    const auto uniform = distribution::uniform_over_effects(session);
    const std::vector<std::pair<std::string, rational>> expected = {
        {"e", rational(1, 2)}, {"c", rational(1, 2)}, {"a", rational(3, 8)},
        {"r", rational(3, 8)}, {"m", rational(0)},    {"s", rational(0)},
    };
    for (const auto& [name, value] : expected) {
        const rational actual =
            blame(*session.space().index_of(name), uniform, session);
        c.expect(actual == value, "blame(" + name + "): expected " +
                                      to_fraction_string(value) + ", got " +
                                      to_fraction_string(actual));
    }
}

void criterion_majority(criterion_runner& c)
{
    const auto started = std::chrono::steady_clock::now();
    const auto session = majority_session();
    c.expect_eq(session.valid().count(), 2048, "|V|");

    const total_config all_active(session.space(), (1u << 11) - 1);
    for (int f = 0; f < 11; ++f)
        if (responsibility(f, all_active, session) != rational(1, 6)) {
            c.expect(false, "resp(f" + std::to_string(f) + ", all-active) != 1/6");
            break;
        }

    for (std::uint64_t bits = 0; bits < (1u << 11); ++bits) {
        if (std::popcount(bits) != 6)
            continue;
        const total_config context(session.space(), bits);
        for (int f = 0; f < 11; ++f) {
            const rational r = responsibility(f, context, session);
            const bool active = (bits >> f) & 1;
            if (active && r != 1) {
                c.expect(false, "active feature not fully responsible at " +
                                    context.selected_names());
                return;
            }
            if (!active && r != 0) {
                c.expect(false, "inactive feature has responsibility at " +
                                    context.selected_names());
                return;
            }
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    c.expect(seconds < 30.0, "runtime " + std::to_string(seconds) + "s exceeds 30s");
}

void criterion_cause_oracle(criterion_runner& c)
{
    std::mt19937_64 rng(1001);
    int agreements = 0;
    for (int round = 0; round < 200; ++round) {
        const int features = 3 + static_cast<int>(rng() % 8); // up to 10
        const auto session = random_session(features, rng, round % 2 == 0);
        if (compute_causes(session) == compute_causes_naive(session)) {
            ++agreements;
        } else {
            c.expect(false, "disagreement on session " + std::to_string(round));
            return;
        }
    }
    c.expect_eq(agreements, 200, "agreement count");
}

void criterion_prime_oracle(criterion_runner& c)
{
    std::mt19937_64 rng(1002);
    for (int round = 0; round < 200; ++round) {
        const int features = 3 + static_cast<int>(rng() % 6); // up to 8
        const feature_space space = small_space(features);
        const config_set t = random_subset(space, rng, 0.4);
        if (!(prime_implicants(t) == prime_implicants_brute(t))) {
            c.expect(false, "prime disagreement on set " + std::to_string(round));
            return;
        }
    }
}

void criterion_lemma_equivalence(criterion_runner& c)
{
    std::mt19937_64 rng(1003);
    for (int round = 0; round < 1000; ++round) {
        const int features = 3 + static_cast<int>(rng() % 8); // up to 10
        const auto session = random_session(features, rng, false);
        const partial_config p = random_partial(session.space(), rng);
        const config_set target = session.valid().complement() | session.effect();
        const bool via_definition = is_sufficient(p, session);
        const bool via_lemma =
            is_implicant(p, target) && !(semantics(p) & session.effect()).is_empty();
        if (via_definition != via_lemma) {
            c.expect(false, "FC1/implicant mismatch at round " + std::to_string(round));
            return;
        }
    }
}

void criterion_dls(criterion_runner& c)
{
    std::mt19937_64 rng(1004);
    for (int round = 0; round < 500; ++round) {
        const feature_space space = small_space(3 + static_cast<int>(rng() % 5));
        const formula dnf = random_dnf(space, rng);
        const formula simplified = dls_simplify(dnf);
        if (!(simplified.evaluate(space) == dnf.evaluate(space))) {
            c.expect(false, "semantics changed at round " + std::to_string(round));
            return;
        }
        if (simplified.length() > dnf.length()) {
            c.expect(false, "length grew at round " + std::to_string(round));
            return;
        }
        if (!(canonical_cubes(dls_expand(simplified), space) ==
              canonical_cubes(dnf, space))) {
            c.expect(false, "cube set not restored at round " + std::to_string(round));
            return;
        }
    }

    const model pump = parse_model(read_file(fixture_path("minepump.fm")));
    const formula effect_expr = parse_expression(
        read_file(fixture_path("minepump_effect.expr")), pump.space);
    const analysis_session session(pump.valid,
                                   effect_expr.evaluate(pump.space) & pump.valid);
    const cause_set mgc = most_general_causes(session);
    c.expect_eq(mgc.size(), 3, "most-general cause count");
    const formula dls = dls_simplify(characteristic_formula(mgc));
    c.expect_eq(dls.render(pump.space), "High & Start & (Stop | Low | MethaneAlarm)",
                "most-general DLS");
}

void criterion_witness_correspondence(criterion_runner& c)
{
    std::mt19937_64 rng(1001); // same instance family as the cause-oracle gate
    for (int round = 0; round < 200; ++round) {
        const int features = 3 + static_cast<int>(rng() % 8);
        const auto session = random_session(features, rng, round % 2 == 0);
        const auto by_definition = witnesses_by_definition(session);
        if (session.causes().empty()) {
            if (!by_definition.empty()) {
                c.expect(false, "witnesses without causes at round " +
                                    std::to_string(round));
                return;
            }
            continue;
        }
        const auto listed = tway_witnesses(session);
        if (!(listed.witnesses == cause_set(by_definition))) {
            c.expect(false, "witness sets differ at round " + std::to_string(round));
            return;
        }
        for (const auto& w : listed.witnesses)
            if (!is_tway_witness(w, session)) {
                c.expect(false, "minimal cause fails the direct check at round " +
                                    std::to_string(round));
                return;
            }
    }
}

void criterion_covers(criterion_runner& c)
{
    std::mt19937_64 rng(1005);
    int effective = 0;
    int round = 0;
    while (effective < 100 && round < 1000) {
        ++round;
        const auto session = random_session(3 + static_cast<int>(rng() % 5), rng, false);
        if (session.effect().is_empty())
            continue;
        ++effective;
        const cause_set mgc = most_general_causes(session);
        const cause_set greedy = cause_effect_cover(session, cover_strategy::greedy);
        if (!is_cover(mgc, session) || !is_cover(greedy, session)) {
            c.expect(false, "cover property violated at round " + std::to_string(round));
            return;
        }
        if (session.causes().size() <= 24) {
            const cause_set exact = cause_effect_cover(session, cover_strategy::exact);
            if (!is_cover(exact, session) || exact.size() > greedy.size()) {
                c.expect(false, "exact cover worse than greedy at round " +
                                    std::to_string(round));
                return;
            }
        }
    }
    c.expect(effective >= 100, "too few non-empty instances");

    const auto email = email_session();
    c.expect_eq(cause_effect_cover(email, cover_strategy::exact).size(), 1,
                "email exact cover cardinality");
}

void criterion_scalability(criterion_runner& c)
{
    const auto cli = run_cli("report --model " + fixture_path("scale20.fm") +
                             " --effect-expr \"f01 & f03 & f04 & (f05 | f06 & f07)\""
                             " --format json");
    c.expect_eq(cli.exit_code, 0, "CLI exit code");
    c.expect(cli.seconds < 60.0,
             "runtime " + std::to_string(cli.seconds) + "s exceeds 60s");
    const json report = json::parse(cli.output);
    c.expect(report["model"]["valid_count"].get<std::uint64_t>() >= 100000,
             "|V| below 1e5");
    c.expect(report.contains("causes") && report.contains("explications") &&
                 report.contains("accountability") && report.contains("interactions"),
             "missing report sections");
}

} // namespace

int main()
{
    criterion_runner runner;
    runner.run(1, "email golden analysis (causes, primes, exact cover, < 1 s)",
               criterion_email_golden);
    runner.run(2, "email blame table under the uniform effect distribution",
               criterion_email_blame);
    runner.run(3, "majority responsibility values (exact rationals, < 30 s)",
               criterion_majority);
    runner.run(4, "cause computation agrees with the naive oracle (200 sessions)",
               criterion_cause_oracle);
    runner.run(5, "prime computation agrees with the brute oracle (200 sets)",
               criterion_prime_oracle);
    runner.run(6, "sufficiency/implicant equivalence (1000 samples)",
               criterion_lemma_equivalence);
    runner.run(7, "DLS contract on 500 random DNFs plus the pump fixture",
               criterion_dls);
    runner.run(8, "interaction witnesses match the direct definition (200 sessions)",
               criterion_witness_correspondence);
    runner.run(9, "cover properties (most-general, greedy, exact)", criterion_covers);
    runner.run(10, "20-feature scalability report (< 60 s)", criterion_scalability);

    if (runner.failed() == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", runner.failed());
    return runner.failed();
}
