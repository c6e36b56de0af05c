#include "support.hpp"

#include <confcause/errors.hpp>

#include <doctest.h>

using namespace confcause;
using testsupport::email_fixture;
using testsupport::read_fixture;

TEST_CASE("model parsing")
{
    const model email = parse_model(read_fixture("email.fm"));
    CHECK(email.space.names() ==
          std::vector<std::string>{"m", "s", "e", "c", "a", "r"});
    CHECK(email.valid.count() == 8);

    const model tiny = parse_model("features: x\nvalid: true\n");
    CHECK(tiny.valid.count() == 2);

    CHECK_THROWS_WITH_AS(parse_model("features: x\nvalid: x & !x\n"),
                         doctest::Contains("admits no configuration"), parse_error);
    CHECK_THROWS_AS(parse_model("features: x\nvalid: x &\n"), parse_error);
    CHECK_THROWS_WITH_AS(parse_model("features: x\nvalid: y\n"),
                         doctest::Contains("unknown identifier"), parse_error);
    CHECK_THROWS_AS(parse_model("valid: x\nfeatures: x\n"), parse_error);
    CHECK_THROWS_AS(parse_model("features: x y x\nvalid: x\n"), parse_error);
    CHECK_THROWS_AS(parse_model("features: x\n"), error);
    CHECK_THROWS_AS(parse_model("features: x\nvalid: x\nvalid: x\n"), parse_error);
    CHECK_THROWS_AS(parse_model(""), error);

    // Positions are reported 1-based.
    try {
        parse_model("features: a b\nvalid: a & (b\n");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() > 1);
    }

    // CRLF and comments are accepted.
    const model crlf = parse_model("# header\r\nfeatures: x y # trailing\r\nvalid: x | y\r\n");
    CHECK(crlf.valid.count() == 3);

    // The engine limit surfaces as a positioned error.
    std::string many = "features:";
    for (int i = 0; i < 65; ++i)
        many += " f" + std::to_string(i);
    many += "\nvalid: true\n";
    CHECK_THROWS_WITH_AS(parse_model(many), doctest::Contains("64-feature"),
                         parse_error);
}

TEST_CASE("expression parsing")
{
    const email_fixture email;
    const auto& space = email.m.space;

    const formula f = parse_expression("e & !c", space);
    REQUIRE(f.node_kind() == formula::kind::conjunction);
    REQUIRE(f.children().size() == 2);
    CHECK(f.children()[0].node_kind() == formula::kind::literal);
    CHECK(f.children()[0].positive());
    CHECK(!f.children()[1].positive());
    CHECK(f.render(space) == "e & !c");

    // Implication and equivalence desugar; negation lands on literals.
    CHECK(parse_expression("a -> r", space).evaluate(space) ==
          parse_expression("!a | r", space).evaluate(space));
    CHECK(parse_expression("a <-> r", space).evaluate(space) ==
          parse_expression("(a -> r) & (r -> a)", space).evaluate(space));
    CHECK(parse_expression("!(a | r)", space).render(space) == "!a & !r");
    CHECK(parse_expression("!!a", space).render(space) == "a");
    CHECK(parse_expression("!true", space).render(space) == "false");
    CHECK(parse_expression("a & true", space).render(space) == "a");

    // Precedence: ! > & > |, implication is right-associative.
    CHECK(parse_expression("a | r & s", space).evaluate(space) ==
          parse_expression("a | (r & s)", space).evaluate(space));
    CHECK(parse_expression("a -> r -> s", space).evaluate(space) ==
          parse_expression("a -> (r -> s)", space).evaluate(space));

    CHECK_THROWS_AS(parse_expression("a &", space), parse_error);
    CHECK_THROWS_AS(parse_expression("(a", space), parse_error);
    CHECK_THROWS_AS(parse_expression("a b", space), parse_error);
    CHECK_THROWS_AS(parse_expression("a < b", space), parse_error);
}

TEST_CASE("config lists")
{
    const email_fixture email;
    const auto& space = email.m.space;

    const config_set single = parse_config_list("m e a\n", space);
    CHECK(single.count() == 1);
    CHECK(single.contains(email.config("mea")));

    const config_set with_empty = parse_config_list("-\nm\n", space);
    CHECK(with_empty.count() == 2);
    CHECK(with_empty.contains(total_config(space, 0)));

    CHECK_THROWS_WITH_AS(parse_config_list("m m\n", space),
                         doctest::Contains("duplicate feature"), parse_error);
    CHECK_THROWS_WITH_AS(parse_config_list("m zz\n", space),
                         doctest::Contains("unknown feature"), parse_error);

    // (a | r) restricted to V is the effect set of the running example.
    const config_set from_expr =
        parse_expression("a | r", space).evaluate(space) & email.m.valid;
    CHECK(from_expr == email.effects);

    // Round trip through the textual form.
    CHECK(parse_config_list(render_config_list(email.m.valid), space) == email.m.valid);
    CHECK(parse_config_list(render_config_list(email.effects), space) == email.effects);
}

TEST_CASE("measurement tables")
{
    const email_fixture email;
    const auto& space = email.m.space;
    const measurement_table table =
        load_measurements(read_fixture("email_measurements.csv"), space);

    CHECK(table.row_count() == 8);
    CHECK(table.has_metric("decipher_years"));
    CHECK(*table.value(email.config("mea").bits(), "decipher_years") == 1);
    CHECK(*table.value(email.config("mer").bits(), "decipher_years") == 2);
    CHECK(*table.value(email.config("mec").bits(), "decipher_years") ==
          rational(1, 10000000));
    CHECK(*table.value(email.config("m").bits(), "decipher_years") == 0);

    const measurement_table empty =
        load_measurements("m,s,e,c,a,r,decipher_years\n", space);
    CHECK(empty.row_count() == 0);

    CHECK_THROWS_WITH_AS(
        load_measurements("m,s,e,c,a,r,v\n1,0,0,0,0,0,1\n1,0,0,0,0,0,2\n", space),
        doctest::Contains("duplicate measurement row"), error);
    CHECK_THROWS_WITH_AS(load_measurements("m,s,e,c,a,v\n", space),
                         doctest::Contains("missing feature column"), error);
    CHECK_THROWS_WITH_AS(
        load_measurements("m,s,e,c,a,r,v\n2,0,0,0,0,0,1\n", space),
        doctest::Contains("must be 0 or 1"), error);
    CHECK_THROWS_AS(load_measurements("m,s,e,c,a,r,v\n1,0,0,0,0,0,abc\n", space),
                    error);
    CHECK_THROWS_AS(load_measurements("", space), error);
}

TEST_CASE("threshold parsing")
{
    const threshold_spec spec = parse_threshold("decipher_years > 0.25");
    CHECK(spec.metric == "decipher_years");
    CHECK(spec.rel == relation::greater);
    CHECK(spec.value == rational(1, 4));

    CHECK_THROWS_AS(parse_threshold("decipher_years >"), error);
    CHECK_THROWS_AS(parse_threshold("decipher_years ~ 1"), error);
    CHECK_THROWS_AS(parse_threshold("a b c d"), error);
}

TEST_CASE("effect sets")
{
    const email_fixture email;
    const auto& space = email.m.space;
    const measurement_table table =
        load_measurements(read_fixture("email_measurements.csv"), space);

    const auto by_threshold = effect_set(parse_threshold("decipher_years > 0.25"),
                                         &table, email.m.valid);
    CHECK(by_threshold.set == email.effects);
    CHECK(by_threshold.warnings.empty());

    const auto everything = effect_set(parse_threshold("decipher_years >= 0"),
                                       &table, email.m.valid);
    CHECK(everything.set == email.m.valid);

    const auto nothing =
        effect_set(parse_expression("false", space), nullptr, email.m.valid);
    CHECK(nothing.set.is_empty());

    // Listed configurations outside V are dropped with a warning.
    const auto listed = effect_set(parse_config_list("m e a\ne c\n", space), nullptr,
                                   email.m.valid);
    CHECK(listed.set.count() == 1);
    REQUIRE(listed.warnings.size() == 1);
    CHECK(listed.warnings[0].find("not valid") != std::string::npos);

    // Threshold tables must cover V exactly.
    const measurement_table partial_table = load_measurements(
        "m,s,e,c,a,r,decipher_years\n1,0,0,0,0,0,0\n", space);
    CHECK_THROWS_WITH_AS(effect_set(parse_threshold("decipher_years > 0"),
                                    &partial_table, email.m.valid),
                         doctest::Contains("does not cover V"), error);

    const measurement_table invalid_row = load_measurements(
        "m,s,e,c,a,r,decipher_years\n0,0,0,0,0,0,0\n", space);
    CHECK_THROWS_WITH_AS(effect_set(parse_threshold("decipher_years > 0"),
                                    &invalid_row, email.m.valid),
                         doctest::Contains("not valid"), error);

    CHECK_THROWS_WITH_AS(effect_set(parse_threshold("no_such_metric > 0"), &table,
                                    email.m.valid),
                         doctest::Contains("unknown metric"), error);
    CHECK_THROWS_AS(effect_set(parse_threshold("decipher_years > 0"), nullptr,
                               email.m.valid),
                    error);
}

TEST_CASE("weight tables")
{
    const email_fixture email;
    const auto weights = load_weights(read_fixture("weights_email.csv"), email.m.space);
    REQUIRE(weights.size() == 4);
    CHECK(weights[0].first == email.config("mea"));
    CHECK(weights[0].second == rational(1, 2));
    CHECK(weights[2].second == rational(1, 8));

    CHECK_THROWS_WITH_AS(load_weights("wrong,header\n", email.m.space),
                         doctest::Contains("config,weight"), error);
    CHECK_THROWS_WITH_AS(load_weights("config,weight\nzz,1\n", email.m.space),
                         doctest::Contains("unknown feature"), error);
}
