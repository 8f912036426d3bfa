#include <doctest.h>

#include <json.hpp>

#include "cli_harness.hpp"
#include "support.hpp"
#include "ufa/parse.hpp"

using namespace ufa;
using nlohmann::json;

namespace {

test::SchemaChecker& schema() {
    static test::SchemaChecker checker(std::getenv("UFA_SCHEMA")
                                           ? std::getenv("UFA_SCHEMA")
                                           : "share/ufa-output.schema.json");
    return checker;
}

json run_json(const std::string& args, int expected_code = 0) {
    auto res = test::run_cli(args);
    REQUIRE_MESSAGE(res.exit_code == expected_code, res.output);
    json doc = json::parse(res.output);
    schema().validate_by_command(doc);
    return doc;
}

}  // namespace

TEST_CASE("divide emits the worked quotient and remainder") {
    json doc = run_json("divide --f \"x^3 + a2*x^2 + a1*x + a0\" --g \"x^2 + b1*x + b0\" --json");
    auto t = make_table({{"a0", Block::Coefficient},
                         {"a1", Block::Coefficient},
                         {"a2", Block::Coefficient},
                         {"b0", Block::Factor},
                         {"b1", Block::Factor}});
    CHECK(parse_unipoly(doc["quotient"], t) == parse_unipoly("x + a2 - b1", t));
    CHECK(parse_unipoly(doc["remainder"], t) ==
          parse_unipoly("(a1 - b0 - a2*b1 + b1^2)*x + (a0 - a2*b0 + b0*b1)", t));
}

TEST_CASE("ufa and groebner report the cubic algebra") {
    json doc = run_json("ufa --f \"x^3 + a2*x^2 + a1*x + a0\" --k 2 --json");
    CHECK(doc["algebra"]["generators"].size() == 2);

    json gdoc = run_json("groebner --f \"x^3 + a2*x^2 + a1*x + a0\" --k 2 --json");
    CHECK(gdoc["algebra"]["groebner_basis"].size() == 3);
    CHECK(gdoc["algebra"]["dimension"] == 3);
    CHECK(gdoc["algebra"]["standard_monomials"] == json::array({"1", "b0", "b1"}));
    CHECK(gdoc["algebra"]["zero_ring"] == false);
}

TEST_CASE("dim agrees with the binomial formula") {
    json doc = run_json("dim --f \"x^4 - 3*x + 1\" --k 2 --json");
    CHECK(doc["dimension"] == 6);
    CHECK(doc["binomial"] == 6);
    CHECK(doc["match"] == true);
}

TEST_CASE("check-dim is deterministic under a fixed seed") {
    json a = run_json("check-dim --max-deg 3 --trials 3 --seed 42 --json");
    json b = run_json("check-dim --max-deg 3 --trials 3 --seed 42 --json");
    CHECK(a == b);
    CHECK(a["all_ok"] == true);
    CHECK(a["seed"] == 42);

    // The UFA_SEED environment variable supplies the default seed.
    auto res1 = test::run_command("UFA_SEED=7 " + test::cli_path_from_env() +
                                  " check-dim --max-deg 3 --trials 3 --json");
    auto res2 = test::run_command("UFA_SEED=7 " + test::cli_path_from_env() +
                                  " check-dim --max-deg 3 --trials 3 --json");
    REQUIRE(res1.exit_code == 0);
    CHECK(res1.output == res2.output);
    CHECK(json::parse(res1.output)["seed"] == 7);
}

TEST_CASE("check-valuation sweep") {
    json doc = run_json("check-valuation --max 200 --json");
    CHECK(doc["all_hold"] == true);
    CHECK(doc["failures"].empty());
}

TEST_CASE("s1s2 reports equal dimensions") {
    json doc = run_json("s1s2 --f \"x^3 - 2*x^2 + 3*x - 5\" --k 2 --json");
    CHECK(doc["dim_s1"] == 6);
    CHECK(doc["dim_s2"] == 6);
    CHECK(doc["equal"] == true);
}

TEST_CASE("factor and decompose") {
    json doc = run_json("factor --f \"x^4 - 1\" --json");
    REQUIRE(doc["factors"].size() == 3);
    CHECK(doc["factors"][2]["poly"] == "x^2 + 1");

    json ddoc = run_json("decompose --f \"(x^2 + 1)*(x - 1)\" --json");
    CHECK(ddoc["total_dimension"] == 3);
    REQUIRE(ddoc["locals"].size() == 2);
    CHECK(ddoc["locals"][0]["dimension"] == 1);
    CHECK(ddoc["locals"][1]["dimension"] == 2);
}

TEST_CASE("numeric subcommands") {
    auto res = test::run_cli("csqrt 3 4");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "2+1i\n");
    json doc = run_json("csqrt 3 4 --json");
    CHECK(doc["root"]["re"] == 2.0);
    CHECK(doc["root"]["im"] == 1.0);

    json qdoc = run_json("quadroots 0 0 1 0 --json");
    CHECK(qdoc["max_residual"].get<double>() <= 1e-12);

    json odoc = run_json("oddroot --f \"x^3 - 2\" --json");
    CHECK(std::fabs(odoc["root"].get<double>() - 1.2599210498948732) <= 1e-9);
}

TEST_CASE("demo-cubic matches the golden transcript byte for byte") {
    const char* dir = std::getenv("UFA_GOLDEN_DIR");
    REQUIRE(dir != nullptr);
    auto res = test::run_cli("demo-cubic");
    REQUIRE(res.exit_code == 0);
    CHECK(res.output == test::read_file(std::string(dir) + "/demo_cubic.txt"));

    json doc = run_json("demo-cubic --json");
    CHECK(doc["dimension"] == 3);
    CHECK(doc["shortcut"]["x2_equals_minus_generator"] == true);
    CHECK(doc["shortcut"]["normal_form"] == "0");
}

TEST_CASE("exit codes: 1 for domain errors, 2 for usage errors") {
    CHECK(test::run_cli("divide --f \"x^2\" --g \"2*x + 1\" --json").exit_code == 1);
    CHECK(test::run_cli("divide --f \"x^^2\" --g \"x\"").exit_code == 1);
    CHECK(test::run_cli("divide --f \"x + q\" --g \"x\"").exit_code == 1);
    CHECK(test::run_cli("factor --f \"x^9 + 1\"").exit_code == 1);
    CHECK(test::run_cli("s1s2 --f \"x^2 + 1\" --k 5").exit_code == 1);

    CHECK(test::run_cli("divide --f \"x\"").exit_code == 2);      // missing --g
    CHECK(test::run_cli("no-such-command").exit_code == 2);
    CHECK(test::run_cli("").exit_code == 2);                       // subcommand required
    CHECK(test::run_cli("--help").exit_code == 0);
}

TEST_CASE("--vars declares extra variables") {
    auto res = test::run_cli("divide --f \"x^2 + c\" --g \"x\" --vars c:coeff --json");
    CHECK(res.exit_code == 0);
    json doc = json::parse(res.output);
    CHECK(doc["remainder"] == "c");
}
