#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "coha/cli.hpp"
#include "coha/relations.hpp"

using namespace coha;
using coha::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::ordered_json without_timing(nlohmann::ordered_json j) {
    if (j.is_array())
        for (auto& item : j) item.erase("elapsed_ms");
    else
        j.erase("elapsed_ms");
    return j;
}

}  // namespace

TEST_CASE("verify exit codes") {
    CHECK(invoke({"verify", "serre", "--n", "3"}).code == cli::kPass);
    CHECK(invoke({"verify", "clifford", "--n", "4"}).code == cli::kPass);
    CHECK(invoke({"verify", "serre", "--n", "0"}).code == cli::kUsage);
    CHECK(invoke({"verify", "nonsense", "--n", "3"}).code == cli::kUsage);
    CHECK(invoke({"verify", "serre"}).code == cli::kUsage);
    CHECK(invoke({"verify", "serre", "--n", "3", "--format", "xml"}).code == cli::kUsage);
    CHECK(invoke({"verify", "serre", "--n", "3", "--jobs", "zero"}).code == cli::kUsage);
    CHECK(invoke({"verify", "serre", "--n", "3", "--jobs", "auto"}).code == cli::kPass);
    CHECK(invoke({}).code == cli::kUsage);
}

TEST_CASE("size caps") {
    const auto capped = invoke({"verify", "serre", "--n", "9"});
    CHECK(capped.code == cli::kUsage);
    CHECK(capped.err.find("COHA_MAX_N") != std::string::npos);
    CHECK(cli::max_n("clifford") == 12);
    ::setenv("COHA_MAX_N", "2", 1);
    CHECK(cli::max_n("clifford") == 2);
    CHECK(invoke({"verify", "clifford", "--n", "3"}).code == cli::kUsage);
    ::unsetenv("COHA_MAX_N");
    CHECK(invoke({"verify", "clifford", "--n", "3"}).code == cli::kPass);
}

TEST_CASE("json report schema") {
    const auto r = invoke({"verify", "lemma-actions", "--n", "3", "--format", "json"});
    REQUIRE(r.code == cli::kPass);
    const auto j = nlohmann::ordered_json::parse(r.out);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"check", "n", "status", "relations_checked", "counterexamples", "elapsed_ms"});
    CHECK(j["status"] == "pass");
    CHECK(j["n"] == 3);
    CHECK(j["counterexamples"].empty());
}

TEST_CASE("counterexamples serialize with the documented keys") {
    auto r = check_clifford(2, Annihilator::untwisted);
    const auto j = nlohmann::ordered_json::parse(cli::report_json(r));
    CHECK(j["status"] == "fail");
    REQUIRE_FALSE(j["counterexamples"].empty());
    std::vector<std::string> keys;
    for (const auto& [k, v] : j["counterexamples"][0].items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"relation", "witness", "lhs", "rhs"});
    CHECK(cli::report_text(r).find("fail") != std::string::npos);
}

TEST_CASE("output is deterministic apart from timing") {
    const auto a = invoke({"report-all", "--n", "3", "--format", "json", "--jobs", "1"});
    const auto b = invoke({"report-all", "--n", "3", "--format", "json", "--jobs", "3"});
    REQUIRE(a.code == cli::kPass);
    REQUIRE(b.code == cli::kPass);
    CHECK(without_timing(nlohmann::ordered_json::parse(a.out)) == without_timing(nlohmann::ordered_json::parse(b.out)));
    CHECK(nlohmann::ordered_json::parse(a.out).size() == cli::subchecks().size());
}

TEST_CASE("apply") {
    CHECK(invoke({"apply", "--op", "raise:2", "--state", "0,1", "--n", "4"}).out == "+1 * [0,1,2]\n");
    CHECK(invoke({"apply", "--op", "lower:1", "--state", "0,1", "--n", "2"}).out == "+1 * [0]\n");
    CHECK(invoke({"apply", "--op", "H", "--state", "", "--n", "1"}).out == "-1 * []\n");
    CHECK(invoke({"apply", "--op", "raise:0", "--state", "+1 * [1] -1/2 * [0]", "--n", "2"}).out == "+1 * [0,1]\n");
    CHECK(invoke({"apply", "--op", "raise:0", "--state", "1,0", "--n", "2"}).out == "0\n");
    const auto j = invoke({"apply", "--op", "tlower:0", "--state", R"([{"coeff":"-1/2","index":[0,1]}])", "--n", "2",
                           "--format", "json"});
    CHECK(j.code == cli::kPass);
    const auto doc = nlohmann::ordered_json::parse(j.out);
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["coeff"] == "-1/2");
    CHECK(doc[0]["index"] == nlohmann::ordered_json::array({1}));
    CHECK(invoke({"apply", "--op", "bogus", "--state", "0", "--n", "2"}).code == cli::kUsage);
}

TEST_CASE("parse errors report the offending position") {
    const auto r = invoke({"apply", "--op", "raise:0", "--state", "0,5", "--n", "3"});
    CHECK(r.code == cli::kUsage);
    CHECK(r.err.find("position 2") != std::string::npos);
    CHECK(r.err.find("  ^") != std::string::npos);
    try {
        cli::parse_element("+1 * [0] +x * [1]", 3);
        FAIL("expected a parse error");
    } catch (const cli::ParseError& e) {
        CHECK(e.position() == 9);
    }
    CHECK_THROWS_AS(cli::parse_element("[{\"coeff\":\"1\"}]", 3), cli::ParseError);
    CHECK_THROWS_AS(cli::parse_element("0,,1", 3), cli::ParseError);
}

TEST_CASE("element parsing") {
    CHECK(cli::parse_element("1,0", 2) == ExteriorElement::monomial(WedgeIndex{0, 1}, 2, -1));
    CHECK(cli::parse_element("", 2) == ExteriorElement::unit(2));
    CHECK(cli::parse_element("0", 2) == ExteriorElement::generator(0, 2));
    CHECK(cli::parse_element("-1/2 * [1] +3 * []", 2) ==
          ExteriorElement::monomial(WedgeIndex{1}, 2, Rational(-1, 2)) + ExteriorElement::unit(2) * 3);
}

TEST_CASE("cartan") {
    const auto r = invoke({"cartan", "--n", "5"});
    CHECK(r.code == cli::kPass);
    CHECK(r.out.find("verdict: EQUAL") != std::string::npos);
    CHECK(invoke({"cartan", "--n", "1"}).code == cli::kUsage);
    const auto j = invoke({"cartan", "--n", "3", "--format", "json"});
    CHECK(j.code == cli::kPass);
    CHECK_NOTHROW((void)nlohmann::ordered_json::parse(j.out));
}
