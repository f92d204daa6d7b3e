#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mhk/suites.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace mhk;
using nlohmann::json;

TEST_CASE("all suites pass on Zn:6 and the report is deterministic") {
    SuiteConfig cfg;
    cfg.group_dsl = "Zn:6";
    cfg.suites = known_suites();
    cfg.window = 3;
    cfg.seed = 42;
    auto rep = run_suites(cfg);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, (c.suite + ": " + c.witness));
    CHECK(rep.ok);
    CHECK(rep.checks.size() >= 10);

    auto rep2 = run_suites(cfg);
    CHECK(report_json(rep) == report_json(rep2));

    cfg.serial = true;
    auto rep3 = run_suites(cfg);
    CHECK(report_json(rep) == report_json(rep3));
}

TEST_CASE("windowed suites pass on Z") {
    SuiteConfig cfg;
    cfg.group_dsl = "Z";
    cfg.suites = {"antipode", "completion", "covering", "pairing", "cotwist"};
    cfg.window = 3;
    cfg.seed = 7;
    auto rep = run_suites(cfg);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, (c.suite + ": " + c.witness));
    CHECK(rep.ok);
}

TEST_CASE("oracle-equivalence emits per-structure records and a detected mutation") {
    SuiteConfig cfg;
    cfg.group_dsl = "Zn:4";
    cfg.suites = {"oracle-equivalence"};
    cfg.window = 4;
    auto rep = run_suites(cfg);
    CHECK(rep.ok);
    CHECK(rep.checks.size() == 5);
    const auto& mut = rep.checks.back();
    CHECK(mut.pass);  // pass means: the mutation was detected
    CHECK(!mut.witness.empty());
    CHECK(mut.witness.find("mismatch") != std::string::npos);
}

TEST_CASE("invalid configurations are usage errors") {
    SuiteConfig cfg;
    cfg.group_dsl = "Zn:6";
    cfg.suites = {"no-such-suite"};
    CHECK_THROWS_AS(run_suites(cfg), std::invalid_argument);
    cfg.suites = {"antipode"};
    cfg.window = 0;
    CHECK_THROWS_AS(run_suites(cfg), std::invalid_argument);
    cfg.window = 3;
    cfg.group_dsl = "Q8";
    CHECK_THROWS_AS(run_suites(cfg), std::invalid_argument);
    cfg.group_dsl = "Zn:6";
    cfg.suites = {};
    CHECK_THROWS_AS(run_suites(cfg), std::invalid_argument);
    cfg.group_dsl = "Z";
    cfg.suites = {"oracle-equivalence"};
    CHECK_THROWS_AS(run_suites(cfg), std::invalid_argument);
}

TEST_CASE("the JSON report carries the contract fields and writes to disk") {
    SuiteConfig cfg;
    cfg.group_dsl = "Zn:3";
    cfg.suites = {"hopf-axioms", "smash"};
    cfg.window = 3;
    cfg.out_path = "test_suites_report.json";
    auto rep = run_suites(cfg);
    CHECK(rep.ok);

    std::ifstream f(cfg.out_path);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    auto doc = json::parse(ss.str());
    CHECK(doc["group"] == "Zn:3");
    CHECK(doc["status"] == "pass");
    REQUIRE(doc["checks"].is_array());
    REQUIRE(!doc["checks"].empty());
    for (const auto& c : doc["checks"]) {
        CHECK(c.contains("suite"));
        CHECK(c.contains("identity"));
        CHECK(c.contains("paper_anchor"));
        CHECK(c.contains("instance"));
        CHECK(c.contains("probes"));
        CHECK(c["status"] == "pass");
        CHECK(!c.contains("witness"));  // only present on failure
    }
    std::remove(cfg.out_path.c_str());
}

TEST_CASE("describe summarizes finite and infinite instances") {
    auto d6 = json::parse(describe_group("Zn:6"));
    CHECK(d6["dimension"] == 6);
    CHECK(d6["order"] == 6);
    bool has_oracle = false;
    for (const auto& s : d6["suites"]) has_oracle = has_oracle || s == "oracle-equivalence";
    CHECK(has_oracle);

    auto dz = json::parse(describe_group("Z"));
    CHECK(dz["order"] == "infinite, support-local");
    for (const auto& s : dz["suites"]) CHECK(s != "oracle-equivalence");

    auto dp = json::parse(describe_group("prod(Zn:2,Zn:3)"));
    CHECK(dp["dimension"] == 6);

    CHECK_THROWS_AS(describe_group("nope"), std::invalid_argument);
}
