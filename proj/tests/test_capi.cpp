#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mhk.h"

#include <cstring>
#include <string>

TEST_CASE("verify runs through the C surface") {
    mhk_config* cfg = mhk_config_new();
    REQUIRE(cfg);
    CHECK(mhk_config_set_group(cfg, "Zn:4") == MHK_OK);
    CHECK(mhk_config_add_suite(cfg, "hopf-axioms") == MHK_OK);
    CHECK(mhk_config_add_suite(cfg, "oracle-equivalence") == MHK_OK);
    CHECK(mhk_config_set_window(cfg, 3) == MHK_OK);
    CHECK(mhk_config_set_seed(cfg, 11) == MHK_OK);

    mhk_report* rep = nullptr;
    CHECK(mhk_verify(cfg, &rep) == MHK_OK);
    REQUIRE(rep);
    CHECK(mhk_report_passed(rep) == 1);
    std::string json = mhk_report_json(rep);
    CHECK(json.find("\"status\": \"pass\"") != std::string::npos);
    CHECK(json.find("\"paper_anchor\"") != std::string::npos);
    mhk_report_free(rep);
    mhk_config_free(cfg);
}

TEST_CASE("usage errors surface as status codes with messages") {
    mhk_config* cfg = mhk_config_new();
    REQUIRE(cfg);
    CHECK(mhk_config_set_group(cfg, "bogus") == MHK_OK);
    CHECK(mhk_config_add_suite(cfg, "antipode") == MHK_OK);
    mhk_report* rep = nullptr;
    CHECK(mhk_verify(cfg, &rep) == MHK_USAGE_ERROR);
    CHECK(rep == nullptr);
    CHECK(std::strlen(mhk_last_error()) > 0);
    mhk_config_free(cfg);

    cfg = mhk_config_new();
    CHECK(mhk_config_set_group(cfg, "Zn:4") == MHK_OK);
    CHECK(mhk_config_add_suite(cfg, "no-such-suite") == MHK_OK);
    CHECK(mhk_verify(cfg, &rep) == MHK_USAGE_ERROR);
    mhk_config_free(cfg);

    CHECK(mhk_config_set_window(nullptr, 2) == MHK_USAGE_ERROR);
    CHECK(mhk_verify(nullptr, &rep) == MHK_USAGE_ERROR);
}

TEST_CASE("describe and suite names round-trip through C strings") {
    char* json = nullptr;
    CHECK(mhk_describe("Zn:6", &json) == MHK_OK);
    REQUIRE(json);
    CHECK(std::string(json).find("\"dimension\": 6") != std::string::npos);
    mhk_string_free(json);

    json = nullptr;
    CHECK(mhk_describe("nope", &json) == MHK_USAGE_ERROR);
    CHECK(json == nullptr);

    char* names = mhk_suite_names();
    REQUIRE(names);
    std::string s = names;
    CHECK(s.find("hopf-axioms") != std::string::npos);
    CHECK(s.find("oracle-equivalence") != std::string::npos);
    mhk_string_free(names);
}
