#include "mhk.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct VerifyArgs {
    std::string group;
    std::vector<std::string> suites;
    int window = 5;
    std::uint64_t seed = 1;
    std::string out_path;
    bool serial = false;
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

// Config files carry the same keys as the flags; explicitly given flags win.
bool load_config_file(const std::string& path, VerifyArgs& a, const CLI::App* cmd) {
    std::ifstream f(path);
    if (!f) {
        std::cerr << "error: cannot read config file: " << path << "\n";
        return false;
    }
    nlohmann::json doc;
    try {
        f >> doc;
    } catch (const std::exception& e) {
        std::cerr << "error: malformed config file: " << e.what() << "\n";
        return false;
    }
    auto given = [cmd](const std::string& flag) { return cmd->count(flag) > 0; };
    if (doc.contains("group") && !given("--group")) a.group = doc["group"].get<std::string>();
    if (doc.contains("suites") && !given("--suite")) {
        a.suites.clear();
        if (doc["suites"].is_string()) {
            a.suites = split_csv(doc["suites"].get<std::string>());
        } else {
            for (const auto& s : doc["suites"]) a.suites.push_back(s.get<std::string>());
        }
    }
    if (doc.contains("window") && !given("--window")) a.window = doc["window"].get<int>();
    if (doc.contains("seed") && !given("--seed")) a.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("out") && !given("--out")) a.out_path = doc["out"].get<std::string>();
    if (doc.contains("serial") && !given("--serial")) a.serial = doc["serial"].get<bool>();
    return true;
}

int run_verify(const VerifyArgs& a) {
    mhk_config* cfg = mhk_config_new();
    if (!cfg) {
        std::cerr << "error: out of memory\n";
        return 2;
    }
    mhk_config_set_group(cfg, a.group.c_str());
    for (const auto& chunk : a.suites)
        for (const auto& s : split_csv(chunk)) mhk_config_add_suite(cfg, s.c_str());
    if (mhk_config_set_window(cfg, a.window) != MHK_OK) {
        std::cerr << "error: " << mhk_last_error() << "\n";
        mhk_config_free(cfg);
        return 2;
    }
    mhk_config_set_seed(cfg, a.seed);
    mhk_config_set_out_path(cfg, a.out_path.c_str());
    mhk_config_set_serial(cfg, a.serial ? 1 : 0);

    mhk_report* rep = nullptr;
    mhk_status st = mhk_verify(cfg, &rep);
    if (rep) std::cout << mhk_report_json(rep) << "\n";
    int code = 2;
    switch (st) {
        case MHK_OK:
            code = 0;
            break;
        case MHK_VERIFICATION_FAILED:
            std::cerr << "verification failed: " << mhk_last_error() << "\n";
            code = 1;
            break;
        default:
            std::cerr << "error: " << mhk_last_error() << "\n";
            code = 2;
            break;
    }
    mhk_report_free(rep);
    mhk_config_free(cfg);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification harness for multiplier Hopf algebra machinery"};
    app.require_subcommand(1);

    VerifyArgs va;
    std::string config_path;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--group", va.group, "group DSL: Z, Zn:<k>, D:<k>, prod(<g>,<g>)");
    verify->add_option("--suite", va.suites, "suite name(s), comma-separated or repeated");
    verify->add_option("--window", va.window, "support window for infinite groups")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", va.seed, "seed for sampled properties");
    verify->add_option("--out", va.out_path, "report file path");
    verify->add_flag("--serial", va.serial, "run suites sequentially");
    verify->add_option("--config", config_path, "JSON config file with the same keys");

    std::string describe_group;
    auto* describe = app.add_subcommand("describe", "summarize an instance");
    describe->add_option("--group", describe_group, "group DSL")->required();

    std::string oracle_group;
    auto* oracle = app.add_subcommand("oracle", "dense-oracle equivalence on a finite group");
    oracle->add_option("--group", oracle_group, "group DSL")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (verify->parsed()) {
        if (!config_path.empty() && !load_config_file(config_path, va, verify)) return 2;
        if (va.group.empty() || va.suites.empty()) {
            std::cerr << "error: verify needs --group and at least one --suite\n";
            return 2;
        }
        return run_verify(va);
    }
    if (describe->parsed()) {
        char* json = nullptr;
        if (mhk_describe(describe_group.c_str(), &json) != MHK_OK) {
            std::cerr << "error: " << mhk_last_error() << "\n";
            return 2;
        }
        std::cout << json << "\n";
        mhk_string_free(json);
        return 0;
    }
    // oracle
    VerifyArgs oa;
    oa.group = oracle_group;
    oa.suites = {"oracle-equivalence"};
    return run_verify(oa);
}
