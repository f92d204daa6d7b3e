#include "mhk.h"

#include "mhk/suites.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

struct mhk_config {
    mhk::SuiteConfig cfg;
};

struct mhk_report {
    mhk::RunReport rep;
    std::string json;
};

namespace {

thread_local std::string g_last_error;

mhk_status fail(mhk_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

mhk_config* mhk_config_new(void) { return new (std::nothrow) mhk_config; }

void mhk_config_free(mhk_config* cfg) { delete cfg; }

mhk_status mhk_config_set_group(mhk_config* cfg, const char* dsl) {
    if (!cfg || !dsl) return fail(MHK_USAGE_ERROR, "null argument");
    cfg->cfg.group_dsl = dsl;
    return MHK_OK;
}

mhk_status mhk_config_add_suite(mhk_config* cfg, const char* name) {
    if (!cfg || !name) return fail(MHK_USAGE_ERROR, "null argument");
    cfg->cfg.suites.emplace_back(name);
    return MHK_OK;
}

mhk_status mhk_config_set_window(mhk_config* cfg, int window) {
    if (!cfg) return fail(MHK_USAGE_ERROR, "null argument");
    if (window < 1) return fail(MHK_USAGE_ERROR, "window must be >= 1");
    cfg->cfg.window = window;
    return MHK_OK;
}

mhk_status mhk_config_set_seed(mhk_config* cfg, uint64_t seed) {
    if (!cfg) return fail(MHK_USAGE_ERROR, "null argument");
    cfg->cfg.seed = seed;
    return MHK_OK;
}

mhk_status mhk_config_set_out_path(mhk_config* cfg, const char* path) {
    if (!cfg) return fail(MHK_USAGE_ERROR, "null argument");
    cfg->cfg.out_path = path ? path : "";
    return MHK_OK;
}

mhk_status mhk_config_set_serial(mhk_config* cfg, int serial) {
    if (!cfg) return fail(MHK_USAGE_ERROR, "null argument");
    cfg->cfg.serial = serial != 0;
    return MHK_OK;
}

mhk_status mhk_verify(const mhk_config* cfg, mhk_report** out) {
    if (out) *out = nullptr;
    if (!cfg) return fail(MHK_USAGE_ERROR, "null config");
    try {
        auto rep = mhk::run_suites(cfg->cfg);
        if (out) {
            auto* handle = new mhk_report{rep, mhk::report_json(rep)};
            *out = handle;
        }
        if (!rep.ok) {
            for (const auto& c : rep.checks)
                if (!c.pass) return fail(MHK_VERIFICATION_FAILED, c.suite + ": " + c.witness);
            return fail(MHK_VERIFICATION_FAILED, "verification failed");
        }
        g_last_error.clear();
        return MHK_OK;
    } catch (const std::invalid_argument& e) {
        return fail(MHK_USAGE_ERROR, e.what());
    } catch (const std::exception& e) {
        return fail(MHK_INTERNAL_ERROR, e.what());
    }
}

int mhk_report_passed(const mhk_report* rep) { return rep && rep->rep.ok ? 1 : 0; }

const char* mhk_report_json(const mhk_report* rep) { return rep ? rep->json.c_str() : ""; }

void mhk_report_free(mhk_report* rep) { delete rep; }

mhk_status mhk_describe(const char* dsl, char** out_json) {
    if (out_json) *out_json = nullptr;
    if (!dsl || !out_json) return fail(MHK_USAGE_ERROR, "null argument");
    try {
        *out_json = dup_string(mhk::describe_group(dsl));
        if (!*out_json) return fail(MHK_INTERNAL_ERROR, "out of memory");
        g_last_error.clear();
        return MHK_OK;
    } catch (const std::invalid_argument& e) {
        return fail(MHK_USAGE_ERROR, e.what());
    } catch (const std::exception& e) {
        return fail(MHK_INTERNAL_ERROR, e.what());
    }
}

char* mhk_suite_names(void) {
    std::string out;
    for (const auto& s : mhk::known_suites()) {
        if (!out.empty()) out += ",";
        out += s;
    }
    return dup_string(out);
}

void mhk_string_free(char* s) { std::free(s); }

const char* mhk_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
