// Acceptance harness: one pass/fail line per criterion, exact equality
// throughout, exit 0 iff everything passes.
#include "mhk/suites.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace mhk;

namespace {

int g_failures = 0;

struct Criterion {
    std::string label;
    bool ok = true;
    std::string witness;

    void merge(const RunReport& rep) {
        for (const auto& c : rep.checks)
            if (!c.pass && ok) {
                ok = false;
                witness = c.suite + " [" + c.instance + "]: " + c.witness;
            }
    }
    void require(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            witness = msg;
        }
    }
    void print() const {
        if (ok) {
            std::printf("PASS  %s\n", label.c_str());
        } else {
            std::printf("FAIL  %s -- %s\n", label.c_str(), witness.c_str());
            ++g_failures;
        }
        std::fflush(stdout);
    }
};

RunReport run(const std::string& dsl, std::vector<std::string> suites, int window,
              std::uint64_t seed = 1) {
    SuiteConfig cfg;
    cfg.group_dsl = dsl;
    cfg.suites = std::move(suites);
    cfg.window = window;
    cfg.seed = seed;
    return run_suites(cfg);
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();

    {
        Criterion c{"criterion 1: Hopf axioms on K(Z_n) and C[Z_n], n = 2..8, exhaustive"};
        for (int n = 2; n <= 8; ++n) c.merge(run("Zn:" + std::to_string(n), {"hopf-axioms"}, n));
        c.print();
    }
    {
        Criterion c{"criterion 2: antipode identities on K(Z) window [-5,5] and K(Z_6)"};
        auto hz = build_function_mha(make_integers());
        auto rz = antipode_identity_suite(hz, 5);
        c.require(rz.ok, "K(Z): " + rz.witness);
        auto h6 = build_function_mha(make_cyclic(6));
        auto r6 = antipode_identity_suite(h6, 0);
        c.require(r6.ok, "K(Z_6): " + r6.witness);
        c.print();
    }
    {
        Criterion c{"criterion 3: completion holds 1 on K(Z); unital C[Z_n] adds nothing"};
        c.merge(run("Z", {"completion"}, 5));
        for (int n = 2; n <= 8; ++n) c.merge(run("Zn:" + std::to_string(n), {"completion"}, n));
        c.print();
    }
    {
        Criterion c{"criterion 4: witness independence on 100 random covered maps; "
                    "weak/strong covering regression"};
        c.merge(run("Z", {"covering"}, 5));
        c.merge(run("Zn:6", {"covering"}, 6));
        c.print();
    }
    {
        Criterion c{"criterion 5: pairing laws on K(Z_6) x C[Z_6], all basis triples, "
                    "m over embeddings and 1"};
        c.merge(run("Zn:6", {"pairing"}, 6));
        c.print();
    }
    {
        Criterion c{"criterion 6: smash products agree across both covering plans; "
                    "associativity sampled on Z_6 and exhaustive on Z_3"};
        c.merge(run("Zn:6", {"smash"}, 6, 2024));
        c.merge(run("Zn:3", {"smash"}, 3));
        c.print();
    }
    {
        Criterion c{"criterion 7: coaction counit, coassociativity, membership, and "
                    "cotwist round trips on K(Z) window [-3,3] and Z_4"};
        c.merge(run("Z", {"coaction", "cotwist"}, 3));
        c.merge(run("Zn:4", {"coaction", "cotwist"}, 4));
        c.print();
    }
    {
        Criterion c{"criterion 8: dense oracle equivalence for n = 2..8 with injected "
                    "mutation detection"};
        for (int n = 2; n <= 8; ++n)
            c.merge(run("Zn:" + std::to_string(n), {"oracle-equivalence"}, n, 99));
        c.print();
    }

    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::printf("%s (%d criteria failed, %.1fs)\n", g_failures == 0 ? "ACCEPTED" : "REJECTED",
                g_failures, static_cast<double>(dt) / 1000.0);
    return g_failures == 0 ? 0 : 1;
}
