#pragma once

#include "mhk/oracle.hpp"

#include <cstdint>

namespace mhk {

struct SuiteConfig {
    std::string group_dsl;
    std::vector<std::string> suites;  // nonempty; subset of known_suites()
    int window = 5;                   // support window for infinite groups; >= 1
    std::uint64_t seed = 1;           // drives every sampled property
    std::string out_path;             // report file; empty writes nothing
    bool serial = false;              // suites run in parallel unless set
};

/// One verified identity: instance, probe count, outcome, refuting witness.
struct CheckRecord {
    std::string suite;
    std::string identity;
    std::string paper_anchor;
    std::string instance;
    long probes = 0;
    bool pass = true;
    std::string witness;
};

struct RunReport {
    SuiteConfig config;
    std::vector<CheckRecord> checks;  // ordered by suite, then insertion
    bool ok = true;
};

const std::vector<std::string>& known_suites();

/// Executes the requested suites. Deterministic given (config, seed); suites
/// evaluate concurrently unless config.serial. Throws std::invalid_argument
/// for a malformed DSL, an unknown suite name, or a suite/instance mismatch
/// (oracle-equivalence on an infinite group).
RunReport run_suites(const SuiteConfig& cfg);

/// The one-JSON-document report; scalars inside witnesses are "num/den".
std::string report_json(const RunReport& rep);

/// Instance summary for a DSL string: dimension or support-local flag,
/// available structures and suites. JSON document.
std::string describe_group(const std::string& dsl);

}  // namespace mhk
