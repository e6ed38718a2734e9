#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gspin/verify.hpp"

namespace gspin {

inline constexpr const char* report_schema_version = "1";

struct RunConfig {
    std::string group = "symmetric:3";
    std::string subgroup = "all";
    int window_lo = 0;
    int window_hi = 1;
    std::vector<std::string> suites;  // empty means every known suite
    VerifyOptions verify;
    std::uint64_t max_basis = 100000;
    int max_group_order = 48;
    std::string name;  // optional instance label echoed in reports
};

struct SuiteResult {
    std::string suite;
    bool expect_failures = false;  // negative controls: pass when something fails
    std::vector<VerifyReport> reports;
    std::vector<std::pair<std::string, std::uint64_t>> stats;
    std::vector<std::string> notes;

    std::uint64_t failed_laws() const;
    bool pass() const;
};

struct RunReport {
    RunConfig config;
    std::vector<SuiteResult> suites;
    bool pass() const;
};

const std::vector<std::string>& known_suites();

/// Runs the configured suites against one instance. Unknown suite names and
/// malformed specs raise ConfigError; impossible constructions raise
/// ValidationError; size caps raise ResourceCapError.
RunReport run_suites(const RunConfig& cfg);

/// Deterministic serialization: identical configurations produce identical
/// bytes (no timestamps, no timings, no addresses).
std::string report_json(const RunReport& r);
std::string report_markdown(const RunReport& r);

} // namespace gspin
