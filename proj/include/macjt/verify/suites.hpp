#pragma once
// Identity-checking suites run by `verify` and the acceptance driver.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "macjt/partitions/partition.hpp"

namespace macjt::verify {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct SuiteConfig {
    int max_weight = 0; // 0: the suite's own default
    int max_length = 0; // 0: the suite's own default
    int n = 0;          // lemma1 size; 0: 1, 2 and 3
    int samples = 20;
    std::uint64_t seed = kDefaultSeed;
    int parallelism = 1;
    std::vector<Partition> extra; // additional partitions for theorem1
};

struct SuiteReport {
    std::string suite;
    bool passed = true;
    long cases = 0;
    long failures = 0;
    std::optional<std::string> witness; // first failing case
    double seconds = 0;
    nlohmann::json details = nlohmann::json::object();

    nlohmann::json to_json() const;
};

const std::vector<std::string> &suite_names(); // without "all"
bool is_suite(const std::string &name);
// "all" runs every suite in order and merges the reports.
std::vector<SuiteReport> run_suite(const std::string &name, const SuiteConfig &cfg);

} // namespace macjt::verify
