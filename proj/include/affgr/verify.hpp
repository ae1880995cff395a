#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "affgr/core.hpp"

namespace affgr::verify {

struct Options {
    int jobs = 0;               // 0 = hardware concurrency
    std::string cache_dir;      // empty = no caching
    long sample_pairs = 0;      // 0 = exhaustive (tangent-matrix suite)
    std::size_t max_points = 1'000'000;
};

/// Machine-readable outcome of one suite over a list of contexts.
/// The failure list is capped at 50 entries; failures_total holds the count.
struct SuiteReport {
    std::string suite;
    std::vector<Context> contexts;
    long checks = 0;
    std::vector<std::string> failures;
    long failures_total = 0;
    double wall_ms = 0.0;
    nlohmann::json extra = nlohmann::json::object();

    bool ok() const { return failures_total == 0; }
};

const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, const std::vector<Context>& ctxs,
                      const Options& opts = {});

/// Context list for a CLI sweep: every (n, s) with 2 <= n <= n_max, 1 <= s <= s_max.
std::vector<Context> context_range(int n_max, int s_max);

}  // namespace affgr::verify
