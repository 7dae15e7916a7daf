#pragma once

#include <string>
#include <vector>

#include "iho/config.hpp"
#include "json.hpp"

namespace iho {

inline constexpr const char* artifact_version = "0.1.0";

const std::vector<std::string>& experiment_names();

struct RunResult {
    std::vector<std::string> files;
    nlohmann::json summary;
};

// Runs one experiment and writes its CSV tables plus summary.json and
// manifest.json into out_dir.  The config is consumed key by key; unknown
// keys fail before any computation starts.
RunResult run_experiment(const std::string& experiment, Config& cfg,
                         const std::string& out_dir);

// After a sweep over scatter center energies: combined transmission table
// plus a one-parameter logistic-temperature fit over the swept runs.
RunResult aggregate_scatter_sweep(const std::vector<RunResult>& runs,
                                  const std::string& out_dir);

}  // namespace iho
