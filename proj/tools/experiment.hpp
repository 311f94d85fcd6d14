// Copyright 2026 The majmem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAJMEM_TOOLS_EXPERIMENT_HPP
#define MAJMEM_TOOLS_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace majmem::tools {

/// One experiment, fully specified. Every field has a JSON key of the same
/// name with underscores turned into dashes (e.g. "grid-points").
struct ExperimentConfig {
    std::string command;
    std::vector<size_t> n{12};
    std::vector<double> mu{0.5};
    double eta = 0;
    /// "none", "uniform" or "logistic:<y1>,<a>".
    std::string disorder = "none";
    uint64_t seed = 1;
    size_t samples = 10000;
    size_t realizations = 1;
    std::vector<double> f0{0.95};
    double t_max = 50;
    size_t grid_points = 64;
    int workers = 0;
    std::string out = "majmem_out";
    /// "auto", "exact" or "mc".
    std::string mode = "auto";
    // lyapunov-scan
    uint64_t lyapunov_sites = 1000000;
    double ratio = 2;
    // pseudorandom-search
    std::vector<double> y1{0.1, 0.2, 0.2845, 0.4, 0.6, 0.8};
    std::vector<double> a{3.6, 3.7, 3.8, 3.9, 3.9914};

    /// Throws ConfigError with the offending key.
    void validate() const;
    nlohmann::json to_json() const;
    /// Merges `j` over the current values. Unknown keys are errors.
    void merge_json(const nlohmann::json &j);
};

/// Parses a config document, reporting syntax errors with line and column.
nlohmann::json parse_config_text(const std::string &text, const std::string &origin);

/// Executes the command and writes results.csv, manifest.json and *.dat into
/// config.out. Returns the process exit code: 0 success, 2 configuration
/// error, 3 numerical failure (or a failed oracle check).
int run(const ExperimentConfig &config, std::ostream &log);

/// CSV header shared by every command.
const char *csv_header();

}  // namespace majmem::tools

#endif
