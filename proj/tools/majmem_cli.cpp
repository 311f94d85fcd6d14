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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "experiment.hpp"
#include "majmem/errors.hpp"

using majmem::tools::ExperimentConfig;
using nlohmann::json;

int main(int argc, char **argv) {
    CLI::App app{"Disordered Majorana chain quantum memory simulator"};
    app.require_subcommand(1);

    // Flags are stored as JSON so that only the ones actually given override
    // the config file.
    std::string config_path;
    std::string command;
    std::vector<size_t> n;
    std::vector<double> mu, f0, y1, a;
    double eta = 0, t_max = 0, ratio = 0;
    std::string disorder, out, mode;
    uint64_t seed = 0, lyapunov_sites = 0;
    size_t samples = 0, realizations = 0, grid_points = 0;
    int workers = 0;

    const char *commands[][2] = {
        {"fidelity-curve", "F(t) on a uniform time grid"},
        {"storage-scaling", "storage times per threshold and their scaling with N"},
        {"lyapunov-scan", "Lyapunov exponent over energy and its minimum"},
        {"xi-scan", "effective localization length per disorder realization"},
        {"pseudorandom-search", "rank logistic-map potentials by xi_eff"},
        {"oracle-check", "compare the Gaussian pipeline with the dense simulator"},
    };
    for (auto &c : commands) {
        CLI::App *sub = app.add_subcommand(c[0], c[1]);
        sub->callback([&command, name = std::string(c[0])] { command = name; });
        sub->add_option("--config", config_path, "JSON config file; flags override its keys");
        sub->add_option("--n", n, "chain sizes (comma separated)")->delimiter(',');
        sub->add_option("--mu", mu, "chemical potentials (comma separated)")->delimiter(',');
        sub->add_option("--eta", eta, "disorder strength");
        sub->add_option("--disorder", disorder, "none | uniform | logistic:<y1>,<a>");
        sub->add_option("--seed", seed, "global random seed");
        sub->add_option("--samples", samples, "Monte Carlo samples per time point");
        sub->add_option("--realizations", realizations, "disorder realizations");
        sub->add_option("--f0", f0, "fidelity thresholds (comma separated)")->delimiter(',');
        sub->add_option("--t-max", t_max, "end of the time grid");
        sub->add_option("--grid-points", grid_points, "points in the time grid");
        sub->add_option("--workers", workers, "worker threads (0 = runtime default)");
        sub->add_option("--out", out, "output directory");
        sub->add_option("--mode", mode, "auto | exact | mc");
        sub->add_option("--lyapunov-sites", lyapunov_sites, "chain length for Lyapunov exponents");
        sub->add_option("--ratio", ratio, "mu / eta for lyapunov-scan");
        sub->add_option("--y1", y1, "logistic seeds for pseudorandom-search")->delimiter(',');
        sub->add_option("--a", a, "logistic parameters for pseudorandom-search")->delimiter(',');
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CLI::App *sub = app.get_subcommand(command);
    json flags = json::object();
    auto given = [&](const char *name) { return sub->count(std::string("--") + name) > 0; };
    if (given("n")) flags["n"] = n;
    if (given("mu")) flags["mu"] = mu;
    if (given("eta")) flags["eta"] = eta;
    if (given("disorder")) flags["disorder"] = disorder;
    if (given("seed")) flags["seed"] = seed;
    if (given("samples")) flags["samples"] = samples;
    if (given("realizations")) flags["realizations"] = realizations;
    if (given("f0")) flags["f0"] = f0;
    if (given("t-max")) flags["t-max"] = t_max;
    if (given("grid-points")) flags["grid-points"] = grid_points;
    if (given("workers")) flags["workers"] = workers;
    if (given("out")) flags["out"] = out;
    if (given("mode")) flags["mode"] = mode;
    if (given("lyapunov-sites")) flags["lyapunov-sites"] = lyapunov_sites;
    if (given("ratio")) flags["ratio"] = ratio;
    if (given("y1")) flags["y1"] = y1;
    if (given("a")) flags["a"] = a;

    ExperimentConfig config;
    try {
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) {
                throw majmem::ConfigError(config_path + ": cannot open");
            }
            std::stringstream text;
            text << f.rdbuf();
            config.merge_json(majmem::tools::parse_config_text(text.str(), config_path));
        }
        config.merge_json(flags);
        config.command = command;
    } catch (const majmem::ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }
    return majmem::tools::run(config, std::cerr);
}
