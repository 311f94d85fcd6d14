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

#include "experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "majmem/chain.hpp"
#include "majmem/errors.hpp"
#include "majmem/localization.hpp"
#include "majmem/oracle.hpp"
#include "majmem/stats.hpp"
#include "majmem/storage.hpp"

#ifndef MAJMEM_VERSION
#define MAJMEM_VERSION "unknown"
#endif

using namespace majmem;
using namespace majmem::tools;
using nlohmann::json;

namespace {

const char *const kCommands[] = {"fidelity-curve", "storage-scaling",     "lyapunov-scan",
                                 "xi-scan",        "pseudorandom-search", "oracle-check"};

// Shortest round-trip representation, independent of locale.
std::string fmt(double v) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

std::string fmt(uint64_t v) {
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

struct ResultRow {
    std::string experiment;
    size_t n = 0;
    double mu = 0;
    double eta = 0;
    std::string disorder;
    uint64_t seed = 0;
    std::optional<uint64_t> realization;
    std::optional<double> t;
    std::optional<double> f;
    std::optional<double> std_error;
    std::string mode;
    std::optional<double> f0;
    std::optional<double> t_storage;
    std::optional<bool> censored;
    std::optional<double> xi_eff;
    std::optional<double> energy;
    std::optional<double> ell;
    std::optional<double> baseline;
};

template <typename T>
std::string cell(const std::optional<T> &v) {
    if (!v) {
        return "";
    }
    if constexpr (std::is_same_v<T, bool>) {
        return *v ? "1" : "0";
    } else {
        return fmt(*v);
    }
}

std::string quote(const std::string &s) {
    if (s.find_first_of(",\"") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string to_csv(const ResultRow &r) {
    std::string line;
    line += r.experiment + ',' + fmt(uint64_t{r.n}) + ',' + fmt(r.mu) + ',' + fmt(r.eta) + ',' + quote(r.disorder) +
            ',' + fmt(r.seed) + ',' + cell(r.realization) + ',' + cell(r.t) + ',' + cell(r.f) + ',' +
            cell(r.std_error) + ',' + r.mode + ',' + cell(r.f0) + ',' + cell(r.t_storage) + ',' + cell(r.censored) +
            ',' + cell(r.xi_eff) + ',' + cell(r.energy) + ',' + cell(r.ell) + ',' + cell(r.baseline);
    return line;
}

Disorder parse_disorder(const std::string &spec, uint64_t seed) {
    if (spec == "none") {
        return NoDisorder{};
    }
    if (spec == "uniform") {
        return UniformIID{seed};
    }
    const std::string prefix = "logistic:";
    if (spec.rfind(prefix, 0) == 0) {
        std::string rest = spec.substr(prefix.size());
        size_t comma = rest.find(',');
        if (comma == std::string::npos) {
            throw ConfigError("disorder: expected logistic:<y1>,<a>, got '" + spec + "'");
        }
        Logistic l;
        const char *b = rest.data();
        auto r1 = std::from_chars(b, b + comma, l.y1);
        auto r2 = std::from_chars(b + comma + 1, b + rest.size(), l.a);
        if (r1.ec != std::errc() || r1.ptr != b + comma || r2.ec != std::errc() || r2.ptr != b + rest.size()) {
            throw ConfigError("disorder: cannot parse numbers in '" + spec + "'");
        }
        return l;
    }
    throw ConfigError("disorder: expected none, uniform or logistic:<y1>,<a>, got '" + spec + "'");
}

ChainParams chain_params(const ExperimentConfig &c, size_t n, double mu) {
    ChainParams p;
    p.n = n;
    p.mu = mu;
    p.eta = c.eta;
    p.disorder = parse_disorder(c.disorder, c.seed);
    p.validate();
    return p;
}

EstimatorParams estimator(const ExperimentConfig &c, Rng rng) {
    EstimatorParams est;
    if (c.mode == "exact") {
        est.mode = EstimatorParams::Mode::Exact;
    } else if (c.mode == "mc") {
        est.mode = EstimatorParams::Mode::MonteCarlo;
    }
    est.mc.n_samples = c.samples;
    est.mc.workers = c.workers;
    est.rng = rng;
    return est;
}

const char *mode_name(EstimateMode m) {
    return m == EstimateMode::Exact ? "exact" : "mc";
}

// Random streams are addressed by (n, mu index, realization) so adding grid
// entries never reshuffles existing ones.
Rng run_stream(const ExperimentConfig &c, size_t n, size_t mu_index, uint64_t realization) {
    return Rng(c.seed).substream(n).substream(mu_index).substream(realization);
}

std::string coords(size_t n, double mu, uint64_t r, std::optional<double> t = std::nullopt) {
    std::string s = " [N=" + fmt(uint64_t{n}) + " mu=" + fmt(mu) + " realization=" + fmt(r);
    if (t) {
        s += " t=" + fmt(*t);
    }
    return s + "]";
}

struct Output {
    std::vector<ResultRow> rows;
    std::map<std::string, std::string> dat;
    json summary = json::object();
    bool failed = false;
};

ResultRow base_row(const ExperimentConfig &c, const char *experiment, size_t n, double mu) {
    ResultRow r;
    r.experiment = experiment;
    r.n = n;
    r.mu = mu;
    r.eta = c.eta;
    r.disorder = c.disorder;
    r.seed = c.seed;
    return r;
}

void fidelity_curve(const ExperimentConfig &c, Output &out, std::ostream &log) {
    EncodedState enc;
    std::vector<double> grid = uniform_grid(c.t_max, c.grid_points);
    for (size_t n : c.n) {
        for (size_t mi = 0; mi < c.mu.size(); mi++) {
            ChainParams p = chain_params(c, n, c.mu[mi]);
            for (uint64_t r = 0; r < c.realizations; r++) {
                MemoryModel model(one_particle_hamiltonian(p, realize_potential(p, r)));
                EstimatorParams est = estimator(c, run_stream(c, n, mi, r));
                std::string dat = "# t F stderr cos2(delta t/2)\n";
                for (size_t k = 0; k < grid.size(); k++) {
                    FidelityEstimate e;
                    try {
                        e = estimate_fidelity(enc, model, grid[k], k, est);
                    } catch (const NumericalError &err) {
                        throw NumericalError(err.what() + coords(n, p.mu, r, grid[k]), err.residual());
                    }
                    ResultRow row = base_row(c, "fidelity-curve", n, p.mu);
                    row.realization = r;
                    row.t = grid[k];
                    row.f = e.value;
                    row.std_error = e.std_error;
                    row.mode = mode_name(e.mode);
                    row.baseline = cosine_baseline(model, grid[k]);
                    out.rows.push_back(row);
                    dat += fmt(grid[k]) + ' ' + fmt(e.value) + ' ' + fmt(e.std_error) + ' ' + fmt(*row.baseline) + '\n';
                }
                out.dat["fidelity_N" + fmt(uint64_t{n}) + "_mu" + fmt(p.mu) + "_r" + fmt(r) + ".dat"] = dat;
                log << "fidelity-curve" << coords(n, p.mu, r) << " done\n";
            }
        }
    }
}

void storage_scaling(const ExperimentConfig &c, Output &out, std::ostream &log) {
    EncodedState enc;
    std::vector<double> grid = uniform_grid(c.t_max, c.grid_points);
    json fits = json::array();
    for (size_t mi = 0; mi < c.mu.size(); mi++) {
        // mean[f0 index][n index]
        std::vector<std::vector<double>> mean(c.f0.size(), std::vector<double>(c.n.size(), 0));
        std::vector<size_t> censored(c.f0.size(), 0);
        for (size_t ni = 0; ni < c.n.size(); ni++) {
            size_t n = c.n[ni];
            ChainParams p = chain_params(c, n, c.mu[mi]);
            for (uint64_t r = 0; r < c.realizations; r++) {
                MemoryModel model(one_particle_hamiltonian(p, realize_potential(p, r)));
                StorageScan scan;
                try {
                    scan = storage_time(enc, model, grid, c.f0, estimator(c, run_stream(c, n, mi, r)));
                } catch (const NumericalError &err) {
                    throw NumericalError(err.what() + coords(n, p.mu, r), err.residual());
                }
                for (size_t fi = 0; fi < c.f0.size(); fi++) {
                    const StorageTimeResult &res = scan.results[fi];
                    ResultRow row = base_row(c, "storage-scaling", n, p.mu);
                    row.realization = r;
                    row.f0 = res.f0;
                    row.t_storage = res.t.value_or(res.t_max());
                    row.censored = res.censored();
                    row.mode = scan.curve.empty() ? "" : mode_name(scan.curve.front().mode);
                    out.rows.push_back(row);
                    mean[fi][ni] += *row.t_storage / static_cast<double>(c.realizations);
                    censored[fi] += res.censored() ? 1 : 0;
                }
                log << "storage-scaling" << coords(n, p.mu, r) << " done\n";
            }
        }
        for (size_t fi = 0; fi < c.f0.size(); fi++) {
            std::vector<double> log_n, t, log_t;
            std::string dat = "# log2(N) mean_T_storage\n";
            for (size_t ni = 0; ni < c.n.size(); ni++) {
                log_n.push_back(std::log2(static_cast<double>(c.n[ni])));
                t.push_back(mean[fi][ni]);
                log_t.push_back(std::log2(std::max(mean[fi][ni], 1e-300)));
                dat += fmt(log_n.back()) + ' ' + fmt(t.back()) + '\n';
            }
            json entry = {{"mu", c.mu[mi]}, {"f0", c.f0[fi]}, {"mean_t_storage", t}, {"censored", censored[fi]}};
            if (c.n.size() >= 2) {
                LinearFit lin = linear_fit(log_n, t);
                LinearFit pow = linear_fit(log_n, log_t);
                entry["fit_t_vs_log2n"] = {{"slope", lin.slope}, {"intercept", lin.intercept}, {"r2", lin.r2}};
                entry["fit_log2t_vs_log2n"] = {{"slope", pow.slope}, {"intercept", pow.intercept}, {"r2", pow.r2}};
            }
            fits.push_back(entry);
            out.dat["storage_mu" + fmt(c.mu[mi]) + "_f0" + fmt(c.f0[fi]) + ".dat"] = dat;
        }
    }
    out.summary["fits"] = fits;
}

void lyapunov(const ExperimentConfig &c, Output &out, std::ostream &log) {
    std::vector<double> inv_log, ell_min;
    for (size_t mi = 0; mi < c.mu.size(); mi++) {
        double mu = c.mu[mi];
        MinimalLyapunov m = minimal_lyapunov(mu, c.ratio, c.lyapunov_sites, c.seed, c.workers);
        std::string dat = "# E ell(E)\n";
        for (size_t k = 0; k < m.scan.energies.size(); k++) {
            ResultRow row = base_row(c, "lyapunov-scan", m.scan.n_sites, mu);
            row.eta = m.scan.eta;
            row.disorder = "uniform";
            row.energy = m.scan.energies[k];
            row.ell = m.scan.exponents[k];
            out.rows.push_back(row);
            dat += fmt(*row.energy) + ' ' + fmt(*row.ell) + '\n';
        }
        ResultRow row = base_row(c, "lyapunov-min", m.scan.n_sites, mu);
        row.eta = m.scan.eta;
        row.disorder = "uniform";
        row.energy = m.energy;
        row.ell = m.ell_min;
        out.rows.push_back(row);
        out.dat["lyapunov_mu" + fmt(mu) + ".dat"] = dat;
        inv_log.push_back(1.0 / std::log(1.0 / mu));
        ell_min.push_back(m.ell_min);
        log << "lyapunov-scan mu=" << fmt(mu) << " ell_min=" << fmt(m.ell_min) << " at E=" << fmt(m.energy) << '\n';
    }
    std::string dat = "# 1/log(1/mu) ell_min\n";
    for (size_t k = 0; k < inv_log.size(); k++) {
        dat += fmt(inv_log[k]) + ' ' + fmt(ell_min[k]) + '\n';
    }
    out.dat["lyapunov_min.dat"] = dat;
    if (inv_log.size() >= 2) {
        LinearFit f = linear_fit(inv_log, ell_min);
        out.summary["fit_ell_min_vs_inv_log"] = {{"slope", f.slope}, {"intercept", f.intercept}, {"r2", f.r2}};
    }
}

void xi_scan(const ExperimentConfig &c, Output &out, std::ostream &log) {
    for (size_t n : c.n) {
        for (size_t mi = 0; mi < c.mu.size(); mi++) {
            ChainParams p = chain_params(c, n, c.mu[mi]);
            std::string dat = "# realization xi_eff\n";
            for (uint64_t r = 0; r < c.realizations; r++) {
                XiEffResult x = xi_effective(realize_potential(p, r));
                ResultRow row = base_row(c, "xi-scan", n, p.mu);
                row.realization = r;
                row.xi_eff = x.xi_eff;
                out.rows.push_back(row);
                dat += fmt(r) + ' ' + fmt(x.xi_eff) + '\n';
                if (x.saturated) {
                    log << "xi-scan" << coords(n, p.mu, r) << " no usable decay fit, xi_eff saturated\n";
                }
            }
            out.dat["xi_N" + fmt(uint64_t{n}) + "_mu" + fmt(p.mu) + ".dat"] = dat;
        }
    }
}

void pseudorandom(const ExperimentConfig &c, Output &out, std::ostream &log) {
    for (size_t n : c.n) {
        for (double mu : c.mu) {
            auto ranked = pseudorandom_scan(c.y1, c.a, n, mu, c.eta, c.workers);
            std::string dat = "# rank xi_eff y1 a\n";
            for (size_t k = 0; k < ranked.size(); k++) {
                ResultRow row = base_row(c, "pseudorandom-search", n, mu);
                row.disorder = "logistic:" + fmt(ranked[k].y1) + "," + fmt(ranked[k].a);
                row.xi_eff = ranked[k].xi_eff;
                out.rows.push_back(row);
                dat += fmt(uint64_t{k}) + ' ' + fmt(ranked[k].xi_eff) + ' ' + fmt(ranked[k].y1) + ' ' +
                       fmt(ranked[k].a) + '\n';
            }
            out.dat["pseudorandom_N" + fmt(uint64_t{n}) + "_mu" + fmt(mu) + ".dat"] = dat;
            if (!ranked.empty()) {
                log << "pseudorandom-search N=" << n << " best (y1, a) = (" << fmt(ranked[0].y1) << ", "
                    << fmt(ranked[0].a) << ") xi_eff=" << fmt(ranked[0].xi_eff) << '\n';
            }
        }
    }
}

void oracle_check(const ExperimentConfig &c, Output &out, std::ostream &log) {
    constexpr double kTol = 1e-8;
    EncodedState enc;
    std::vector<double> grid = uniform_grid(c.t_max, c.grid_points);
    double worst_f = 0;
    double worst_p = 0;
    double worst_spec = 0;
    for (size_t n : c.n) {
        for (size_t mi = 0; mi < c.mu.size(); mi++) {
            ChainParams p = chain_params(c, n, c.mu[mi]);
            for (uint64_t r = 0; r < c.realizations; r++) {
                SkewMatrix h = one_particle_hamiltonian(p, realize_potential(p, r));
                MemoryModel model(h);
                oracle::ManyBody mb(h);

                // Many-body spectrum against E0 + sum_j n_j lambda_j.
                std::vector<double> spec = mb.spectrum();
                std::vector<double> free;
                double e0 = 0;
                for (double l : model.form().lambdas) {
                    e0 -= l / 2;
                }
                for (uint64_t occ = 0; occ < (uint64_t{1} << n); occ++) {
                    double e = e0;
                    for (size_t j = 0; j < n; j++) {
                        e += ((occ >> j) & 1) ? model.form().lambdas[j] : 0.0;
                    }
                    free.push_back(e);
                }
                std::sort(free.begin(), free.end());
                for (size_t k = 0; k < spec.size(); k++) {
                    worst_spec = std::max(worst_spec, std::abs(spec[k] - free[k]));
                }

                for (double t : grid) {
                    double f = exact_fidelity(enc, model, t).value;
                    double fo = oracle::oracle_fidelity(mb, enc, t);
                    auto g = enumerate_syndromes(model, t);
                    auto o = oracle::oracle_syndromes(mb, t);
                    for (size_t k = 0; k < g.size(); k++) {
                        for (int s = 0; s < 2; s++) {
                            worst_p = std::max(worst_p, std::abs(g[k].prob[s] - o[k].prob[s]));
                        }
                    }
                    worst_f = std::max(worst_f, std::abs(f - fo));
                    ResultRow row = base_row(c, "oracle-check", n, p.mu);
                    row.realization = r;
                    row.t = t;
                    row.f = f;
                    row.mode = "exact";
                    row.baseline = fo;
                    out.rows.push_back(row);
                }
                log << "oracle-check" << coords(n, p.mu, r) << " done\n";
            }
        }
    }
    out.failed = !(worst_f <= kTol && worst_p <= kTol && worst_spec <= kTol);
    out.summary["max_fidelity_deviation"] = worst_f;
    out.summary["max_probability_deviation"] = worst_p;
    out.summary["max_spectrum_deviation"] = worst_spec;
    out.summary["tolerance"] = kTol;
    out.summary["passed"] = !out.failed;
    log << "oracle-check: fidelity " << fmt(worst_f) << ", probabilities " << fmt(worst_p) << ", spectrum "
        << fmt(worst_spec) << (out.failed ? " FAILED\n" : " ok\n");
}

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw ConfigError("out: cannot write " + path.string());
    }
    f << content;
}

template <typename T>
std::vector<T> as_list(const json &v) {
    if (v.is_array()) {
        return v.get<std::vector<T>>();
    }
    return {v.get<T>()};
}

}  // namespace

const char *majmem::tools::csv_header() {
    return "experiment,n,mu,eta,disorder,seed,realization,t,F,stderr,mode,f0,t_storage,censored,xi_eff,energy,ell,"
           "baseline";
}

void ExperimentConfig::validate() const {
    if (std::find(std::begin(kCommands), std::end(kCommands), command) == std::end(kCommands)) {
        throw ConfigError("command: unknown '" + command + "'");
    }
    if (n.empty() || mu.empty() || f0.empty()) {
        throw ConfigError("n, mu, f0: lists must be non-empty");
    }
    for (size_t v : n) {
        if (v < 2) {
            throw ConfigError("n: every size must be >= 2");
        }
        if (command == "oracle-check" && v > oracle::kDefaultLimit) {
            throw ConfigError("n: oracle-check supports N <= " + std::to_string(oracle::kDefaultLimit));
        }
    }
    for (double v : f0) {
        if (!(v > 0 && v < 1)) {
            throw ConfigError("f0: thresholds must lie in (0, 1)");
        }
    }
    if (!(eta >= 0)) {
        throw ConfigError("eta: must be >= 0");
    }
    if (samples < 1 || realizations < 1 || grid_points < 2 || lyapunov_sites < 1) {
        throw ConfigError("samples, realizations, lyapunov-sites must be >= 1 and grid-points >= 2");
    }
    if (!(t_max > 0)) {
        throw ConfigError("t-max: must be > 0");
    }
    if (workers < 0) {
        throw ConfigError("workers: must be >= 0");
    }
    if (mode != "auto" && mode != "exact" && mode != "mc") {
        throw ConfigError("mode: expected auto, exact or mc");
    }
    if (command == "lyapunov-scan") {
        if (!(ratio > 0)) {
            throw ConfigError("ratio: must be > 0");
        }
        for (double m : mu) {
            if (!(m > 0)) {
                throw ConfigError("mu: lyapunov-scan needs mu > 0");
            }
        }
    }
    if (command == "pseudorandom-search" && (y1.empty() || a.empty())) {
        throw ConfigError("y1, a: grids must be non-empty");
    }
    for (size_t v : n) {
        chain_params(*this, v, mu.front());
    }
}

json ExperimentConfig::to_json() const {
    return json{{"command", command},
                {"n", n},
                {"mu", mu},
                {"eta", eta},
                {"disorder", disorder},
                {"seed", seed},
                {"samples", samples},
                {"realizations", realizations},
                {"f0", f0},
                {"t-max", t_max},
                {"grid-points", grid_points},
                {"workers", workers},
                {"out", out},
                {"mode", mode},
                {"lyapunov-sites", lyapunov_sites},
                {"ratio", ratio},
                {"y1", y1},
                {"a", a}};
}

void ExperimentConfig::merge_json(const json &j) {
    if (!j.is_object()) {
        throw ConfigError("config: top level must be an object");
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string &k = it.key();
        const json &v = it.value();
        try {
            if (k == "command") {
                command = v.get<std::string>();
            } else if (k == "n") {
                n = as_list<size_t>(v);
            } else if (k == "mu") {
                mu = as_list<double>(v);
            } else if (k == "eta") {
                eta = v.get<double>();
            } else if (k == "disorder") {
                disorder = v.get<std::string>();
            } else if (k == "seed") {
                seed = v.get<uint64_t>();
            } else if (k == "samples") {
                samples = v.get<size_t>();
            } else if (k == "realizations") {
                realizations = v.get<size_t>();
            } else if (k == "f0") {
                f0 = as_list<double>(v);
            } else if (k == "t-max") {
                t_max = v.get<double>();
            } else if (k == "grid-points") {
                grid_points = v.get<size_t>();
            } else if (k == "workers") {
                workers = v.get<int>();
            } else if (k == "out") {
                out = v.get<std::string>();
            } else if (k == "mode") {
                mode = v.get<std::string>();
            } else if (k == "lyapunov-sites") {
                lyapunov_sites = v.get<uint64_t>();
            } else if (k == "ratio") {
                ratio = v.get<double>();
            } else if (k == "y1") {
                y1 = as_list<double>(v);
            } else if (k == "a") {
                a = as_list<double>(v);
            } else {
                throw ConfigError("config: unknown key '" + k + "'");
            }
        } catch (const json::exception &e) {
            throw ConfigError("config: key '" + k + "': " + e.what());
        }
    }
}

json majmem::tools::parse_config_text(const std::string &text, const std::string &origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        size_t line = 1;
        size_t col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < text.size(); i++) {
            if (text[i] == '\n') {
                line++;
                col = 1;
            } else {
                col++;
            }
        }
        throw ConfigError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
    }
}

int majmem::tools::run(const ExperimentConfig &config, std::ostream &log) {
    auto start = std::chrono::steady_clock::now();
    Output out;
    try {
        config.validate();
        if (config.command == "fidelity-curve") {
            fidelity_curve(config, out, log);
        } else if (config.command == "storage-scaling") {
            storage_scaling(config, out, log);
        } else if (config.command == "lyapunov-scan") {
            lyapunov(config, out, log);
        } else if (config.command == "xi-scan") {
            xi_scan(config, out, log);
        } else if (config.command == "pseudorandom-search") {
            pseudorandom(config, out, log);
        } else {
            oracle_check(config, out, log);
        }

        std::filesystem::path dir(config.out);
        std::filesystem::create_directories(dir);
        std::string csv = std::string(csv_header()) + '\n';
        for (const ResultRow &r : out.rows) {
            csv += to_csv(r) + '\n';
        }
        write_file(dir / "results.csv", csv);
        json files = json::array({"results.csv"});
        for (const auto &[name, content] : out.dat) {
            write_file(dir / name, content);
            files.push_back(name);
        }
        double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        json manifest = {{"config", config.to_json()},
                         {"version", MAJMEM_VERSION},
                         {"seed", config.seed},
                         {"wall_time_seconds", wall},
                         {"files", files},
                         {"summary", out.summary}};
        write_file(dir / "manifest.json", manifest.dump(2) + "\n");
    } catch (const ConfigError &e) {
        log << "config error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError &e) {
        log << "numerical error: " << e.what() << " (residual " << fmt(e.residual()) << ")\n";
        return 3;
    } catch (const std::filesystem::filesystem_error &e) {
        log << "config error: " << e.what() << '\n';
        return 2;
    }
    return out.failed ? 3 : 0;
}
