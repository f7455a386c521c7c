// Copyright 2026 The ftlab authors
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

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ftlab/experiments.hpp"
#include "ftlab/verify.hpp"
#include "ftlab/version.hpp"

namespace {

using namespace ftlab;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

int cmd_verify(const std::string& suite) {
    std::vector<SuiteResult> results = run_verification_suites(suite);
    bool all_passed = true;
    for (const SuiteResult& r : results) {
        if (r.passed) {
            std::cout << "PASS " << r.name << " (" << r.checks << " checks)\n";
        } else {
            all_passed = false;
            std::cout << "FAIL " << r.name << " (" << r.failures.size() << " of " << r.checks
                      << " checks failed)\n";
            for (size_t i = 0; i < r.failures.size() && i < 5; i++) {
                std::cout << "     " << r.failures[i] << "\n";
            }
        }
    }
    return all_passed ? kExitOk : kExitFailure;
}

int cmd_run(const std::string& config_path, const std::string& out_dir, int workers,
            bool seed_given, uint64_t seed_override) {
    ExperimentConfig config = ExperimentConfig::parse_file(config_path);
    if (seed_given) {
        config.seed = seed_override;
    }
    std::filesystem::create_directories(out_dir);
    auto start = std::chrono::steady_clock::now();
    RunOutputs outputs = run_experiment(config, out_dir, workers, std::cerr);
    auto stop = std::chrono::steady_clock::now();

    RunManifest manifest;
    manifest.config_snapshot = config.canonical_text();
    manifest.tool_version = kVersion;
    manifest.circuit_hashes = outputs.circuit_hashes;
    manifest.wall_seconds = std::chrono::duration<double>(stop - start).count();
    manifest.output_files = outputs.files;
    std::string manifest_path = out_dir + "/" + config.output_prefix + "_manifest.json";
    {
        std::ofstream out(manifest_path);
        if (!out) {
            throw std::runtime_error("cannot write manifest: " + manifest_path);
        }
        out << manifest.to_json();
    }
    for (const std::string& path : outputs.files) {
        if (!std::filesystem::exists(path) || std::filesystem::file_size(path) == 0) {
            throw std::runtime_error("declared output missing or empty: " + path);
        }
    }
    std::cerr << "wrote " << manifest_path << "\n";
    return kExitOk;
}

int cmd_plotdata(const std::string& csv_path, const std::string& fit_path,
                 const std::string& out_prefix) {
    ThresholdFit fit;
    ThresholdFit* fit_ptr = nullptr;
    if (!fit_path.empty()) {
        std::ifstream in(fit_path);
        if (!in) {
            throw ConfigError("cannot open fit file: " + fit_path);
        }
        nlohmann::json root = nlohmann::json::parse(in, nullptr, false);
        if (root.is_discarded() || !root.contains("c") || !root.contains("p_threshold")) {
            throw ConfigError("fit file lacks c/p_threshold fields: " + fit_path);
        }
        fit.c = root["c"].get<double>();
        fit.p_threshold = root["p_threshold"].get<double>();
        fit_ptr = &fit;
    }
    std::string prefix = out_prefix.empty()
                             ? std::filesystem::path(csv_path).replace_extension("").string()
                             : out_prefix;
    for (const std::string& path : write_plot_data(csv_path, prefix, fit_ptr)) {
        std::cout << path << "\n";
    }
    return kExitOk;
}

int cmd_concat(double p, double p_threshold, int k, double epsilon, bool has_k,
               bool has_epsilon) {
    int depth;
    if (has_k == has_epsilon) {
        throw ConfigError("give exactly one of --k or --epsilon");
    }
    if (has_k) {
        depth = k;
    } else {
        try {
            depth = levels_for_target(p, p_threshold, epsilon).first;
        } catch (const std::domain_error& e) {
            throw ConfigError(std::string(e.what()) +
                              " (p is at or above threshold; no level count reaches the target)");
        }
    }
    std::cout << "p = " << p << ", p_threshold = " << p_threshold << "\n";
    std::cout << "k\tp_k\tqubits_per_logical\n";
    for (int level = 1; level <= depth; level++) {
        ConcatProjection proj = concat_project(p, p_threshold, level);
        std::cout << level << "\t" << proj.p_k << "\t" << proj.qubits_per_logical << "\n";
    }
    if (depth == 0) {
        std::cout << "0\t" << p << "\t1\n";
    }
    return kExitOk;
}

int cmd_decode(const std::string& word_text) {
    Word7 word = word_from_string(word_text);
    auto fix = hamming().correct(word);
    std::cout << "word " << word_to_string(word) << " -> codeword "
              << word_to_string(fix.corrected);
    if (fix.flipped_position) {
        std::cout << " (flipped position " << fix.flipped_position << ")";
    } else {
        std::cout << " (no correction)";
    }
    std::cout << ", logical parity " << hamming().codeword_parity(fix.corrected) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steane-code fault-tolerance laboratory"};
    app.set_version_flag("--version", ftlab::kVersion);
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run the deterministic self-check suites");
    std::string suite;
    verify->add_option("--suite", suite, "run only the named suite");

    auto* run = app.add_subcommand("run", "execute an experiment from a config file");
    std::string config_path, out_dir = ".";
    uint64_t seed_override = 0;
    int workers = int(std::thread::hardware_concurrency());
    if (workers < 1) {
        workers = 1;
    }
    run->add_option("config", config_path, "JSON experiment config")->required();
    auto* seed_opt = run->add_option("--seed", seed_override, "override the config seed");
    run->add_option("--workers", workers, "worker pool size");
    run->add_option("--out-dir", out_dir, "output directory");

    auto* plot = app.add_subcommand("plotdata", "emit gnuplot data for a results CSV");
    std::string csv_path, fit_path, out_prefix;
    plot->add_option("csv", csv_path, "results CSV")->required();
    plot->add_option("--fit", fit_path, "threshold fit JSON to anchor the reference line");
    plot->add_option("--out", out_prefix, "output path prefix");

    auto* concat = app.add_subcommand("concat", "project the concatenation recursion");
    double p = 0, p_threshold = 0, epsilon = 0;
    int k = 0;
    concat->add_option("--p", p, "physical error rate")->required();
    concat->add_option("--pt", p_threshold, "threshold rate (1/C)")->required();
    auto* k_opt = concat->add_option("--k", k, "levels of concatenation");
    auto* eps_opt = concat->add_option("--epsilon", epsilon, "target logical rate");

    auto* decode = app.add_subcommand("decode", "classically decode a 7-bit word");
    std::string word_text;
    decode->add_option("--word", word_text, "7-bit word, position 1 first")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            return cmd_verify(suite);
        }
        if (run->parsed()) {
            return cmd_run(config_path, out_dir, workers, seed_opt->count() > 0, seed_override);
        }
        if (plot->parsed()) {
            return cmd_plotdata(csv_path, fit_path, out_prefix);
        }
        if (concat->parsed()) {
            return cmd_concat(p, p_threshold, k, epsilon, k_opt->count() > 0,
                              eps_opt->count() > 0);
        }
        if (decode->parsed()) {
            return cmd_decode(word_text);
        }
    } catch (const ftlab::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitConfig;
}
