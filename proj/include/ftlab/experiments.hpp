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

#pragma once

#include <iosfwd>

#include "ftlab/concat.hpp"
#include "ftlab/config.hpp"

namespace ftlab {

/// What an experiment run produced: the files written plus the circuit
/// hashes identifying the gadget circuitry behind the numbers.
struct RunOutputs {
    std::vector<std::string> files;
    std::vector<std::pair<std::string, uint64_t>> circuit_hashes;
};

/// Executes the configured experiment, writing CSV (and JSON, for fits and
/// comparisons) under `out_dir`. Progress goes to `progress_out` (stderr in
/// the CLI); machine-readable output goes only to files.
RunOutputs run_experiment(const ExperimentConfig& config, const std::string& out_dir, int workers,
                          std::ostream& progress_out);

/// One memory-sweep row as written to CSV.
struct SweepRow {
    double p;
    ExperimentResult result;
};

void write_results_csv(const std::string& path, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_results_csv(const std::string& path);

std::string threshold_fit_to_json(const ThresholdFit& fit);

/// Emits gnuplot-ready data and a script for a results CSV: log-log points
/// with confidence whiskers plus the fitted reference parabola, which
/// crosses the identity exactly at the pseudo-threshold. Returns the files
/// written.
std::vector<std::string> write_plot_data(const std::string& csv_path,
                                         const std::string& out_prefix,
                                         const ThresholdFit* fit);

/// A single coherent-collapse sweep point.
struct CoherentRow {
    double theta;
    uint64_t shots;
    uint64_t syndrome_hits;
    double rate;
    double expected;  // sin^2(theta/2)
    double ci_low, ci_high;
    double min_fidelity;  // worst post-round overlap with the clean codeword
};
std::vector<CoherentRow> run_coherent_collapse(const ExperimentConfig& config, int workers,
                                               const ProgressFn& progress = {});

/// Matched-rate comparison of the depolarizing and adversarial channels on
/// the one-round EC benchmark.
struct AdversaryRow {
    double p;
    std::string channel;  // "depolarizing" | "adversarial"
    uint64_t shots;
    uint64_t failures;
    double rate;
    double ci_low, ci_high;
    uint64_t heuristic_fallbacks;  // adversarial arm only
};
std::vector<AdversaryRow> run_adversary_compare(const ExperimentConfig& config, int workers,
                                                const ProgressFn& progress = {});

}  // namespace ftlab
