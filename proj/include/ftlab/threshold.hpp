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

#include <functional>

#include "ftlab/gadgets.hpp"
#include "ftlab/noise.hpp"
#include "ftlab/shot_pool.hpp"

namespace ftlab {

/// Encode ideally, run noisy EC rounds, decode ideally; a failure is a
/// flipped logical value after the ideal decode.
struct MemoryExperiment {
    LogicalInput input = LogicalInput::zero;
    int rounds = 1;
    NoiseModel noise;
    uint64_t shots = 10000;
    uint64_t seed = 1;
    BackendKind backend = BackendKind::tableau;
    int max_retries = 10;

    void validate() const;
};

struct ExperimentResult {
    uint64_t shots = 0;
    uint64_t failures = 0;
    uint64_t aborts = 0;   // ancilla supply exhausted; excluded from the rate
    double p_logical = 0;  // failures / (shots - aborts)
    double ci_low = 0, ci_high = 1;  // 95% Wilson
    uint64_t seed = 0;
    uint64_t circuit_hash = 0;

    void finalize();  // fills p_logical and the interval from the tallies
};

/// Monte Carlo memory experiment on one 7-qubit block (21-qubit register:
/// data + EC ancilla + verification partner). Deterministic in
/// (experiment, seed) for any worker count.
ExperimentResult run_memory(const MemoryExperiment& experiment, int workers = 1,
                            const ProgressFn& progress = {});

/// Bare single qubit idling for `rounds` steps under depolarizing noise —
/// the unencoded reference the encoded memory is judged against.
ExperimentResult run_unencoded_memory(double p, int rounds, uint64_t shots, uint64_t seed,
                                      int workers = 1);

struct ThresholdPoint {
    double p;
    ExperimentResult result;
};

/// Quadratic-law fit of memory data. The slope-free fit checks the p^2
/// scaling; the slope-2 fit pins the coefficient: p_logical = C p^2, and
/// p_threshold = 1/C is the break-even physical rate.
struct ThresholdFit {
    double c = 0;
    double c_ci_low = 0, c_ci_high = 0;
    double p_threshold = 0;
    double p_threshold_ci_low = 0, p_threshold_ci_high = 0;
    double slope = 0, slope_stderr = 0;
    double intercept = 0, intercept_stderr = 0;  // free fit, log-log
    std::vector<double> residuals;               // free fit, usable points
    std::vector<size_t> excluded;                // indices with < 10 failures
    std::vector<std::string> warnings;
};

/// Weighted log-log least squares over points with >= 10 failures; fewer
/// than 3 usable points raises FitError.
ThresholdFit fit_threshold(const std::vector<ThresholdPoint>& points);

/// Logical rate after k levels of concatenation under the quadratic
/// recursion, evaluated in closed form and cross-checked against the
/// iterated map p <- p^2 / p_threshold.
struct ConcatProjection {
    double p = 0;
    double p_threshold = 0;
    int levels = 0;
    double p_k = 0;
    uint64_t qubits_per_logical = 1;  // 7^k
};
ConcatProjection concat_project(double p, double p_threshold, int k);

/// Smallest k with p_k <= epsilon, plus the 7^k qubit overhead.
/// Throws std::domain_error when p >= p_threshold (no convergence).
std::pair<int, uint64_t> levels_for_target(double p, double p_threshold, double epsilon);

}  // namespace ftlab
