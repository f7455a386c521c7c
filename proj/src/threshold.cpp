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

#include "ftlab/threshold.hpp"

#include <cmath>
#include <memory>

#include "ftlab/stats.hpp"

namespace ftlab {

void MemoryExperiment::validate() const {
    if (rounds < 1) {
        throw ConfigError("memory experiment needs rounds >= 1");
    }
    if (shots < 1) {
        throw ConfigError("memory experiment needs shots >= 1");
    }
    noise.validate();
    if (noise.kind == NoiseKind::coherent && backend == BackendKind::tableau) {
        throw ConfigError("coherent noise requires the dense backend");
    }
    if (noise.kind == NoiseKind::adversarial &&
        noise.strategy == AdversaryStrategy::exhaustive_worst_case) {
        throw ConfigError("exhaustive adversary runs through the adversary-compare experiment");
    }
}

void ExperimentResult::finalize() {
    uint64_t effective = shots - aborts;
    p_logical = effective ? double(failures) / double(effective) : 0.0;
    auto ci = wilson_interval(failures, effective ? effective : 1);
    ci_low = ci.low;
    ci_high = ci.high;
}

ExperimentResult run_memory(const MemoryExperiment& experiment, int workers,
                            const ProgressFn& progress) {
    experiment.validate();
    const uint32_t kRegister = 21;
    const SteaneBlock data = SteaneBlock::contiguous(0, 0);
    const SteaneBlock ancilla = SteaneBlock::contiguous(7, 1);
    const SteaneBlock partner = SteaneBlock::contiguous(14, 2);
    const SteaneGadgets gadgets(kRegister, data, ancilla, partner);
    const int expected = experiment.input == LogicalInput::one ? 1 : 0;
    const char readout_basis = experiment.input == LogicalInput::plus ? 'X' : 'Z';

    GadgetOptions noisy_options;
    noisy_options.ancilla = AncillaMode::verified;
    noisy_options.max_retries = experiment.max_retries;
    GadgetOptions ideal_options;
    ideal_options.ancilla = AncillaMode::ideal;

    ShotTallies tallies = run_shot_pool(
        experiment.shots, workers, progress, [&]() -> std::function<ShotOutcome(uint64_t)> {
            auto state = std::make_shared<SimState>(experiment.backend, kRegister);
            return [&, state](uint64_t shot) -> ShotOutcome {
                state->reset();
                Rng rng = Rng::for_shot(experiment.seed, shot);
                ideal_encode(*state, data, experiment.input, rng);
                try {
                    for (int r = 0; r < experiment.rounds; r++) {
                        gadgets.ec_round(*state, experiment.noise, rng, noisy_options);
                    }
                } catch (const AncillaExhausted&) {
                    return ShotOutcome::abort;
                }
                // Ideal decode: one noiseless EC round, then destructive
                // logical readout in the input's basis.
                gadgets.ec_round(*state, NoiseModel::none(), rng, ideal_options);
                auto m = measure_logical_destructive(*state, data, readout_basis, rng);
                return m.logical_bit != expected ? ShotOutcome::failure : ShotOutcome::ok;
            };
        });
    ExperimentResult result;
    result.shots = experiment.shots;
    result.seed = experiment.seed;
    result.failures = tallies.failures;
    result.aborts = tallies.aborts;
    result.circuit_hash = gadgets.ec_circuit_hash();
    result.finalize();
    return result;
}

ExperimentResult run_unencoded_memory(double p, int rounds, uint64_t shots, uint64_t seed,
                                      int workers) {
    // One qubit, `rounds` bare idle steps at idle rate p, ideal readout.
    Circuit idle(1);
    for (int r = 0; r < rounds; r++) {
        idle.begin_step();
    }
    NoiseModel noise = NoiseModel::depolarizing(0.0);
    noise.p_idle = p;
    ShotTallies tallies = run_shot_pool(
        shots, workers, {}, [&]() -> std::function<ShotOutcome(uint64_t)> {
            auto state = std::make_shared<SimState>(BackendKind::tableau, 1);
            return [&, state](uint64_t shot) -> ShotOutcome {
                state->reset();
                Rng rng = Rng::for_shot(seed, shot);
                ShotRecord record;
                RunOptions options;
                options.log_errors = false;
                execute_circuit(*state, idle, noise, rng, record, options);
                return state->measure(0, 'Z', rng) != 0 ? ShotOutcome::failure : ShotOutcome::ok;
            };
        });
    ExperimentResult result;
    result.shots = shots;
    result.seed = seed;
    result.failures = tallies.failures;
    result.aborts = tallies.aborts;
    result.circuit_hash = idle.content_hash();
    result.finalize();
    return result;
}

ThresholdFit fit_threshold(const std::vector<ThresholdPoint>& points) {
    ThresholdFit fit;
    std::vector<double> x, y, w;
    for (size_t i = 0; i < points.size(); i++) {
        const auto& pt = points[i];
        if (pt.result.failures < 10) {
            fit.excluded.push_back(i);
            fit.warnings.push_back("excluded p=" + std::to_string(pt.p) + ": only " +
                                   std::to_string(pt.result.failures) + " failures");
            continue;
        }
        uint64_t effective = pt.result.shots - pt.result.aborts;
        double pl = pt.result.p_logical;
        x.push_back(std::log(pt.p));
        y.push_back(std::log(pl));
        // var(log p) ~ (1-p)/(p n) by the delta method.
        double var = (1.0 - pl) / (pl * double(effective));
        w.push_back(1.0 / var);
    }
    if (x.size() < 3) {
        throw FitError("threshold fit needs at least 3 points with >= 10 failures, have " +
                       std::to_string(x.size()));
    }
    LinearFit free_fit = weighted_linear_fit(x, y, w);
    fit.slope = free_fit.slope;
    fit.slope_stderr = free_fit.slope_stderr;
    fit.intercept = free_fit.intercept;
    fit.intercept_stderr = free_fit.intercept_stderr;
    fit.residuals = free_fit.residuals;

    auto [log_c, log_c_se] = weighted_intercept_fixed_slope(x, y, w, 2.0);
    fit.c = std::exp(log_c);
    fit.c_ci_low = std::exp(log_c - 1.959963984540054 * log_c_se);
    fit.c_ci_high = std::exp(log_c + 1.959963984540054 * log_c_se);
    fit.p_threshold = 1.0 / fit.c;
    fit.p_threshold_ci_low = 1.0 / fit.c_ci_high;
    fit.p_threshold_ci_high = 1.0 / fit.c_ci_low;
    return fit;
}

ConcatProjection concat_project(double p, double p_threshold, int k) {
    if (p <= 0 || p_threshold <= 0) {
        throw std::invalid_argument("rates must be positive");
    }
    if (k < 0) {
        throw std::invalid_argument("concatenation level must be >= 0");
    }
    if (k > 22) {
        throw std::invalid_argument("7^k overflows past k = 22");
    }
    ConcatProjection out;
    out.p = p;
    out.p_threshold = p_threshold;
    out.levels = k;
    // Closed form in log space: log p_k = log p_T + 2^k (log p - log p_T).
    double log_pk = std::log(p_threshold) + std::ldexp(1.0, k) * (std::log(p) - std::log(p_threshold));
    out.p_k = std::exp(log_pk);
    out.qubits_per_logical = 1;
    for (int j = 0; j < k; j++) {
        out.qubits_per_logical *= 7;
    }
    // Cross-check against the iterated quadratic map p <- C p^2, C = 1/p_T,
    // wherever the iteration stays in normal double range.
    double iterated = p;
    bool in_range = true;
    for (int j = 0; j < k && in_range; j++) {
        iterated = iterated * iterated / p_threshold;
        in_range = iterated > 1e-290 && iterated < 1e290;
    }
    if (in_range && out.p_k > 1e-290) {
        double rel = std::abs(iterated - out.p_k) / out.p_k;
        if (rel > 1e-12) {
            throw std::logic_error("closed form and iterated map disagree: rel=" +
                                   std::to_string(rel));
        }
    }
    return out;
}

std::pair<int, uint64_t> levels_for_target(double p, double p_threshold, double epsilon) {
    if (epsilon <= 0) {
        throw std::invalid_argument("epsilon must be positive");
    }
    if (p >= p_threshold) {
        throw std::domain_error("p >= p_threshold: concatenation does not converge");
    }
    for (int k = 0; k <= 22; k++) {
        double log_pk =
            std::log(p_threshold) + std::ldexp(1.0, k) * (std::log(p) - std::log(p_threshold));
        if (log_pk <= std::log(epsilon)) {
            return {k, concat_project(p, p_threshold, k).qubits_per_logical};
        }
    }
    throw std::domain_error("target needs more than 22 levels; overhead not representable");
}

}  // namespace ftlab
