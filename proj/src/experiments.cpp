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

#include "ftlab/experiments.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "ftlab/stats.hpp"

namespace ftlab {

namespace {

std::string format_double(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", v);
    return buffer;
}

std::string hash_hex(uint64_t h) {
    char buffer[24];
    std::snprintf(buffer, sizeof buffer, "%016llx", (unsigned long long)h);
    return buffer;
}

void require_writable(std::ofstream& out, const std::string& path) {
    if (!out) {
        throw std::runtime_error("cannot write output file: " + path);
    }
}

ProgressFn make_progress_printer(std::ostream& out, const std::string& label) {
    auto start = std::chrono::steady_clock::now();
    auto last = std::make_shared<std::chrono::steady_clock::time_point>(start);
    return [&out, label, start, last](uint64_t done, uint64_t total) {
        auto now = std::chrono::steady_clock::now();
        if (done < total && now - *last < std::chrono::seconds(2)) {
            return;
        }
        *last = now;
        double elapsed = std::chrono::duration<double>(now - start).count();
        double rate = done ? double(done) / elapsed : 0.0;
        double eta = rate > 0 ? double(total - done) / rate : 0.0;
        out << label << ": " << done << "/" << total << " shots, " << uint64_t(rate)
            << "/s, eta " << uint64_t(eta) << "s\n";
        out.flush();
    };
}

}  // namespace

void write_results_csv(const std::string& path, const std::vector<SweepRow>& rows) {
    std::ofstream out(path);
    require_writable(out, path);
    out << "p,shots,failures,aborts,p_logical,ci_low,ci_high,seed,circuit_hash\n";
    for (const SweepRow& row : rows) {
        out << format_double(row.p) << "," << row.result.shots << "," << row.result.failures
            << "," << row.result.aborts << "," << format_double(row.result.p_logical) << ","
            << format_double(row.result.ci_low) << "," << format_double(row.result.ci_high)
            << "," << row.result.seed << "," << hash_hex(row.result.circuit_hash) << "\n";
    }
}

std::vector<SweepRow> read_results_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read CSV: " + path);
    }
    std::string header;
    if (!std::getline(in, header)) {
        throw std::runtime_error("CSV is empty: " + path);
    }
    if (header != "p,shots,failures,aborts,p_logical,ci_low,ci_high,seed,circuit_hash") {
        throw std::runtime_error("CSV column mismatch, expected the results schema in: " + path);
    }
    std::vector<SweepRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        SweepRow row;
        std::istringstream fields(line);
        std::string field;
        auto next = [&]() {
            if (!std::getline(fields, field, ',')) {
                throw std::runtime_error("short CSV row: " + line);
            }
            return field;
        };
        row.p = std::stod(next());
        row.result.shots = std::stoull(next());
        row.result.failures = std::stoull(next());
        row.result.aborts = std::stoull(next());
        row.result.p_logical = std::stod(next());
        row.result.ci_low = std::stod(next());
        row.result.ci_high = std::stod(next());
        row.result.seed = std::stoull(next());
        row.result.circuit_hash = std::stoull(next(), nullptr, 16);
        rows.push_back(row);
    }
    if (rows.empty()) {
        throw std::runtime_error("CSV has no data rows: " + path);
    }
    return rows;
}

std::string threshold_fit_to_json(const ThresholdFit& fit) {
    nlohmann::json root;
    root["c"] = fit.c;
    root["c_ci"] = {fit.c_ci_low, fit.c_ci_high};
    root["p_threshold"] = fit.p_threshold;
    root["p_threshold_ci"] = {fit.p_threshold_ci_low, fit.p_threshold_ci_high};
    root["slope"] = fit.slope;
    root["slope_stderr"] = fit.slope_stderr;
    root["intercept"] = fit.intercept;
    root["intercept_stderr"] = fit.intercept_stderr;
    root["residuals"] = fit.residuals;
    root["excluded_points"] = fit.excluded;
    root["warnings"] = fit.warnings;
    root["rate_normalization"] = "per EC round";
    return root.dump(2) + "\n";
}

std::vector<std::string> write_plot_data(const std::string& csv_path,
                                         const std::string& out_prefix,
                                         const ThresholdFit* fit) {
    std::vector<SweepRow> rows = read_results_csv(csv_path);
    ThresholdFit local;
    if (!fit) {
        local = fit_threshold([&] {
            std::vector<ThresholdPoint> points;
            for (const SweepRow& row : rows) {
                points.push_back(ThresholdPoint{row.p, row.result});
            }
            return points;
        }());
        fit = &local;
    }
    std::string dat_path = out_prefix + ".dat";
    std::string gp_path = out_prefix + ".gp";
    {
        std::ofstream out(dat_path);
        require_writable(out, dat_path);
        out << "# p p_logical ci_low ci_high\n";
        for (const SweepRow& row : rows) {
            out << format_double(row.p) << " " << format_double(row.result.p_logical) << " "
                << format_double(row.result.ci_low) << " " << format_double(row.result.ci_high)
                << "\n";
        }
        // Reference parabola p_L = C p^2 anchored at the fit; it crosses
        // p_L = p exactly at the pseudo-threshold.
        double p_min = rows.front().p, p_max = rows.front().p;
        for (const SweepRow& row : rows) {
            p_min = std::min(p_min, row.p);
            p_max = std::max(p_max, row.p);
        }
        out << "\n\n# reference slope-2 line: p_L = C p^2, C = "
            << format_double(fit->c) << "\n";
        for (double p : {p_min, fit->p_threshold, p_max}) {
            out << format_double(p) << " " << format_double(fit->c * p * p) << "\n";
        }
    }
    {
        std::ofstream out(gp_path);
        require_writable(out, gp_path);
        out << "set logscale xy\n"
            << "set xlabel 'physical error rate p'\n"
            << "set ylabel 'logical error rate per EC round'\n"
            << "set key left top\n"
            << "plot '" << dat_path << "' index 0 using 1:2:3:4 with yerrorbars title 'measured', \\\n"
            << "     '" << dat_path << "' index 1 using 1:2 with lines title 'C p^2 (C = "
            << format_double(fit->c) << ")', \\\n"
            << "     x with lines dashtype 2 title 'p_L = p'\n";
    }
    return {dat_path, gp_path};
}

std::vector<CoherentRow> run_coherent_collapse(const ExperimentConfig& config, int workers,
                                               const ProgressFn& progress) {
    const SteaneBlock data = SteaneBlock::contiguous(0, 0);
    const SteaneBlock ancilla = SteaneBlock::contiguous(7, 1);
    const SteaneGadgets gadgets(14, data, ancilla);
    GadgetOptions ideal;
    ideal.ancilla = AncillaMode::ideal;

    // Target amplitudes of the clean logical zero over the data block.
    std::array<std::complex<double>, 128> target{};
    {
        DenseState clean = encode_ideal(0);
        for (uint64_t w = 0; w < 128; w++) {
            target[w] = clean.amplitude(w);
        }
    }

    std::vector<CoherentRow> out;
    for (size_t t = 0; t < config.thetas.size(); t++) {
        const double theta = config.thetas[t];
        std::atomic<uint64_t> hits{0};
        std::atomic<double> min_fidelity{1.0};
        auto update_min = [&](double fid) {
            double current = min_fidelity.load(std::memory_order_relaxed);
            while (fid < current &&
                   !min_fidelity.compare_exchange_weak(current, fid, std::memory_order_relaxed)) {
            }
        };
        run_shot_pool(
            config.shots, workers, progress, [&]() -> std::function<ShotOutcome(uint64_t)> {
                auto state = std::make_shared<SimState>(BackendKind::dense, 14);
                return [&, state, theta, t](uint64_t shot) -> ShotOutcome {
                    state->reset();
                    Rng rng = Rng::for_shot(config.seed + t, shot);
                    inject_encoded(state->dense(), data, 1, 0);
                    int pos = 1 + int(rng.below(7));
                    state->apply_rz(data.qubit(pos), theta);
                    GadgetReport report =
                        gadgets.ec_round(*state, NoiseModel::none(), rng, ideal);
                    if (report.syndromes[1].syndrome != 0) {
                        hits.fetch_add(1);
                    }
                    // Post-round overlap of the data block with |0_L>.
                    const auto& amps = state->dense().amplitudes();
                    double fid = 0;
                    for (uint64_t env = 0; env < amps.size() >> 7; env++) {
                        std::complex<double> overlap{};
                        for (uint64_t w = 0; w < 128; w++) {
                            overlap += std::conj(target[w]) * amps[(env << 7) | w];
                        }
                        fid += std::norm(overlap);
                    }
                    update_min(fid);
                    return ShotOutcome::ok;
                };
            });
        CoherentRow row;
        row.theta = theta;
        row.shots = config.shots;
        row.syndrome_hits = hits.load();
        row.rate = double(row.syndrome_hits) / double(config.shots);
        row.expected = std::pow(std::sin(theta / 2), 2);
        auto ci = wilson_interval(row.syndrome_hits, config.shots);
        row.ci_low = ci.low;
        row.ci_high = ci.high;
        row.min_fidelity = min_fidelity.load();
        out.push_back(row);
    }
    return out;
}

std::vector<AdversaryRow> run_adversary_compare(const ExperimentConfig& config, int workers,
                                                const ProgressFn& progress) {
    // Static one-round EC benchmark: ideal-ancilla preparation circuits
    // plus both extraction stages, with the classical corrections applied
    // afterwards and an ideal decode as referee.
    const uint32_t kRegister = 14;
    const SteaneBlock data = SteaneBlock::contiguous(0, 0);
    const SteaneBlock ancilla = SteaneBlock::contiguous(7, 1);
    const SteaneGadgets gadgets(kRegister, data, ancilla);
    GadgetOptions ideal;
    ideal.ancilla = AncillaMode::ideal;

    Circuit benchmark = gadgets.ideal_prep_circuit();
    benchmark.extend(gadgets.plus_rotation_circuit());
    benchmark.extend(gadgets.extraction_circuit('X'));
    benchmark.extend(gadgets.ideal_prep_circuit());
    benchmark.extend(gadgets.extraction_circuit('Z'));
    const NoiseSiteTable sites = enumerate_noise_sites(benchmark);
    constexpr size_t kMaxExhaustiveAssignments = 20000;

    // Runs the benchmark with the given noise/script, applies the decoded
    // corrections, referees with an ideal round, and reports failure.
    auto run_one = [&](SimState& state, const NoiseModel& noise, Rng& rng,
                       const RunOptions& options) -> bool {
        state.reset();
        ideal_encode(state, data, LogicalInput::zero, rng);
        ShotRecord record;
        execute_circuit(state, benchmark, noise, rng, record, options);
        size_t m = record.outcomes.size();
        Word7 word_x = 0, word_z = 0;
        for (int i = 0; i < 7; i++) {
            word_x |= Word7((record.outcomes[m - 14 + i] & 1) << i);
            word_z |= Word7((record.outcomes[m - 7 + i] & 1) << i);
        }
        int pos_x = hamming().syndrome_position(hamming().syndrome(word_x));
        int pos_z = hamming().syndrome_position(hamming().syndrome(word_z));
        if (pos_x) {
            state.apply_pauli(PauliOperator::single(kRegister, data.qubit(pos_x), 'X'));
        }
        if (pos_z) {
            state.apply_pauli(PauliOperator::single(kRegister, data.qubit(pos_z), 'Z'));
        }
        gadgets.ec_round(state, NoiseModel::none(), rng, ideal);
        return measure_logical_destructive(state, data, 'Z', rng).logical_bit != 0;
    };

    std::vector<AdversaryRow> out;
    for (double p : config.p_grid) {
        // Depolarizing arm, matched location rate on gates and idles.
        NoiseModel depol = NoiseModel::depolarizing(p);
        depol.p_idle = p;
        depol.two_qubit_rule = config.noise.two_qubit_rule;
        std::atomic<uint64_t> depol_failures{0};
        run_shot_pool(config.shots, workers, progress,
                      [&]() -> std::function<ShotOutcome(uint64_t)> {
                          auto state = std::make_shared<SimState>(BackendKind::tableau, kRegister);
                          return [&, state](uint64_t shot) -> ShotOutcome {
                              Rng rng = Rng::for_shot(config.seed, shot);
                              bool failed = run_one(*state, depol, rng, {});
                              if (failed) {
                                  depol_failures.fetch_add(1);
                              }
                              return failed ? ShotOutcome::failure : ShotOutcome::ok;
                          };
                      });

        // Adversarial arm: same location statistics, worst-case types.
        std::atomic<uint64_t> adv_failures{0}, fallbacks{0};
        run_shot_pool(
            config.shots, workers, progress, [&]() -> std::function<ShotOutcome(uint64_t)> {
                auto state = std::make_shared<SimState>(BackendKind::tableau, kRegister);
                return [&, state](uint64_t shot) -> ShotOutcome {
                    Rng loc_rng = Rng::for_shot(config.seed ^ 0x5adbeef, shot);
                    std::vector<size_t> hits = sample_adversarial_locations(sites, p, loc_rng);
                    // Judge assignments under common randomness: the oracle
                    // replays the same seeded shot for each candidate.
                    const uint64_t replay_seed = config.seed + 7919 * shot;
                    FailureOracle oracle = [&](const std::vector<ErrorEvent>& events) {
                        std::map<size_t, PauliOperator> script;
                        for (const ErrorEvent& e : events) {
                            script[e.site_ordinal] = e.pauli;
                        }
                        RunOptions options;
                        options.scripted = &script;
                        Rng rng = Rng::for_shot(replay_seed, 0);
                        return run_one(*state, NoiseModel::none(), rng, options) ? 1.0 : 0.0;
                    };
                    // Fall back to the Y heuristic when enumeration blows up.
                    size_t assignments = 1;
                    for (size_t ord : hits) {
                        const NoiseSite& site = sites.sites[ord];
                        assignments *=
                            (site.idle || !is_two_qubit(site.location.gate)) ? 3 : 15;
                        if (assignments > kMaxExhaustiveAssignments) {
                            break;
                        }
                    }
                    AdversaryStrategy strategy = config.noise.strategy;
                    if (strategy == AdversaryStrategy::exhaustive_worst_case &&
                        assignments > kMaxExhaustiveAssignments) {
                        strategy = AdversaryStrategy::all_y_heuristic;
                        fallbacks.fetch_add(1);
                    }
                    if (hits.empty()) {
                        return ShotOutcome::ok;  // error-free shots cannot fail
                    }
                    AdversaryResult result =
                        adversary_assign(hits, sites, kRegister, strategy, oracle);
                    if (result.fell_back_to_heuristic) {
                        fallbacks.fetch_add(1);
                    }
                    bool failed = result.score > 0.5;
                    if (failed) {
                        adv_failures.fetch_add(1);
                    }
                    return failed ? ShotOutcome::failure : ShotOutcome::ok;
                };
            });

        auto push_row = [&](const char* channel, uint64_t failures, uint64_t fallback_count) {
            AdversaryRow row;
            row.p = p;
            row.channel = channel;
            row.shots = config.shots;
            row.failures = failures;
            row.rate = double(failures) / double(config.shots);
            auto ci = wilson_interval(failures, config.shots);
            row.ci_low = ci.low;
            row.ci_high = ci.high;
            row.heuristic_fallbacks = fallback_count;
            out.push_back(row);
        };
        push_row("depolarizing", depol_failures.load(), 0);
        push_row("adversarial", adv_failures.load(), fallbacks.load());
    }
    return out;
}

RunOutputs run_experiment(const ExperimentConfig& config, const std::string& out_dir, int workers,
                          std::ostream& progress_out) {
    config.validate();
    RunOutputs outputs;
    auto path_for = [&](const std::string& suffix) {
        return out_dir + "/" + config.output_prefix + suffix;
    };

    switch (config.kind) {
        case ExperimentKind::memory:
        case ExperimentKind::level1:
        case ExperimentKind::threshold_sweep: {
            std::vector<double> grid = config.p_grid;
            if (grid.empty()) {
                grid.push_back(config.noise.p_gate);
            }
            std::vector<SweepRow> rows;
            for (double p : grid) {
                MemoryExperiment experiment;
                experiment.input = config.input;
                experiment.rounds = config.rounds;
                experiment.noise = config.noise;
                experiment.noise.p_gate = p;
                experiment.shots = config.shots;
                experiment.seed = config.seed;
                experiment.backend = config.backend;
                experiment.max_retries = config.max_retries;
                std::ostringstream label;
                label << experiment_kind_name(config.kind) << " p=" << p;
                ProgressFn progress = make_progress_printer(progress_out, label.str());
                ExperimentResult result =
                    config.kind == ExperimentKind::level1
                        ? run_level1_memory(experiment, workers, progress)
                        : run_memory(experiment, workers, progress);
                rows.push_back(SweepRow{p, result});
            }
            std::string csv = path_for(".csv");
            write_results_csv(csv, rows);
            outputs.files.push_back(csv);
            outputs.circuit_hashes.emplace_back("ec_round", rows.front().result.circuit_hash);
            if (config.kind == ExperimentKind::threshold_sweep) {
                std::vector<ThresholdPoint> points;
                for (const SweepRow& row : rows) {
                    points.push_back(ThresholdPoint{row.p, row.result});
                }
                ThresholdFit fit = fit_threshold(points);
                std::string fit_path = path_for("_fit.json");
                std::ofstream out(fit_path);
                require_writable(out, fit_path);
                out << threshold_fit_to_json(fit);
                outputs.files.push_back(fit_path);
            }
            break;
        }
        case ExperimentKind::coherent_collapse: {
            ProgressFn progress = make_progress_printer(progress_out, "coherent-collapse");
            std::vector<CoherentRow> rows = run_coherent_collapse(config, workers, progress);
            std::string csv = path_for(".csv");
            std::ofstream out(csv);
            require_writable(out, csv);
            out << "theta,shots,syndrome_hits,rate,expected,ci_low,ci_high,min_fidelity,seed\n";
            for (const CoherentRow& row : rows) {
                out << format_double(row.theta) << "," << row.shots << "," << row.syndrome_hits
                    << "," << format_double(row.rate) << "," << format_double(row.expected)
                    << "," << format_double(row.ci_low) << "," << format_double(row.ci_high)
                    << "," << format_double(row.min_fidelity) << "," << config.seed << "\n";
            }
            outputs.files.push_back(csv);
            break;
        }
        case ExperimentKind::adversary_compare: {
            ProgressFn progress = make_progress_printer(progress_out, "adversary-compare");
            std::vector<AdversaryRow> rows = run_adversary_compare(config, workers, progress);
            std::string csv = path_for(".csv");
            std::ofstream out(csv);
            require_writable(out, csv);
            out << "p,channel,shots,failures,rate,ci_low,ci_high,heuristic_fallbacks,seed\n";
            for (const AdversaryRow& row : rows) {
                out << format_double(row.p) << "," << row.channel << "," << row.shots << ","
                    << row.failures << "," << format_double(row.rate) << ","
                    << format_double(row.ci_low) << "," << format_double(row.ci_high) << ","
                    << row.heuristic_fallbacks << "," << config.seed << "\n";
            }
            outputs.files.push_back(csv);
            // Per-p z-scores comparing the two channels.
            nlohmann::json summary = nlohmann::json::array();
            for (size_t i = 0; i + 1 < rows.size(); i += 2) {
                double z = two_proportion_z(rows[i + 1].failures, rows[i + 1].shots,
                                            rows[i].failures, rows[i].shots);
                summary.push_back({{"p", rows[i].p},
                                   {"depolarizing_rate", rows[i].rate},
                                   {"adversarial_rate", rows[i + 1].rate},
                                   {"z_adversarial_minus_depolarizing", z}});
            }
            std::string json_path = path_for("_compare.json");
            std::ofstream jout(json_path);
            require_writable(jout, json_path);
            jout << summary.dump(2) << "\n";
            outputs.files.push_back(json_path);
            break;
        }
    }
    return outputs;
}

}  // namespace ftlab
