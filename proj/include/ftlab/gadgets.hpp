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

#include <optional>

#include "ftlab/errors.hpp"
#include "ftlab/executor.hpp"
#include "ftlab/steane.hpp"

namespace ftlab {

/// Where gadget ancillas come from: the two-copy verified protocol under
/// the run's noise model, or ideal in-place construction (used for the
/// noiseless reference decode and for fast coherent-collapse statistics —
/// identical to the verified path when the noise model is `none`).
enum class AncillaMode { verified, ideal };

struct GadgetOptions {
    AncillaMode ancilla = AncillaMode::verified;
    int max_retries = 10;
};

struct PreparationOutcome {
    bool accepted = false;
    int attempts = 0;
    std::optional<SteaneBlock> block;
};

struct SyndromeRecord {
    char basis;          // 'X' or 'Z': which error type this record decodes
    uint8_t syndrome;    // 3 bits
    int correction;      // position 1..7, 0 = none
    Word7 raw_word;
};

struct GadgetReport {
    const char* gadget = "";
    int ancilla_blocks_consumed = 0;
    int preparation_attempts = 0;
    std::vector<SyndromeRecord> syndromes;
    std::string to_json_line() const;
};

/// Optional log of every physical sub-circuit a gadget emits, for the
/// structural transversality assertions and circuit hashing.
using GadgetTrace = std::vector<Circuit>;

/// Fault-tolerant protocol pieces for one data block, with one ancilla
/// block and one verification partner block as workspace. All circuits are
/// precomputed at construction so the per-shot cost is pure simulation.
/// Omitting the partner restricts the instance to ideal-ancilla use.
class SteaneGadgets {
  public:
    SteaneGadgets(uint32_t n, const SteaneBlock& data, const SteaneBlock& ancilla,
                  std::optional<SteaneBlock> partner = std::nullopt);

    const SteaneBlock& data_block() const { return data_; }
    const SteaneBlock& ancilla_block() const { return ancilla_; }
    const SteaneBlock& partner_block() const { return *partner_; }

    /// One pass of the two-copy comparison: encode both blocks under noise,
    /// CNOT candidate onto partner, read the partner destructively. Extra
    /// run options allow deterministic fault injection in tests.
    struct VerificationAttempt {
        bool accepted;
        Word7 raw_word;
        Word7 corrected_word;
        int corrected_position;
    };
    VerificationAttempt run_verification_attempt(SimState& state, const NoiseModel& noise,
                                                 Rng& rng, const RunOptions& run_options = {},
                                                 GadgetTrace* trace = nullptr) const;

    /// The full two-copy comparison circuit (reset, parallel encodings,
    /// transversal CNOT, partner readout).
    const Circuit& preparation_circuit() const { return prep_pair_; }

    /// Individual nominal pieces, for building static benchmark circuits.
    const Circuit& ideal_prep_circuit() const { return ideal_prep_zero_; }
    const Circuit& plus_rotation_circuit() const { return rotate_plus_; }
    const Circuit& extraction_circuit(char stage) const {
        return stage == 'X' ? extract_x_ : extract_z_;
    }

    /// Two-copy verified |0_L> in the ancilla block: encode twice, CNOT
    /// candidate->partner, destructively measure the partner, accept on
    /// corrected logical 0. Rejected attempts reset and retry.
    PreparationOutcome prepare_zero_verified(SimState& state, const NoiseModel& noise, Rng& rng,
                                             int max_retries, GadgetReport* report = nullptr,
                                             GadgetTrace* trace = nullptr) const;

    /// As prepare_zero_verified, then the transversal Hadamard; the check
    /// happens before the rotation.
    PreparationOutcome prepare_plus_verified(SimState& state, const NoiseModel& noise, Rng& rng,
                                             int max_retries, GadgetReport* report = nullptr,
                                             GadgetTrace* trace = nullptr) const;

    /// Noiseless in-place ancilla construction (no partner, no check).
    void prepare_ancilla_ideal(SimState& state, LogicalInput input, Rng& rng) const;

    /// Logical Z value via CNOT onto a |0_L> ancilla and destructive ancilla
    /// readout; the data block keeps (the projection of) its state.
    std::pair<int, GadgetReport> measure_logical_nondemolition(SimState& state,
                                                               const NoiseModel& noise, Rng& rng,
                                                               const GadgetOptions& options,
                                                               GadgetTrace* trace = nullptr) const;

    /// One full error-correction round: X-error extraction through a |+_L>
    /// ancilla, then Z-error extraction through a |0_L> ancilla, with
    /// corrections applied immediately as physical gates.
    GadgetReport ec_round(SimState& state, const NoiseModel& noise, Rng& rng,
                          const GadgetOptions& options, GadgetTrace* trace = nullptr) const;

    /// Hash of the nominal one-round EC circuit (first-attempt acceptance,
    /// no corrections): identifies the exact circuitry behind a fitted C.
    uint64_t ec_circuit_hash() const;

    /// The distinct sub-circuits the gadgets can emit (for structure tests).
    std::vector<Circuit> circuit_pieces() const;

  private:
    PreparationOutcome prepare_verified_impl(SimState& state, const NoiseModel& noise, Rng& rng,
                                             int max_retries, bool plus, GadgetReport* report,
                                             GadgetTrace* trace) const;
    Word7 run_and_read_word(SimState& state, const Circuit& measured, const NoiseModel& noise,
                            Rng& rng, GadgetTrace* trace) const;
    SteaneBlock obtain_ancilla(SimState& state, LogicalInput input, const NoiseModel& noise,
                               Rng& rng, const GadgetOptions& options, GadgetReport& report,
                               GadgetTrace* trace) const;

    uint32_t n_;
    SteaneBlock data_, ancilla_;
    std::optional<SteaneBlock> partner_;

    Circuit prep_pair_;          // reset both + encode both + CNOT + measure partner
    Circuit rotate_plus_;        // transversal H on the ancilla
    Circuit ideal_prep_zero_;    // reset + encode ancilla only
    Circuit extract_x_;          // CNOT data->ancilla, then MEASURE_Z ancilla
    Circuit extract_z_;          // CNOT ancilla->data, then MEASURE_X ancilla
    Circuit correct_x_[8], correct_z_[8];  // indexed by position, 1..7
};

/// The pi/8-gate resource state (|0_L> + e^{i pi/4}|1_L>)/sqrt(2),
/// constructed noiselessly.
DenseState prepare_magic_ideal();

/// Same state injected into a register block currently in |0...0>.
void inject_magic_ideal(DenseState& state, const SteaneBlock& block);

/// Teleports the pi/8 gate onto the data block: transversal CNOT
/// data->magic, destructive logical measurement of the magic block, and a
/// conditional transversal S correction. Clifford + measurement only, so
/// the circuits stay transversal; the magic block is consumed. Returns the
/// measured bit. Dense backend only (the resource state is non-stabilizer).
std::pair<int, GadgetReport> logical_t_gadget(SimState& state, const SteaneBlock& data,
                                              const SteaneBlock& magic, Rng& rng,
                                              GadgetTrace* trace = nullptr);

}  // namespace ftlab
