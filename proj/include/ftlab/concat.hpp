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

#include "ftlab/threshold.hpp"

namespace ftlab {

/// Register layout for the once-concatenated (49-qubit) memory experiment:
/// the outer data super-block, two outer ancilla super-blocks for Steane
/// extraction and its verification copy, and a 14-qubit workspace for the
/// inner-level gadgets.
struct Level1Layout {
    std::array<SteaneBlock, 7> data;
    std::array<SteaneBlock, 7> outer_ancilla;
    std::array<SteaneBlock, 7> outer_partner;
    SteaneBlock inner_ancilla;
    SteaneBlock inner_partner;
    static constexpr uint32_t kRegister = 161;

    Level1Layout();
};

/// The outer-level Steane gadgets: every outer "physical" operation is the
/// corresponding transversal inner-logical construction, so one faulty
/// location still touches at most one qubit per inner block.
class Level1Gadgets {
  public:
    Level1Gadgets();

    const Level1Layout& layout() const { return layout_; }

    /// Noiseless preparation of the concatenated encoded input on the data
    /// super-block.
    void ideal_encode_outer(SimState& state, LogicalInput input, Rng& rng) const;

    /// One inner EC round on each of the seven data blocks.
    void inner_ec_all(SimState& state, const NoiseModel& noise, Rng& rng,
                      const GadgetOptions& options) const;

    /// Outer Steane EC round (X then Z extraction) through verified or
    /// ideal 49-qubit ancilla super-blocks.
    GadgetReport outer_ec_round(SimState& state, const NoiseModel& noise, Rng& rng,
                                const GadgetOptions& options) const;

    /// Noiseless destructive readout of the outer logical value.
    int measure_outer_destructive(SimState& state, char basis, Rng& rng) const;

    uint64_t circuit_hash() const;

  private:
    void prepare_outer_verified(SimState& state, LogicalInput input, const NoiseModel& noise,
                                Rng& rng, const GadgetOptions& options, GadgetReport& report) const;
    void prepare_outer_ideal(SimState& state, LogicalInput input, Rng& rng) const;

    /// Reads the last 49 outcomes as 7 inner words, decodes each inner
    /// block classically, and returns the outer word of inner parities.
    Word7 decode_outer_word(const std::vector<uint8_t>& outcomes) const;

    Level1Layout layout_;
    std::vector<SteaneGadgets> data_inner_ec_;     // one per data block
    std::vector<SteaneGadgets> ancilla_inner_prep_;  // outer_ancilla blocks
    std::vector<SteaneGadgets> partner_inner_prep_;  // outer_partner blocks

    Circuit outer_encode_pair_;   // outer encoding on both super-blocks
    Circuit reset_outer_ancilla_;
    Circuit outer_encode_single_; // outer encoding on the ancilla only
    Circuit outer_verify_;        // block CNOT + partner readout
    Circuit rotate_outer_plus_;
    Circuit flip_outer_one_;
    Circuit outer_extract_x_;
    Circuit outer_extract_z_;
    Circuit outer_correct_x_[8], outer_correct_z_[8];
    Circuit ideal_inner_encode_data_;     // seven parallel inner encodings
    Circuit ideal_inner_encode_ancilla_;
    Circuit outer_encode_data_;
};

/// Memory experiment on the 49-qubit concatenated block: inner EC on every
/// block, an outer EC round, repeated `rounds` times, then ideal decode.
ExperimentResult run_level1_memory(const MemoryExperiment& experiment, int workers = 1,
                                   const ProgressFn& progress = {});

}  // namespace ftlab
