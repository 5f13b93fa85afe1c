// Copyright 2026 The qecnn Authors
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

#ifndef QECNN_NOISE_H
#define QECNN_NOISE_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qecnn/layout.h"
#include "qecnn/rng.h"

namespace qecnn {

enum class NoiseModelTag : uint8_t {
    ChannelCapacity,
    Depolarizing,
    ChannelCapacityMeas,
    DepolarizingMeas,
    Circuit,
};

/// Data qubits only, one perfect round.
inline constexpr bool is_qec(NoiseModelTag tag) {
    return tag == NoiseModelTag::ChannelCapacity || tag == NoiseModelTag::Depolarizing;
}
/// d noisy rounds followed by a perfect readout round.
inline constexpr bool is_ft(NoiseModelTag tag) {
    return !is_qec(tag);
}
/// Models that only ever produce X errors.
inline constexpr bool is_x_only(NoiseModelTag tag) {
    return tag == NoiseModelTag::ChannelCapacity || tag == NoiseModelTag::ChannelCapacityMeas;
}

/// Short CLI / file names: "cc", "depol", "cc-meas", "depol-meas", "circuit".
std::string_view model_name(NoiseModelTag tag);
NoiseModelTag parse_model(std::string_view name);

struct NoiseModel {
    NoiseModelTag tag;
    double p;

    NoiseModel(NoiseModelTag tag, double p);
};

/// Check outcomes over one or more rounds. QEC records hold one round; FT
/// records hold d noisy rounds plus the round reconstructed from the perfect
/// data readout. Rounds are raw outcomes, not differences.
struct SyndromeRecord {
    int distance = 0;
    std::vector<Syndrome> rounds;

    const Syndrome &final_round() const {
        return rounds.back();
    }
};

/// One sampled experiment with its ground truth.
struct Experiment {
    SyndromeRecord record;
    PauliString cumulative_error;  // data qubits only
};

/// 0 = I, 1 = X, 2 = Z, 3 = Y (bit 0 is x, bit 1 is z).
uint8_t sample_single_qubit_pauli(double p, Rng &rng);
/// Two-qubit depolarizing draw: 0 with probability 1-p, otherwise uniform over
/// the 15 non-identity codes. Code bits 0-1 act on the first qubit, 2-3 on the
/// second, each with the single-qubit encoding above.
uint8_t sample_two_qubit_pauli(double p, Rng &rng);

/// Perfect-measurement data error. Throws for FT models.
PauliString sample_qec_error(const CodeLayout &layout, const NoiseModel &model, Rng &rng);

/// d rounds of fresh data errors (rate data_p) plus independent flips of each
/// used check bit (rate meas_p), then a perfect round. Channel-capacity models
/// only flip Z-check bits; their X-check bits stay zero.
Experiment sample_ft_phenomenological(
    const CodeLayout &layout, NoiseModelTag tag, double data_p, double meas_p, Rng &rng);
Experiment sample_ft_phenomenological(const CodeLayout &layout, const NoiseModel &model, Rng &rng);

struct Interaction {
    size_t control;
    size_t target;
    int step;
};

/// Measurement of one stabiliser through its ancilla.
struct AncillaSchedule {
    CheckType type;
    size_t check;    // index within layout.stabilisers(type)
    size_t ancilla;  // qubit index in the circuit frame
    int prep_step;
    int meas_step;
    std::vector<Interaction> cnots;  // ascending step order
};

/// Interleaved single-round measurement circuit.
///
/// Circuit qubits: data 0..n_data-1, then Z ancillas, then X ancillas. Steps 1-4
/// hold CNOTs; Z checks visit corners NW, SW, NE, SE (data controls ancilla),
/// X checks visit NW, NE, SW, SE (ancilla controls data). X ancillas are
/// measured through a Hadamard after preparation and before measurement.
/// Weight-two checks prepare one step before their first CNOT and measure one
/// step after their last.
struct CircuitSchedule {
    size_t n_data = 0;
    size_t n_qubits = 0;
    int num_steps = 6;
    std::vector<AncillaSchedule> ancillas;
};

CircuitSchedule build_circuit_schedule(const CodeLayout &layout);

/// Throws std::invalid_argument if some qubit is used twice in one step or a
/// check's CNOTs do not match its support.
void validate_schedule(const CodeLayout &layout, const CircuitSchedule &schedule);

/// Runs one noisy round on `frame` (n_qubits wide), returning the measured
/// ancilla bits. Ancilla frame bits are reset at preparation and cleared after
/// measurement; the data part carries over.
Syndrome simulate_circuit_round(
    const CodeLayout &layout, const CircuitSchedule &schedule, double p, PauliString &frame, Rng &rng);

/// d circuit rounds on a persistent frame, then the perfect readout round.
/// `initial_error` seeds the data frame before the first round.
Experiment run_ft_circuit_experiment(
    const CodeLayout &layout,
    const CircuitSchedule &schedule,
    double p,
    Rng &rng,
    const std::optional<PauliString> &initial_error = std::nullopt);

}  // namespace qecnn

#endif
