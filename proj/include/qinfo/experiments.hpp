// Copyright 2026 The qinfo Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * The five circuit experiments: NOT, Bell pair, three-CNOT swap and the two
 * teleportation variants, plus their text transcripts.
 */
#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qinfo/circuit.hpp"
#include "qinfo/core.hpp"
#include "qinfo/qstate.hpp"

namespace qinfo {

inline constexpr std::size_t kMsg = 0;
inline constexpr std::size_t kAlice = 1;
inline constexpr std::size_t kBob = 2;

inline Circuit experiment1_circuit() {
    Circuit c(1);
    c.gate("X", {0}).measure({0}, "Final state");
    return c;
}

inline Circuit experiment2_circuit() {
    Circuit c(2);
    c.gate("H", {0}).gate("CNOT", {0, 1}).measure({0, 1}, "Final state");
    return c;
}

/// H on q0, XPow(t) on q1, then three CNOTs q0->q1, q1->q0, q0->q1.
inline Circuit experiment3_circuit(double t) {
    Circuit c(2);
    c.gate("H", {0}).gate("XPow", {1}, {t});
    c.gate("CNOT", {0, 1}).gate("CNOT", {1, 0}).gate("CNOT", {0, 1});
    c.measure({1}, "q1").measure({0}, "q0");
    return c;
}

/// Message prep XPow(a) then YPow(b), EPR pair on alice/bob, inverse Bell rotation.
inline Circuit teleport_prefix(double a, double b) {
    Circuit c(3);
    c.gate("XPow", {kMsg}, {a}).gate("YPow", {kMsg}, {b});
    c.gate("H", {kAlice}).gate("CNOT", {kAlice, kBob});
    c.gate("CNOT", {kMsg, kAlice}).gate("H", {kMsg});
    return c;
}

inline Circuit experiment4_circuit(double a, double b) {
    Circuit c = teleport_prefix(a, b);
    c.measure({kMsg}, "msg").measure({kAlice}, "alice");
    c.conditional("X", {kBob}, "alice").conditional("Z", {kBob}, "msg");
    return c;
}

/// Measurement deferred away: the classical controls become CNOT and CZ.
inline Circuit experiment5_circuit(double a, double b) {
    Circuit c = teleport_prefix(a, b);
    c.gate("CNOT", {kAlice, kBob}).gate("CZ", {kMsg, kBob});
    return c;
}

struct TeleportResult {
    BlochVector message_initial;
    BlochVector bob;
    BlochVector message_final;
};

inline TeleportResult teleport(double a, double b, bool deferred, std::uint64_t seed) {
    Circuit prep(3);
    prep.gate("XPow", {kMsg}, {a}).gate("YPow", {kMsg}, {b});
    Rng rng(seed);
    const StateVector initial = simulate_shot(prep, rng).state;
    const Circuit circuit = deferred ? experiment5_circuit(a, b) : experiment4_circuit(a, b);
    const StateVector final = simulate_shot(circuit, rng).state;
    return {bloch_vector(initial, kMsg), bloch_vector(final, kBob), bloch_vector(final, kMsg)};
}

// ---------------------------------------------------------------------------
// Transcripts

/// Four-decimal rounding, printed with at least one fractional digit.
inline std::string bloch_component(double v) {
    double r = std::round(v * 1e4) / 1e4;
    if (r == 0.0) {
        r = 0.0; // drop the sign of -0
    }
    std::string text = format_double(r);
    if (text.find_first_of(".e") == std::string::npos) {
        text += ".0";
    }
    return text;
}

inline std::string bloch_block(const std::string &title, const BlochVector &v) {
    return "Bloch Sphere of " + title + ":\n\nx:  " + bloch_component(v.x) +
           "  y:  " + bloch_component(v.y) + "  z:  " + bloch_component(v.z) + "\n\n";
}

/// "key=0101..." lines; multi-qubit registers print one column per qubit.
inline std::string register_lines(const ExperimentRecord &record,
                                  const std::vector<std::string> &order) {
    std::string out;
    for (const auto &key : order) {
        const auto found = record.registers.find(key);
        if (found == record.registers.end()) {
            continue;
        }
        const std::size_t width = found->second.empty() ? 0 : found->second.front().size();
        out += key + "=";
        for (std::size_t b = 0; b < width; ++b) {
            if (b > 0) {
                out += ", ";
            }
            for (const auto &bits : found->second) {
                out += bits[b];
            }
        }
        out += "\n";
    }
    return out;
}

inline std::string circuit_block(const Circuit &c, const std::vector<std::string> &names = {}) {
    return "Circuit:\n\n" + render(c, names) + "\n";
}

inline std::string experiment1_transcript(const ExperimentRecord &record) {
    const Circuit c = experiment1_circuit();
    return bloch_block("the qubit in the final state", bloch_vector(final_state(c), 0)) +
           circuit_block(c) + "Results of " + std::to_string(record.shots) + " trials:\n\n" +
           register_lines(record, {"Final state"});
}

inline std::string experiment2_transcript(const ExperimentRecord &record) {
    const Circuit c = experiment2_circuit();
    const StateVector psi = final_state(c);
    return bloch_block("qubit 0 in the final state", bloch_vector(psi, 0)) +
           bloch_block("qubit 1 in the final state", bloch_vector(psi, 1)) + circuit_block(c) +
           "Results of " + std::to_string(record.shots) + " trials:\n\n" +
           register_lines(record, {"Final state"});
}

inline std::string experiment3_transcript(double t, const ExperimentRecord &record) {
    return circuit_block(experiment3_circuit(t)) + "Results for t = " + format_double(t) +
           ":\n\n" + register_lines(record, {"q0", "q1"});
}

inline std::string teleport_transcript(double a, double b, bool deferred,
                                       const TeleportResult &result) {
    const Circuit c = deferred ? experiment5_circuit(a, b) : experiment4_circuit(a, b);
    return circuit_block(c, {"msg", "qalice", "qbob"}) +
           bloch_block("the Message qubit in the initial state", result.message_initial) +
           bloch_block("Bob's qubit in the final state", result.bob) +
           bloch_block("the Message qubit in the final state", result.message_final);
}

} // namespace qinfo
