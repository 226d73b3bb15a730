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
 * Circuits with mid-circuit measurement and classically-controlled gates,
 * shot execution and the JSON forms of circuits and experiment records.
 */
#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qinfo/core.hpp"
#include "qinfo/qstate.hpp"

namespace qinfo {

struct GateStep {
    Gate gate;
    std::vector<std::size_t> targets;
};

struct MeasureStep {
    std::vector<std::size_t> qubits;
    std::string key;
};

/// Applies `gate` only when the register `key` reads `value` (MSB first).
struct ConditionalStep {
    Gate gate;
    std::vector<std::size_t> targets;
    std::string key;
    std::uint64_t value = 1;
};

using CircuitStep = std::variant<GateStep, MeasureStep, ConditionalStep>;

class Circuit {
  public:
    explicit Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
        require(n_qubits >= 1 && n_qubits <= kMaxQubits, ErrorKind::invalid_argument,
                "qubit count out of range");
    }

    Circuit &gate(const Gate &g, std::vector<std::size_t> targets) {
        check_gate_targets(g, targets);
        steps_.emplace_back(GateStep{g, std::move(targets)});
        return *this;
    }

    Circuit &gate(std::string_view name, std::vector<std::size_t> targets,
                  std::vector<double> params = {}) {
        return gate(standard_gate(name, params), std::move(targets));
    }

    Circuit &measure(std::vector<std::size_t> qubits, std::string key) {
        require(!qubits.empty(), ErrorKind::invalid_argument, "measurement needs qubits");
        detail::check_targets(n_qubits_, qubits);
        require(!key.empty(), ErrorKind::invalid_argument, "measurement key must be non-empty");
        require(widths_.count(key) == 0, ErrorKind::invalid_argument,
                "measurement key '" + key + "' used twice");
        widths_[key] = qubits.size();
        steps_.emplace_back(MeasureStep{std::move(qubits), std::move(key)});
        return *this;
    }

    Circuit &conditional(const Gate &g, std::vector<std::size_t> targets, std::string key,
                         std::uint64_t value = 1) {
        check_gate_targets(g, targets);
        require(widths_.count(key) == 1, ErrorKind::invalid_argument,
                "conditional step references register '" + key + "' before it is measured");
        require(value < (std::uint64_t{1} << widths_.at(key)), ErrorKind::invalid_argument,
                "conditioning value does not fit register '" + key + "'");
        steps_.emplace_back(ConditionalStep{g, std::move(targets), std::move(key), value});
        return *this;
    }

    Circuit &conditional(std::string_view name, std::vector<std::size_t> targets, std::string key,
                         std::uint64_t value = 1, std::vector<double> params = {}) {
        return conditional(standard_gate(name, params), std::move(targets), std::move(key), value);
    }

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] const std::vector<CircuitStep> &steps() const { return steps_; }
    [[nodiscard]] const std::map<std::string, std::size_t> &register_widths() const {
        return widths_;
    }

    /// Same circuit with every measurement and classically-controlled step dropped.
    [[nodiscard]] Circuit unitary_part() const {
        Circuit out(n_qubits_);
        for (const auto &step : steps_) {
            if (const auto *g = std::get_if<GateStep>(&step)) {
                out.gate(g->gate, g->targets);
            }
        }
        return out;
    }

  private:
    void check_gate_targets(const Gate &g, const std::vector<std::size_t> &targets) const {
        require(targets.size() == g.arity(), ErrorKind::invalid_argument,
                "gate " + g.name() + " needs " + std::to_string(g.arity()) + " target(s)");
        detail::check_targets(n_qubits_, targets);
    }

    std::size_t n_qubits_;
    std::vector<CircuitStep> steps_;
    std::map<std::string, std::size_t> widths_;
};

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json to_json(const Circuit &circuit) {
    nlohmann::json ops = nlohmann::json::array();
    for (const auto &step : circuit.steps()) {
        std::visit(
            [&](const auto &s) {
                using T = std::decay_t<decltype(s)>;
                nlohmann::json op;
                if constexpr (std::is_same_v<T, GateStep>) {
                    op = {{"op", "gate"}, {"gate", s.gate.name()}, {"params", s.gate.params()},
                          {"targets", s.targets}};
                } else if constexpr (std::is_same_v<T, MeasureStep>) {
                    op = {{"op", "measure"}, {"qubits", s.qubits}, {"key", s.key}};
                } else {
                    op = {{"op", "conditional"}, {"gate", s.gate.name()},
                          {"params", s.gate.params()}, {"targets", s.targets},
                          {"key", s.key}, {"value", s.value}};
                }
                ops.push_back(std::move(op));
            },
            step);
    }
    return {{"n_qubits", circuit.n_qubits()}, {"ops", std::move(ops)}};
}

inline Circuit circuit_from_json(const nlohmann::json &doc) {
    try {
        Circuit circuit(doc.at("n_qubits").get<std::size_t>());
        for (const auto &op : doc.value("ops", nlohmann::json::array())) {
            const auto kind = op.at("op").get<std::string>();
            if (kind == "gate") {
                circuit.gate(op.at("gate").get<std::string>(),
                             op.at("targets").get<std::vector<std::size_t>>(),
                             op.value("params", std::vector<double>{}));
            } else if (kind == "measure") {
                circuit.measure(op.at("qubits").get<std::vector<std::size_t>>(),
                                op.at("key").get<std::string>());
            } else if (kind == "conditional") {
                circuit.conditional(op.at("gate").get<std::string>(),
                                    op.at("targets").get<std::vector<std::size_t>>(),
                                    op.at("key").get<std::string>(),
                                    op.value("value", std::uint64_t{1}),
                                    op.value("params", std::vector<double>{}));
            } else {
                throw Error(ErrorKind::invalid_argument, "unknown circuit op: " + kind);
            }
        }
        return circuit;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::invalid_argument, std::string("malformed circuit document: ") +
                                                     e.what());
    }
}

/// FNV-1a 64 over the canonical JSON text.
inline std::string circuit_digest(const Circuit &circuit) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_json(circuit).dump()) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "fnv1a64:%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

// ---------------------------------------------------------------------------
// Execution

struct ShotResult {
    StateVector state;
    std::map<std::string, std::vector<int>> registers;
};

inline std::uint64_t register_value(const std::vector<int> &bits) {
    std::uint64_t v = 0;
    for (int b : bits) {
        v = (v << 1) | static_cast<std::uint64_t>(b);
    }
    return v;
}

/// One pass through the circuit from |0...0>.
inline ShotResult simulate_shot(const Circuit &circuit, Rng &rng) {
    ShotResult shot{StateVector(circuit.n_qubits()), {}};
    for (const auto &step : circuit.steps()) {
        if (const auto *g = std::get_if<GateStep>(&step)) {
            detail::apply_matrix_inplace(shot.state.mutable_amplitudes(), circuit.n_qubits(),
                                         g->gate.matrix(), g->targets);
        } else if (const auto *m = std::get_if<MeasureStep>(&step)) {
            auto outcome = measure(shot.state, m->qubits, rng);
            shot.state = std::move(outcome.state);
            shot.registers[m->key] = std::move(outcome.bits);
        } else {
            const auto &c = std::get<ConditionalStep>(step);
            const auto found = shot.registers.find(c.key);
            require(found != shot.registers.end(), ErrorKind::invalid_argument,
                    "conditional step references unmeasured register '" + c.key + "'");
            if (register_value(found->second) == c.value) {
                detail::apply_matrix_inplace(shot.state.mutable_amplitudes(), circuit.n_qubits(),
                                             c.gate.matrix(), c.targets);
            }
        }
    }
    return shot;
}

/// Final state of the circuit with measurements and conditionals removed.
inline StateVector final_state(const Circuit &circuit) {
    Rng unused(0);
    return simulate_shot(circuit.unitary_part(), unused).state;
}

struct ExperimentRecord {
    std::size_t shots = 0;
    std::uint64_t seed = 0;
    std::string circuit_digest;
    /// register name -> one '0'/'1' string per shot
    std::map<std::string, std::vector<std::string>> registers;

    /// All shots of a register concatenated, as printed in transcripts.
    [[nodiscard]] std::string joined(const std::string &key) const {
        std::string out;
        for (const auto &bits : registers.at(key)) {
            out += bits;
        }
        return out;
    }

    /// Per-shot integer values of a single-qubit register.
    [[nodiscard]] std::vector<int> bit_column(const std::string &key) const {
        std::vector<int> out;
        for (const auto &bits : registers.at(key)) {
            require(bits.size() == 1, ErrorKind::invalid_argument,
                    "register '" + key + "' is not one bit wide");
            out.push_back(bits[0] == '1' ? 1 : 0);
        }
        return out;
    }
};

/// Deterministic in (circuit, shots, seed): all shots draw from one stream.
inline ExperimentRecord run_circuit(const Circuit &circuit, std::size_t shots, std::uint64_t seed) {
    ExperimentRecord record;
    record.shots = shots;
    record.seed = seed;
    record.circuit_digest = circuit_digest(circuit);
    Rng rng(seed);
    for (std::size_t s = 0; s < shots; ++s) {
        const ShotResult shot = simulate_shot(circuit, rng);
        for (const auto &[key, bits] : shot.registers) {
            std::string text;
            for (int b : bits) {
                text.push_back(b ? '1' : '0');
            }
            record.registers[key].push_back(std::move(text));
        }
    }
    return record;
}

inline nlohmann::json to_json(const ExperimentRecord &record) {
    return {{"shots", record.shots},
            {"seed", record.seed},
            {"circuit_digest", record.circuit_digest},
            {"registers", record.registers}};
}

inline ExperimentRecord record_from_json(const nlohmann::json &doc) {
    ExperimentRecord record;
    try {
        record.shots = doc.at("shots").get<std::size_t>();
        record.seed = doc.at("seed").get<std::uint64_t>();
        record.circuit_digest = doc.at("circuit_digest").get<std::string>();
        record.registers =
            doc.at("registers").get<std::map<std::string, std::vector<std::string>>>();
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::invalid_argument, std::string("malformed experiment record: ") +
                                                     e.what());
    }
    for (const auto &[key, entries] : record.registers) {
        require(entries.size() == record.shots, ErrorKind::invalid_argument,
                "register '" + key + "' does not hold one entry per shot");
        for (const auto &bits : entries) {
            require(bits.size() == entries.front().size() &&
                        bits.find_first_not_of("01") == std::string::npos,
                    ErrorKind::invalid_argument, "register '" + key + "' has malformed bitstrings");
        }
    }
    return record;
}

// ---------------------------------------------------------------------------
// Text rendering, informational only.

namespace detail {

inline std::size_t display_width(const std::string &s) {
    std::size_t width = 0;
    for (unsigned char c : s) {
        width += (c & 0xC0) != 0x80 ? 1 : 0;
    }
    return width;
}

inline std::string repeat(const std::string &glyph, std::size_t count) {
    std::string out;
    for (std::size_t i = 0; i < count; ++i) {
        out += glyph;
    }
    return out;
}

inline std::string short_number(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.4g", v);
    return buffer;
}

inline std::vector<std::string> gate_cells(const Gate &gate) {
    const auto &n = gate.name();
    if (n == "CNOT" || n == "CX") {
        return {"@", "X"};
    }
    if (n == "CY") {
        return {"@", "Y"};
    }
    if (n == "CZ") {
        return {"@", "@"};
    }
    if (n == "SWAP") {
        return {"×", "×"};
    }
    if (n == "XPow" || n == "YPow" || n == "ZPow") {
        return {std::string(1, n[0]) + "^" + short_number(gate.params().at(0))};
    }
    if (n == "R_phi") {
        return {"R(" + short_number(gate.params().at(0)) + ")"};
    }
    return {n};
}

} // namespace detail

/// Box-drawing diagram with steps packed into columns, qubit rows labelled by index.
inline std::string render(const Circuit &circuit,
                          const std::vector<std::string> &qubit_names = {}) {
    const std::size_t n = circuit.n_qubits();
    std::vector<std::string> labels(n);
    std::size_t label_width = 0;
    for (std::size_t q = 0; q < n; ++q) {
        labels[q] = (q < qubit_names.size() ? qubit_names[q] : std::to_string(q)) + ": ";
        label_width = std::max(label_width, detail::display_width(labels[q]));
    }
    std::vector<std::string> rows(n);
    std::vector<std::string> links(n > 0 ? n - 1 : 0);
    for (std::size_t q = 0; q < n; ++q) {
        rows[q] = labels[q] + std::string(label_width - detail::display_width(labels[q]), ' ') +
                  "───";
    }
    for (auto &link : links) {
        link = std::string(label_width + 3, ' ');
    }

    // Pack steps into columns: each step goes to the earliest column free on its
    // qubit span, and a conditional never precedes the measurement it reads.
    struct Placed {
        std::map<std::size_t, std::string> cells;
        std::size_t lo = 0;
        std::size_t hi = 0;
    };
    std::vector<std::vector<Placed>> columns;
    std::vector<std::size_t> next_free(n, 0);
    std::map<std::string, std::size_t> measured_at;
    for (const auto &step : circuit.steps()) {
        Placed p;
        std::size_t earliest = 0;
        if (const auto *g = std::get_if<GateStep>(&step)) {
            const auto glyphs = detail::gate_cells(g->gate);
            for (std::size_t i = 0; i < g->targets.size(); ++i) {
                p.cells[g->targets[i]] = glyphs[std::min(i, glyphs.size() - 1)];
            }
        } else if (const auto *m = std::get_if<MeasureStep>(&step)) {
            for (std::size_t i = 0; i < m->qubits.size(); ++i) {
                p.cells[m->qubits[i]] = i == 0 ? "M('" + m->key + "')" : "M";
            }
        } else {
            const auto &c = std::get<ConditionalStep>(step);
            const auto glyphs = detail::gate_cells(c.gate);
            for (std::size_t i = 0; i < c.targets.size(); ++i) {
                p.cells[c.targets[i]] = glyphs[std::min(i, glyphs.size() - 1)];
            }
            p.cells[c.targets.back()] += "[" + c.key + "=" + std::to_string(c.value) + "]";
            earliest = measured_at.at(c.key) + 1;
        }
        p.lo = p.cells.begin()->first;
        p.hi = p.cells.rbegin()->first;
        std::size_t col = earliest;
        for (std::size_t q = p.lo; q <= p.hi; ++q) {
            col = std::max(col, next_free[q]);
        }
        for (std::size_t q = p.lo; q <= p.hi; ++q) {
            next_free[q] = col + 1;
        }
        if (const auto *m = std::get_if<MeasureStep>(&step)) {
            measured_at[m->key] = col;
        }
        if (columns.size() <= col) {
            columns.resize(col + 1);
        }
        columns[col].push_back(std::move(p));
    }

    for (const auto &column : columns) {
        std::size_t width = 1;
        std::map<std::size_t, std::string> cells;
        std::vector<bool> crossed(n, false);
        std::vector<bool> linked(n > 0 ? n - 1 : 0, false);
        for (const auto &p : column) {
            for (const auto &[q, text] : p.cells) {
                cells[q] = text;
                width = std::max(width, detail::display_width(text));
            }
            for (std::size_t q = p.lo; q < p.hi; ++q) {
                linked[q] = true;
                if (q > p.lo) {
                    crossed[q] = true;
                }
            }
        }
        for (std::size_t q = 0; q < n; ++q) {
            const auto it = cells.find(q);
            if (it != cells.end()) {
                rows[q] += it->second +
                           detail::repeat("─", width - detail::display_width(it->second));
            } else if (crossed[q]) {
                rows[q] += "┼" + detail::repeat("─", width - 1);
            } else {
                rows[q] += detail::repeat("─", width);
            }
            rows[q] += "───";
        }
        for (std::size_t q = 0; q + 1 < n; ++q) {
            links[q] += (linked[q] ? std::string("│") : std::string(" ")) +
                        std::string(width - 1 + 3, ' ');
        }
    }
    std::string out;
    for (std::size_t q = 0; q < n; ++q) {
        out += rows[q] + "\n";
        if (q + 1 < n) {
            std::string link = links[q];
            while (!link.empty() && link.back() == ' ') {
                link.pop_back();
            }
            out += link + "\n";
        }
    }
    return out;
}

} // namespace qinfo
