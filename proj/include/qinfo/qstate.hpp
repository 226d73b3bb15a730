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
 * Dense n-qubit state vectors, the standard gate library, measurement in
 * the computational basis and single-qubit Bloch vectors.
 *
 * Qubit 0 is the most significant bit of a basis-state index, so the ket
 * |q0 q1 ... q(n-1)> has index q0*2^(n-1) + ... + q(n-1).
 */
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qinfo/core.hpp"

namespace qinfo {

inline constexpr std::size_t kMaxQubits = 24;

/// Bit of the basis index that carries `qubit` in an `n_qubits` register.
inline std::size_t qubit_mask(std::size_t n_qubits, std::size_t qubit) {
    return std::size_t{1} << (n_qubits - 1 - qubit);
}

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    [[nodiscard]] double radius() const { return std::sqrt(x * x + y * y + z * z); }
};

class Gate {
  public:
    Gate(std::string name, std::vector<double> params, CMatrix matrix)
        : name_(std::move(name)), params_(std::move(params)), matrix_(std::move(matrix)) {
        require(matrix_.rows() == 2 || matrix_.rows() == 4, ErrorKind::invalid_argument,
                "gate matrix must be 2x2 or 4x4");
        require(matrix_.rows() == matrix_.cols(), ErrorKind::invalid_argument,
                "gate matrix must be square");
    }

    [[nodiscard]] std::size_t arity() const { return matrix_.rows() == 2 ? 1 : 2; }
    [[nodiscard]] const std::string &name() const { return name_; }
    [[nodiscard]] const std::vector<double> &params() const { return params_; }
    [[nodiscard]] const CMatrix &matrix() const { return matrix_; }

    [[nodiscard]] Gate adjoint() const {
        return Gate(name_ + "^dag", params_, matrix_.adjoint());
    }

  private:
    std::string name_;
    std::vector<double> params_;
    CMatrix matrix_;
};

namespace detail {

inline CMatrix pauli_x() {
    CMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

inline CMatrix pauli_y() {
    CMatrix m(2, 2);
    m << 0, -kI, kI, 0;
    return m;
}

inline CMatrix pauli_z() {
    CMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

/// cos(pi t/2) 1 + i sin(pi t/2) P
inline CMatrix pauli_power(const CMatrix &pauli, double t) {
    const double angle = kPi * t / 2.0;
    return std::cos(angle) * CMatrix::Identity(2, 2) + kI * std::sin(angle) * pauli;
}

/// |0><0| (x) 1 + |1><1| (x) U, control on the first (most significant) qubit.
inline CMatrix controlled(const CMatrix &target) {
    CMatrix m = CMatrix::Zero(4, 4);
    m.topLeftCorner(2, 2) = CMatrix::Identity(2, 2);
    m.bottomRightCorner(2, 2) = target;
    return m;
}

} // namespace detail

/**
 * Library gates by name. Parameterized gates: R_phi(phi), XPow(t), YPow(t),
 * ZPow(t); all others take no parameters. Two-qubit gates act with the
 * first target as control.
 */
inline Gate standard_gate(std::string_view name, std::span<const double> params = {}) {
    const std::string key(name);
    auto expect_params = [&](std::size_t count) {
        require(params.size() == count, ErrorKind::invalid_argument,
                "gate " + key + " takes " + std::to_string(count) + " parameter(s), got " +
                    std::to_string(params.size()));
    };
    std::vector<double> stored(params.begin(), params.end());

    if (key == "X") {
        expect_params(0);
        return Gate(key, stored, detail::pauli_x());
    }
    if (key == "Y") {
        expect_params(0);
        return Gate(key, stored, detail::pauli_y());
    }
    if (key == "Z") {
        expect_params(0);
        return Gate(key, stored, detail::pauli_z());
    }
    if (key == "H") {
        expect_params(0);
        CMatrix m(2, 2);
        m << 1, 1, 1, -1;
        return Gate(key, stored, m / std::sqrt(2.0));
    }
    if (key == "R_phi") {
        expect_params(1);
        CMatrix m = CMatrix::Identity(2, 2);
        m(1, 1) = std::exp(kI * params[0]);
        return Gate(key, stored, m);
    }
    if (key == "XPow") {
        expect_params(1);
        return Gate(key, stored, detail::pauli_power(detail::pauli_x(), params[0]));
    }
    if (key == "YPow") {
        expect_params(1);
        return Gate(key, stored, detail::pauli_power(detail::pauli_y(), params[0]));
    }
    if (key == "ZPow") {
        expect_params(1);
        return Gate(key, stored, detail::pauli_power(detail::pauli_z(), params[0]));
    }
    if (key == "CNOT" || key == "CX") {
        expect_params(0);
        return Gate(key, stored, detail::controlled(detail::pauli_x()));
    }
    if (key == "CY") {
        expect_params(0);
        return Gate(key, stored, detail::controlled(detail::pauli_y()));
    }
    if (key == "CZ") {
        expect_params(0);
        return Gate(key, stored, detail::controlled(detail::pauli_z()));
    }
    if (key == "SWAP") {
        expect_params(0);
        CMatrix m = CMatrix::Zero(4, 4);
        m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
        return Gate(key, stored, m);
    }
    throw Error(ErrorKind::invalid_argument, "unknown gate: " + key);
}

inline Gate standard_gate(std::string_view name, std::initializer_list<double> params) {
    return standard_gate(name, std::span<const double>(params.begin(), params.size()));
}

class StateVector {
  public:
    /// |0...0> on `n_qubits` qubits.
    explicit StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
        require(n_qubits >= 1 && n_qubits <= kMaxQubits, ErrorKind::invalid_argument,
                "qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
        amplitudes_ = CVector::Zero(static_cast<Eigen::Index>(std::size_t{1} << n_qubits));
        amplitudes_(0) = 1.0;
    }

    static StateVector basis(std::size_t n_qubits, std::size_t index) {
        StateVector state(n_qubits);
        require(index < state.dim(), ErrorKind::out_of_range, "basis index out of range");
        state.amplitudes_(0) = 0.0;
        state.amplitudes_(static_cast<Eigen::Index>(index)) = 1.0;
        return state;
    }

    /// Wraps explicit amplitudes; they must already be normalized to 1e-10.
    static StateVector from_amplitudes(CVector amplitudes) {
        const auto dim = static_cast<std::size_t>(amplitudes.size());
        require(dim >= 2 && std::has_single_bit(dim), ErrorKind::invalid_argument,
                "amplitude count must be a power of two >= 2");
        require(std::abs(amplitudes.squaredNorm() - 1.0) < 1e-10, ErrorKind::invalid_argument,
                "amplitudes are not normalized");
        StateVector state(static_cast<std::size_t>(std::countr_zero(dim)));
        state.amplitudes_ = std::move(amplitudes);
        return state;
    }

    /// Tensor product |this> (x) |other>; `this` supplies the leading qubits.
    [[nodiscard]] StateVector tensor(const StateVector &other) const {
        StateVector out(n_qubits_ + other.n_qubits_);
        const auto d2 = static_cast<Eigen::Index>(other.dim());
        for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
            out.amplitudes_.segment(i * d2, d2) = amplitudes_(i) * other.amplitudes_;
        }
        return out;
    }

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
    [[nodiscard]] const CVector &amplitudes() const { return amplitudes_; }
    [[nodiscard]] Complex amplitude(std::size_t index) const {
        return amplitudes_(static_cast<Eigen::Index>(index));
    }
    [[nodiscard]] double probability(std::size_t index) const { return std::norm(amplitude(index)); }
    [[nodiscard]] double norm_squared() const { return amplitudes_.squaredNorm(); }

    /// |<this|other>|, the phase-insensitive overlap.
    [[nodiscard]] double overlap(const StateVector &other) const {
        require(dim() == other.dim(), ErrorKind::invalid_argument, "dimension mismatch");
        return std::abs(amplitudes_.dot(other.amplitudes_));
    }

    CVector &mutable_amplitudes() { return amplitudes_; }

  private:
    std::size_t n_qubits_;
    CVector amplitudes_;
};

namespace detail {

inline void check_targets(std::size_t n_qubits, std::span<const std::size_t> targets) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        require(targets[i] < n_qubits, ErrorKind::out_of_range,
                "qubit index " + std::to_string(targets[i]) + " out of range for " +
                    std::to_string(n_qubits) + " qubits");
        for (std::size_t j = 0; j < i; ++j) {
            require(targets[i] != targets[j], ErrorKind::invalid_argument, "duplicate target qubit");
        }
    }
}

/// Applies a 2^k x 2^k matrix to the listed qubits; targets[0] is the
/// most significant bit of the local index.
inline void apply_matrix_inplace(CVector &amps, std::size_t n_qubits, const CMatrix &m,
                                 std::span<const std::size_t> targets) {
    const std::size_t k = targets.size();
    const std::size_t local_dim = std::size_t{1} << k;
    std::vector<std::size_t> offsets(local_dim, 0);
    std::size_t target_bits = 0;
    for (std::size_t local = 0; local < local_dim; ++local) {
        for (std::size_t bit = 0; bit < k; ++bit) {
            if (local & (std::size_t{1} << (k - 1 - bit))) {
                offsets[local] |= qubit_mask(n_qubits, targets[bit]);
            }
        }
    }
    for (auto t : targets) {
        target_bits |= qubit_mask(n_qubits, t);
    }
    std::vector<Complex> gathered(local_dim);
    const auto dim = static_cast<std::size_t>(amps.size());
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & target_bits) {
            continue;
        }
        for (std::size_t a = 0; a < local_dim; ++a) {
            gathered[a] = amps(static_cast<Eigen::Index>(base | offsets[a]));
        }
        for (std::size_t r = 0; r < local_dim; ++r) {
            Complex acc = 0.0;
            for (std::size_t c = 0; c < local_dim; ++c) {
                acc += m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * gathered[c];
            }
            amps(static_cast<Eigen::Index>(base | offsets[r])) = acc;
        }
    }
}

} // namespace detail

inline StateVector apply_gate(StateVector state, const Gate &gate,
                              std::span<const std::size_t> targets) {
    require(targets.size() == gate.arity(), ErrorKind::invalid_argument,
            "gate " + gate.name() + " needs " + std::to_string(gate.arity()) + " target(s)");
    detail::check_targets(state.n_qubits(), targets);
    detail::apply_matrix_inplace(state.mutable_amplitudes(), state.n_qubits(), gate.matrix(),
                                 targets);
    return state;
}

inline StateVector apply_gate(StateVector state, const Gate &gate,
                              std::initializer_list<std::size_t> targets) {
    return apply_gate(std::move(state), gate,
                      std::span<const std::size_t>(targets.begin(), targets.size()));
}

enum class BellDirection { forward, inverse };

/**
 * forward: H on q0 then CNOT(q0 -> q1), mapping |00>,|01>,|10>,|11> to
 * beta00, beta01, beta10, beta11. inverse is the adjoint (Bell measurement
 * basis change).
 */
inline StateVector bell_basis_rotation(StateVector state, std::size_t q0, std::size_t q1,
                                       BellDirection direction) {
    const std::size_t pair[2] = {q0, q1};
    detail::check_targets(state.n_qubits(), pair);
    const Gate h = standard_gate("H");
    const Gate cnot = standard_gate("CNOT");
    if (direction == BellDirection::forward) {
        state = apply_gate(std::move(state), h, {q0});
        return apply_gate(std::move(state), cnot, {q0, q1});
    }
    state = apply_gate(std::move(state), cnot, {q0, q1});
    return apply_gate(std::move(state), h, {q0});
}

struct MeasurementOutcome {
    std::vector<int> bits; ///< one entry per measured qubit, in request order
    StateVector state;     ///< renormalized post-measurement state
};

/// Outcome probability floor below which a sampled branch is treated as a fault.
inline constexpr double kMinBranchProbability = 1e-15;

/**
 * Projective measurement of `qubits` in the computational basis. The
 * outcome is drawn by inverse CDF over the 2^k outcome probabilities.
 */
inline MeasurementOutcome measure(const StateVector &state, std::span<const std::size_t> qubits,
                                  Rng &rng) {
    require(!qubits.empty(), ErrorKind::invalid_argument, "nothing to measure");
    detail::check_targets(state.n_qubits(), qubits);
    const std::size_t k = qubits.size();
    const std::size_t n = state.n_qubits();
    auto outcome_of = [&](std::size_t index) {
        std::size_t local = 0;
        for (std::size_t b = 0; b < k; ++b) {
            local = (local << 1) | ((index & qubit_mask(n, qubits[b])) ? 1U : 0U);
        }
        return local;
    };

    std::vector<double> probs(std::size_t{1} << k, 0.0);
    for (std::size_t i = 0; i < state.dim(); ++i) {
        probs[outcome_of(i)] += state.probability(i);
    }
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    const double u = rng.uniform() * total;
    std::size_t chosen = probs.size() - 1;
    double cumulative = 0.0;
    for (std::size_t o = 0; o < probs.size(); ++o) {
        cumulative += probs[o];
        if (u < cumulative) {
            chosen = o;
            break;
        }
    }
    // Walk back from a trailing zero-probability bucket chosen by rounding.
    while (probs[chosen] <= 0.0 && chosen > 0) {
        --chosen;
    }
    const double p = probs[chosen];
    require(p >= kMinBranchProbability, ErrorKind::internal_fault,
            "measurement selected a zero-probability branch");

    StateVector collapsed = state;
    CVector &amps = collapsed.mutable_amplitudes();
    const double scale = 1.0 / std::sqrt(p);
    for (std::size_t i = 0; i < state.dim(); ++i) {
        auto idx = static_cast<Eigen::Index>(i);
        amps(idx) = outcome_of(i) == chosen ? amps(idx) * scale : Complex{0.0};
    }
    std::vector<int> bits(k);
    for (std::size_t b = 0; b < k; ++b) {
        bits[b] = static_cast<int>((chosen >> (k - 1 - b)) & 1U);
    }
    return {std::move(bits), std::move(collapsed)};
}

inline MeasurementOutcome measure(const StateVector &state, std::initializer_list<std::size_t> qubits,
                                  Rng &rng) {
    return measure(state, std::span<const std::size_t>(qubits.begin(), qubits.size()), rng);
}

/// Pauli expectation values of the reduced state of `qubit`.
inline BlochVector bloch_vector(const StateVector &state, std::size_t qubit) {
    require(qubit < state.n_qubits(), ErrorKind::out_of_range, "qubit index out of range");
    const std::size_t mask = qubit_mask(state.n_qubits(), qubit);
    double p0 = 0.0;
    double p1 = 0.0;
    Complex coherence = 0.0; // rho_01
    for (std::size_t i = 0; i < state.dim(); ++i) {
        if (i & mask) {
            p1 += state.probability(i);
            continue;
        }
        p0 += state.probability(i);
        coherence += state.amplitude(i) * std::conj(state.amplitude(i | mask));
    }
    return {2.0 * coherence.real(), -2.0 * coherence.imag(), p0 - p1};
}

} // namespace qinfo
