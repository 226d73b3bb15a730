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
 * CHSH inequality for the family cos(a)|00> + sin(a)|11>: analytic
 * correlators, optimal settings, hidden-variable bound and sampling.
 */
#pragma once

#include <array>
#include <cmath>
#include <ostream>
#include <utility>
#include <vector>

#include "qinfo/core.hpp"
#include "qinfo/density.hpp"
#include "qinfo/qstate.hpp"

namespace qinfo {

struct ChshSettings {
    double alpha = kPi / 4;
    double beta = kPi / 4;
    double beta_prime = 3 * kPi / 4;
};

struct ChshResult {
    double e_qs = 0, e_qt = 0, e_rs = 0, e_rt = 0;
    double e_bell = 0;
    double violation = 0;
    /// Sampled runs only: standard errors of the four correlators and of e_bell.
    std::array<double, 4> stderr_pairs{};
    double stderr_bell = 0;
    std::array<std::size_t, 4> counts{};
};

inline StateVector entangled_state(double alpha) {
    require(alpha >= 0.0 && alpha <= kPi / 2, ErrorKind::invalid_argument,
            "alpha must lie in [0, pi/2]");
    CVector a = CVector::Zero(4);
    a(0) = std::cos(alpha);
    a(3) = std::sin(alpha);
    return StateVector::from_amplitudes(std::move(a));
}

/// Reduced-state entropy of one qubit of entangled_state(alpha), in bits.
inline double entangled_entropy(double alpha) {
    return von_neumann_entropy(partial_trace(from_statevector(entangled_state(alpha)), {0}))
        .entropy_bits;
}

inline double bell_combination(double qs, double qt, double rs, double rt) {
    return qs + rs + rt - qt;
}

inline ChshResult chsh_expectations(const ChshSettings &s) {
    ChshResult r;
    const double s2a = std::sin(2 * s.alpha);
    r.e_qs = std::cos(s.beta);
    r.e_qt = std::cos(s.beta_prime);
    r.e_rs = s2a * std::sin(s.beta);
    r.e_rt = s2a * std::sin(s.beta_prime);
    r.e_bell = bell_combination(r.e_qs, r.e_qt, r.e_rs, r.e_rt);
    r.violation = r.e_bell - 2.0;
    return r;
}

/// Settings maximizing e_bell for this alpha, with the maximum 2 sqrt(1 + sin^2 2a).
inline std::pair<ChshSettings, double> optimal_settings(double alpha) {
    require(alpha >= 0.0 && alpha <= kPi / 2, ErrorKind::invalid_argument,
            "alpha must lie in [0, pi/2]");
    const double s2a = std::sin(2 * alpha);
    const double norm = std::sqrt(1.0 + s2a * s2a);
    const double beta = std::atan2(s2a / norm, 1.0 / norm);
    return {{alpha, beta, kPi - beta}, 2.0 * norm};
}

inline ChshSettings fixed_beta_settings(double alpha) { return {alpha, kPi / 4, 3 * kPi / 4}; }

/// alpha at which sqrt(2)(1 + sin 2a) = 2.
inline double fixed_beta_crossing() { return 0.5 * std::asin(std::sqrt(2.0) - 1.0); }

/**
 * Monte Carlo CHSH run. Each shot picks Alice's observable (Z or X) and
 * Bob's angle (beta or beta') with a fair coin, rotates into the eigenbasis
 * and measures both qubits in the computational basis.
 */
inline ChshResult sampled_chsh(const ChshSettings &settings, std::size_t shots,
                               std::uint64_t seed) {
    require(shots >= 1, ErrorKind::invalid_argument, "need at least one shot");
    const StateVector psi = entangled_state(settings.alpha);
    const Gate h = standard_gate("H");
    const std::array<Gate, 2> bob_rot{standard_gate("YPow", {settings.beta / kPi}),
                                      standard_gate("YPow", {settings.beta_prime / kPi})};
    // Pre-rotated states for the four basis choices, indexed 2*alice + bob.
    std::array<StateVector, 4> rotated{psi, psi, psi, psi};
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            StateVector s = psi;
            if (a == 1) {
                s = apply_gate(std::move(s), h, {0});
            }
            rotated[2 * a + b] = apply_gate(std::move(s), bob_rot[b], {1});
        }
    }
    Rng rng(seed);
    std::array<double, 4> sums{};
    std::array<std::size_t, 4> counts{};
    for (std::size_t shot = 0; shot < shots; ++shot) {
        const int a = rng.bit();
        const int b = rng.bit();
        const auto outcome = measure(rotated[2 * a + b], {0, 1}, rng);
        const int product = (1 - 2 * outcome.bits[0]) * (1 - 2 * outcome.bits[1]);
        sums[2 * a + b] += product;
        ++counts[2 * a + b];
    }
    std::array<double, 4> mean{};
    ChshResult r;
    r.counts = counts;
    double var_bell = 0.0;
    for (int k = 0; k < 4; ++k) {
        const double n = static_cast<double>(counts[k]);
        mean[k] = counts[k] > 0 ? sums[k] / n : 0.0;
        r.stderr_pairs[k] = counts[k] > 0 ? std::sqrt((1.0 - mean[k] * mean[k]) / n) : 1.0;
        var_bell += r.stderr_pairs[k] * r.stderr_pairs[k];
    }
    // index order: QS, QT, RS, RT
    r.e_qs = mean[0];
    r.e_qt = mean[1];
    r.e_rs = mean[2];
    r.e_rt = mean[3];
    r.e_bell = bell_combination(r.e_qs, r.e_qt, r.e_rs, r.e_rt);
    r.violation = r.e_bell - 2.0;
    r.stderr_bell = std::sqrt(var_bell);
    return r;
}

struct HiddenVariableCase {
    int q, r, s, t;
    int value; ///< qs + rs + rt - qt
};

/// All 16 deterministic assignments of (q, r, s, t) in {-1, +1}.
inline std::vector<HiddenVariableCase> hidden_variable_table() {
    std::vector<HiddenVariableCase> table;
    for (int mask = 0; mask < 16; ++mask) {
        auto sign = [mask](int bit) { return (mask >> bit) & 1 ? -1 : 1; };
        const int q = sign(3), r = sign(2), s = sign(1), t = sign(0);
        table.push_back({q, r, s, t, q * s + r * s + r * t - q * t});
    }
    return table;
}

/// alpha, entropy, violation at the optimal settings.
inline void write_chsh_csv(std::ostream &out, const std::vector<double> &alphas) {
    out << "alpha,entropy,violation\n";
    for (double a : alphas) {
        out << format_double(a) << ',' << format_double(entangled_entropy(a)) << ','
            << format_double(optimal_settings(a).second - 2.0) << "\n";
    }
}

} // namespace qinfo
