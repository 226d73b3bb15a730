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
#include <gtest/gtest.h>

#include <sstream>

#include "qinfo.hpp"

using namespace qinfo;

TEST(EntangledState, Endpoints) {
    EXPECT_NEAR(std::abs(entangled_state(0.0).amplitude(0)), 1.0, 1e-15);
    EXPECT_NEAR(entangled_entropy(0.0), 0.0, 1e-12);
    EXPECT_NEAR(entangled_entropy(kPi / 2), 0.0, 1e-12);
    EXPECT_NEAR(entangled_entropy(kPi / 4), 1.0, 1e-12);
    EXPECT_THROW(entangled_state(-0.1), Error);
    EXPECT_THROW(entangled_state(2.0), Error);
}

TEST(EntangledState, EntropyFormula) {
    const double expected = -(0.75 * std::log2(0.75) + 0.25 * std::log2(0.25));
    EXPECT_NEAR(entangled_entropy(kPi / 6), expected, 1e-10);
    EXPECT_NEAR(entangled_entropy(kPi / 6), 0.811278, 1e-6);
    for (double a : uniform_grid(0.0, kPi / 2, 31)) {
        const double c2 = std::cos(a) * std::cos(a);
        EXPECT_NEAR(entangled_entropy(a), entropy_term(c2) + entropy_term(1.0 - c2), 1e-9);
    }
}

TEST(Expectations, MaximalViolation) {
    const auto r = chsh_expectations({kPi / 4, kPi / 4, 3 * kPi / 4});
    EXPECT_NEAR(r.e_bell, 2 * std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(r.violation, 2 * std::sqrt(2.0) - 2, 1e-12);
    EXPECT_NEAR(r.e_bell, r.e_qs + r.e_rs + r.e_rt - r.e_qt, 1e-15);
}

TEST(Expectations, ProductStateHasNoTransverseCorrelation) {
    const auto r = chsh_expectations({0.0, 0.3, 1.9});
    EXPECT_EQ(r.e_rs, 0.0);
    EXPECT_EQ(r.e_rt, 0.0);
}

TEST(Expectations, EqualBobAngles) {
    for (double a : {0.2, 0.6, 1.1}) {
        for (double b : {0.1, 1.0, 2.5}) {
            const auto r = chsh_expectations({a, b, b});
            EXPECT_NEAR(r.e_bell, 2 * std::sin(2 * a) * std::sin(b), 1e-12);
        }
    }
}

TEST(Expectations, MatchStateAverages) {
    // <psi| A x B |psi> with A in {Z, X}, B = cos b Z + sin b X.
    const CMatrix z = detail::pauli_z();
    const CMatrix x = detail::pauli_x();
    for (double a : uniform_grid(0.05, 1.5, 7)) {
        const ChshSettings s{a, 0.7, 2.2};
        const CVector psi = entangled_state(a).amplitudes();
        auto corr = [&](const CMatrix &alice, double beta) {
            const CMatrix bob = std::cos(beta) * z + std::sin(beta) * x;
            return (psi.adjoint() * kron(alice, bob) * psi)(0, 0).real();
        };
        const auto r = chsh_expectations(s);
        EXPECT_NEAR(r.e_qs, corr(z, s.beta), 1e-12);
        EXPECT_NEAR(r.e_qt, corr(z, s.beta_prime), 1e-12);
        EXPECT_NEAR(r.e_rs, corr(x, s.beta), 1e-12);
        EXPECT_NEAR(r.e_rt, corr(x, s.beta_prime), 1e-12);
    }
}

TEST(Optimal, ValueAndAngles) {
    for (double a : uniform_grid(0.0, kPi / 2, 41)) {
        const auto [s, best] = optimal_settings(a);
        const double s2a = std::sin(2 * a);
        const double norm = std::sqrt(1 + s2a * s2a);
        EXPECT_NEAR(best, 2 * norm, 1e-12);
        EXPECT_NEAR(std::cos(s.beta), 1 / norm, 1e-12);
        EXPECT_NEAR(std::sin(s.beta), s2a / norm, 1e-12);
        EXPECT_NEAR(std::cos(s.beta_prime), -std::cos(s.beta), 1e-12);
        EXPECT_NEAR(std::sin(s.beta_prime), std::sin(s.beta), 1e-12);
        EXPECT_NEAR(chsh_expectations(s).e_bell, best, 1e-12);
        EXPECT_LE(best, 2 * std::sqrt(2.0) + 1e-12);
        EXPECT_GE(best, 2.0 - 1e-12);
    }
    EXPECT_NEAR(optimal_settings(kPi / 4).second, 2.828427, 1e-6);
    EXPECT_NEAR(optimal_settings(0.0).second, 2.0, 1e-15);
}

TEST(Optimal, BeatsGridSearch) {
    for (double a : {0.1, 0.4, 0.785, 1.2}) {
        double best = -10.0;
        for (double b : uniform_grid(0.0, 2 * kPi, 181)) {
            for (double bp : uniform_grid(0.0, 2 * kPi, 181)) {
                best = std::max(best, chsh_expectations({a, b, bp}).e_bell);
            }
        }
        EXPECT_GE(optimal_settings(a).second, best - 1e-12);
        EXPECT_NEAR(optimal_settings(a).second, best, 2e-3);
    }
}

TEST(FixedBeta, CrossingNearTwelveDegrees) {
    const double cross = fixed_beta_crossing();
    EXPECT_NEAR(chsh_expectations(fixed_beta_settings(cross)).e_bell, 2.0, 1e-12);
    EXPECT_NEAR(cross * 180 / kPi, 12.0, 0.5);
    EXPECT_GT(chsh_expectations(fixed_beta_settings(cross + 0.01)).e_bell, 2.0);
    EXPECT_LT(chsh_expectations(fixed_beta_settings(cross - 0.01)).e_bell, 2.0);
    for (double a : {0.1, 0.5, 1.0}) {
        EXPECT_NEAR(chsh_expectations(fixed_beta_settings(a)).e_bell,
                    std::sqrt(2.0) * (1 + std::sin(2 * a)), 1e-12);
    }
}

TEST(HiddenVariables, EveryAssignmentIsBounded) {
    const auto table = hidden_variable_table();
    ASSERT_EQ(table.size(), 16U);
    int plus = 0;
    for (const auto &c : table) {
        EXPECT_TRUE(c.value == 2 || c.value == -2);
        EXPECT_EQ(c.value, c.q * c.s + c.r * c.s + c.r * c.t - c.q * c.t);
        plus += c.value == 2;
    }
    EXPECT_EQ(plus, 8);
}

TEST(Sampled, MaximalViolationWithinFiveSigma) {
    const auto [s, best] = optimal_settings(kPi / 4);
    const auto r = sampled_chsh(s, 100000, 2026);
    EXPECT_NEAR(r.e_bell, best, 5 * r.stderr_bell);
    EXPECT_GT(r.e_bell, 2.0);
    std::size_t total = 0;
    for (auto c : r.counts) {
        total += c;
    }
    EXPECT_EQ(total, 100000U);
}

TEST(Sampled, ProductStateAtClassicalBound) {
    const auto [s, best] = optimal_settings(0.0);
    const auto r = sampled_chsh(s, 10000, 5);
    EXPECT_NEAR(best, 2.0, 1e-15);
    EXPECT_NEAR(r.e_bell, 2.0, 5 * r.stderr_bell + 1e-12);
}

TEST(Sampled, PairsConvergeAndAreBounded) {
    const ChshSettings s{0.5, 0.9, 2.0};
    const auto exact = chsh_expectations(s);
    const auto r = sampled_chsh(s, 40000, 17);
    const std::array<double, 4> e{exact.e_qs, exact.e_qt, exact.e_rs, exact.e_rt};
    const std::array<double, 4> m{r.e_qs, r.e_qt, r.e_rs, r.e_rt};
    for (int k = 0; k < 4; ++k) {
        EXPECT_LE(std::abs(m[k]), 1.0);
        EXPECT_NEAR(m[k], e[k], 5 * r.stderr_pairs[k] + 1e-9);
    }
}

TEST(Sampled, DeterministicPerSeed) {
    const ChshSettings s{0.3, 0.4, 2.0};
    const auto a = sampled_chsh(s, 500, 9);
    const auto b = sampled_chsh(s, 500, 9);
    EXPECT_EQ(a.e_bell, b.e_bell);
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_THROW(sampled_chsh(s, 0, 9), Error);
}

TEST(ChshCsv, ViolationCurve) {
    const auto alphas = uniform_grid(0.0, kPi / 2, 21);
    std::ostringstream out;
    write_chsh_csv(out, alphas);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "alpha,entropy,violation");
    std::size_t row = 0;
    while (std::getline(in, line)) {
        const double a = alphas[row++];
        const double violation = std::stod(line.substr(line.rfind(',') + 1));
        const double s2a = std::sin(2 * a);
        EXPECT_NEAR(violation, 2 * (std::sqrt(1 + s2a * s2a) - 1), 1e-12);
    }
    EXPECT_EQ(row, alphas.size());
}
