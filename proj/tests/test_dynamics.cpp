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

#include "oracles.hpp"
#include "qinfo.hpp"

using namespace qinfo;

namespace {

// Closed-form Rabi transfer for the two-qubit model started in |01>.
double transfer_probability(double c11, double c22, double c12, double t) {
    const double delta = c11 - c22;
    const double omega = std::sqrt(delta * delta + c12 * c12);
    const double s = std::sin(omega * t);
    return c12 * c12 / (omega * omega) * s * s;
}

CMatrix oracle_unitary(const CMatrix &h, double t) { return oracle::expm_taylor(-kI * t * h); }

} // namespace

TEST(OperatorString, DenseFactors) {
    const auto s = operator_string(2, {{0, Factor::Plus}, {1, Factor::Minus}}, 2.0);
    const CMatrix m = s.dense();
    EXPECT_EQ(m(1, 2), Complex(2.0)); // |01><10|
    EXPECT_NEAR(m.cwiseAbs().sum(), 2.0, 1e-15);
    EXPECT_THROW(operator_string(2, {{2, Factor::Z}}, 1.0), Error);
}

TEST(Hamiltonian, RejectsNonHermitian) {
    const HamiltonianSpec h(2, {operator_string(2, {{0, Factor::Plus}}, 1.0)});
    EXPECT_THROW(static_cast<void>(h.dense()), Error);
    const HamiltonianSpec ih(1, {operator_string(1, {{0, Factor::Z}}, kI)});
    EXPECT_THROW(static_cast<void>(ih.dense()), Error);
    EXPECT_THROW(HamiltonianSpec(3, {operator_string(2, {}, 1.0)}), Error);
}

TEST(Hamiltonian, JaynesCummingsMatrix) {
    const CMatrix h = jaynes_cummings_2q(1.0, 0.0, 1.0).dense();
    CMatrix expected = CMatrix::Zero(4, 4);
    expected(0, 0) = -1.0;
    expected(1, 1) = -1.0;
    expected(2, 2) = 1.0;
    expected(3, 3) = 1.0;
    expected(1, 2) = -1.0;
    expected(2, 1) = -1.0;
    EXPECT_LT(max_abs(CMatrix(h - expected)), 1e-15);
}

TEST(Propagator, MatchesTaylorSeries) {
    Rng rng(21);
    for (int i = 0; i < 10; ++i) {
        const CMatrix h = oracle::random_hermitian(8, rng);
        const Propagator u(h);
        for (double t : {0.1, 0.7, 2.5}) {
            EXPECT_LT(max_abs(CMatrix(u.unitary(t) - oracle_unitary(h, t))), 1e-10);
        }
    }
}

TEST(Propagator, UnitaryAndGroupLaw) {
    Rng rng(22);
    const CMatrix h = oracle::random_hermitian(4, rng);
    const Propagator u(h);
    const CMatrix a = u.unitary(0.4);
    EXPECT_LT(max_abs(CMatrix(a * a.adjoint() - CMatrix::Identity(4, 4))), 1e-12);
    EXPECT_LT(max_abs(CMatrix(u.unitary(0.4) * u.unitary(1.1) - u.unitary(1.5))), 1e-12);
    EXPECT_LT(max_abs(CMatrix(u.unitary(-0.9) * u.unitary(0.9) - CMatrix::Identity(4, 4))), 1e-12);
    EXPECT_EQ(u.unitary(0.0), CMatrix::Identity(4, 4));
}

TEST(Evolve, ZeroTimeReturnsInput) {
    const auto h = jaynes_cummings_2q(1.0, 0.0, 1.0);
    const DensityMatrix rho = rabi_initial_state();
    EXPECT_EQ(evolve(h, 0.0, rho).matrix(), rho.matrix());
    const StateVector psi = StateVector::basis(2, 1);
    EXPECT_EQ(evolve(h, 0.0, psi).amplitudes(), psi.amplitudes());
}

TEST(Evolve, ConservesEnergyAndNorm) {
    Rng rng(23);
    const auto h = jaynes_cummings_3q(0.9, 0.3, 0.4, 0.5, 0.4);
    const CMatrix hd = h.dense();
    const Propagator u(h);
    for (int i = 0; i < 20; ++i) {
        const StateVector psi = oracle::random_state(3, rng);
        const double e0 = energy(hd, psi);
        for (double t : {0.3, 4.0, 17.0}) {
            const StateVector out = evolve(u, t, psi);
            EXPECT_NEAR(out.norm_squared(), 1.0, 1e-12);
            EXPECT_NEAR(energy(hd, out), e0, 1e-10);
        }
    }
}

TEST(Evolve, DensityMatchesStateRoute) {
    Rng rng(24);
    const auto h = jaynes_cummings_2q(1.0, 0.4, 0.7);
    const StateVector psi = oracle::random_state(2, rng);
    const StateVector out = evolve(h, 1.3, psi);
    EXPECT_LT(max_abs(CMatrix(evolve(h, 1.3, from_statevector(psi)).matrix() -
                              from_statevector(out).matrix())),
              1e-12);
}

TEST(Rabi, DiagonalMatchesClosedForm) {
    for (const auto &[c11, c22, c12] :
         std::vector<std::tuple<double, double, double>>{{1, 0, 1}, {1, 1, 1}, {0.9, 0.3, 0.5}}) {
        const auto series = reduced_evolution(jaynes_cummings_2q(c11, c22, c12),
                                              uniform_grid(0.0, 10.0, 41), rabi_initial_state(), {0});
        for (const auto &s : series) {
            const double p = transfer_probability(c11, c22, c12, s.t);
            EXPECT_NEAR(s.rho(1, 1).real(), p, 1e-12);
            EXPECT_NEAR(s.rho(0, 0).real(), 1.0 - p, 1e-12);
            EXPECT_NEAR(s.offdiag_abs, 0.0, 1e-12);
            EXPECT_NEAR(s.entropy_bits, entropy_term(p) + entropy_term(1.0 - p), 1e-9);
        }
    }
}

TEST(Rabi, MaximalEntanglementTimes) {
    const auto h = jaynes_cummings_2q(1.0, 0.0, 1.0);
    std::vector<double> times;
    for (int k = 0; k < 5; ++k) {
        times.push_back((2 * k + 1) * std::sqrt(2.0) * kPi / 4);
    }
    for (const auto &s : reduced_evolution(h, times, rabi_initial_state(), {0})) {
        EXPECT_NEAR(s.entropy_bits, 1.0, 1e-9);
        EXPECT_NEAR(s.purity, 0.5, 1e-12);
    }
    const auto back = reduced_evolution(h, {std::sqrt(2.0) * kPi / 2}, rabi_initial_state(), {0});
    EXPECT_NEAR(back.front().entropy_bits, 0.0, 1e-9);
}

TEST(Rabi, SystemAndEnvironmentEntropiesAgree) {
    const auto h = jaynes_cummings_2q(1.0, 0.0, 1.0);
    const auto grid = uniform_grid(0.0, 6.0, 25);
    const auto sys = reduced_evolution(h, grid, rabi_initial_state(), {0});
    const auto env = reduced_evolution(h, grid, rabi_initial_state(), {1});
    for (std::size_t i = 0; i < grid.size(); ++i) {
        EXPECT_NEAR(sys[i].entropy_bits, env[i].entropy_bits, 1e-9);
    }
}

TEST(Decoherence, MatchesTaylorOracle) {
    const auto h = jaynes_cummings_3q(0.9, 0.3, 0.4, 0.5, 0.4);
    const CMatrix hd = h.dense();
    const DensityMatrix rho0 = decoherence_initial_state();
    const auto series = reduced_evolution(h, {0.5, 1.0, 2.0, 5.0}, rho0, {0});
    for (const auto &s : series) {
        const CMatrix u = oracle_unitary(hd, s.t);
        const CMatrix joint = u * rho0.matrix() * u.adjoint();
        const CMatrix reduced = oracle::trace_last_two_of_three(joint);
        EXPECT_LT(max_abs(CMatrix(s.rho.matrix() - reduced)), 1e-10);
    }
}

TEST(Decoherence, GoldenSeries) {
    const auto series = reduced_evolution(jaynes_cummings_3q(0.9, 0.3, 0.4, 0.5, 0.4),
                                          {0.5, 1.0, 2.0, 5.0}, decoherence_initial_state(), {0});
    const double entropy[] = {0.163592251575, 0.403446633802, 0.712911902615, 0.864263649050};
    const double purity[] = {0.953064110989, 0.852195349528, 0.685395367955, 0.591095339069};
    const double off[] = {0.475840842531, 0.418410778300, 0.302596123620, 0.164749515359};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(series[i].entropy_bits, entropy[i], 1e-10);
        EXPECT_NEAR(series[i].purity, purity[i], 1e-10);
        EXPECT_NEAR(series[i].offdiag_abs, off[i], 1e-10);
    }
}

TEST(Decoherence, StartsPureAndLosesCoherence) {
    const auto series = reduced_evolution(jaynes_cummings_3q(0.9, 0.3, 0.4, 0.5, 0.4),
                                          uniform_grid(0.0, 5.0, 11), decoherence_initial_state(),
                                          {0});
    EXPECT_NEAR(series.front().entropy_bits, 0.0, 1e-9);
    EXPECT_NEAR(series.front().offdiag_abs, 0.5, 1e-12);
    EXPECT_LT(series.back().offdiag_abs, series.front().offdiag_abs);
}

TEST(ReducedCsv, HeaderAndRows) {
    const auto series = reduced_evolution(jaynes_cummings_2q(1, 0, 1), uniform_grid(0.0, 1.0, 3),
                                          rabi_initial_state(), {0});
    std::ostringstream out;
    write_reduced_csv(out, series);
    const std::string text = out.str();
    EXPECT_EQ(text.substr(0, text.find('\n')),
              "t,entropy_bits,purity,offdiag_abs,rho00_re,rho00_im,rho01_re,rho01_im,rho10_re,"
              "rho10_im,rho11_re,rho11_im");
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
}

TEST(Kraus, ReproducesJointEvolution) {
    Rng rng(25);
    for (int i = 0; i < 50; ++i) {
        const double c11 = oracle::gaussian(rng);
        const double c22 = oracle::gaussian(rng);
        const double c12 = oracle::gaussian(rng);
        const double t = 3.0 * rng.uniform();
        const auto h = jaynes_cummings_2q(c11, c22, c12);
        const KrausSet k = kraus_extract(h, t);
        const DensityMatrix rho_s = oracle::random_density(1, 1 + i % 2, rng);
        for (int env = 0; env < 2; ++env) {
            const DensityMatrix env_state = from_statevector(StateVector::basis(1, env));
            const DensityMatrix joint(kron(rho_s.matrix(), env_state.matrix()));
            const DensityMatrix direct = partial_trace(evolve(h, t, joint), {0});
            EXPECT_LT(max_abs(CMatrix(kraus_apply(k, rho_s, env).matrix() - direct.matrix())),
                      1e-12);
        }
    }
}

TEST(Kraus, CompletenessAndProductSums) {
    Rng rng(26);
    for (int i = 0; i < 20; ++i) {
        const KrausSet k = kraus_extract(
            jaynes_cummings_2q(oracle::gaussian(rng), oracle::gaussian(rng), oracle::gaussian(rng)),
            2.0 * rng.uniform());
        const CMatrix id = CMatrix::Identity(2, 2);
        EXPECT_LT(max_abs(CMatrix(k.e11.adjoint() * k.e11 + k.e21.adjoint() * k.e21 - id)), 1e-12);
        EXPECT_LT(max_abs(CMatrix(k.e12.adjoint() * k.e12 + k.e22.adjoint() * k.e22 - id)), 1e-12);
        const KrausProducts p = kraus_products(k);
        EXPECT_LT(max_abs(CMatrix(p.p11 + p.p12 - id)), 1e-12);
        EXPECT_LT(max_abs(CMatrix(p.p21 + p.p22 - id)), 1e-12);
    }
}

TEST(Kraus, UnitTimeProducts) {
    const KrausProducts p = kraus_products(kraus_extract(jaynes_cummings_2q(1, 1, 1), 1.0));
    const double s2 = std::sin(1.0) * std::sin(1.0);
    const auto diag = [](double a, double b) {
        CMatrix m = CMatrix::Zero(2, 2);
        m(0, 0) = a;
        m(1, 1) = b;
        return m;
    };
    EXPECT_LT(max_abs(CMatrix(p.p11 - diag(1.0, 1.0 - s2))), 1e-12);
    EXPECT_LT(max_abs(CMatrix(p.p12 - diag(0.0, s2))), 1e-12);
    EXPECT_LT(max_abs(CMatrix(p.p21 - diag(s2, 0.0))), 1e-12);
    EXPECT_LT(max_abs(CMatrix(p.p22 - diag(1.0 - s2, 1.0))), 1e-12);
    EXPECT_NEAR(1.0 - s2, 0.291927, 1e-6);
}

TEST(Kraus, SystemEntropyAtUnitTime) {
    const KrausSet k = kraus_extract(jaynes_cummings_2q(1, 1, 1), 1.0);
    const DensityMatrix plus = from_statevector(apply_gate(StateVector(1), standard_gate("H"), {0}));
    EXPECT_NEAR(von_neumann_entropy(kraus_apply(k, plus, 0)).entropy_bits, 0.305891, 1e-6);
    EXPECT_THROW(kraus_apply(k, plus, 2), Error);
    EXPECT_THROW(kraus_extract(jaynes_cummings_3q(1, 1, 1, 1, 1), 1.0), Error);
}

TEST(SwapDemo, RegistersAreIndependent) {
    const auto r = swap_measurement_demo(0.5, 2000, 7);
    ASSERT_TRUE(r.correlation.has_value());
    EXPECT_LT(std::abs(*r.correlation), 5.0 / std::sqrt(2000.0));
    EXPECT_NEAR(*r.correlation, 0.028449660199, 1e-12);
}

TEST(SwapDemo, ConstantRegisterHasNoCorrelation) {
    for (double t : {0.0, 1.0}) {
        const auto r = swap_measurement_demo(t, 200, 3);
        EXPECT_FALSE(r.correlation.has_value());
        const auto q0 = r.record.bit_column("q0");
        EXPECT_TRUE(std::all_of(q0.begin(), q0.end(), [&](int b) { return b == static_cast<int>(t); }));
    }
    EXPECT_THROW(swap_measurement_demo(2.5, 10, 1), Error);
}

TEST(SwapDemo, Frequencies) {
    const auto r = swap_measurement_demo(0.5, 4000, 11);
    const auto q0 = r.record.bit_column("q0");
    const auto q1 = r.record.bit_column("q1");
    const double f0 = std::accumulate(q0.begin(), q0.end(), 0.0) / 4000.0;
    const double f1 = std::accumulate(q1.begin(), q1.end(), 0.0) / 4000.0;
    const double sigma = 0.5 / std::sqrt(4000.0);
    EXPECT_NEAR(f0, 0.5, 5 * sigma);
    EXPECT_NEAR(f1, 0.5, 5 * sigma);
}

TEST(Pearson, KnownValues) {
    EXPECT_NEAR(*pearson({0, 1, 0, 1}, {0, 1, 0, 1}), 1.0, 1e-15);
    EXPECT_NEAR(*pearson({0, 1, 0, 1}, {1, 0, 1, 0}), -1.0, 1e-15);
    EXPECT_FALSE(pearson({1, 1, 1}, {0, 1, 0}).has_value());
    EXPECT_THROW(pearson({1}, {1, 0}), Error);
}
