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

#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "qinfo.hpp"

using namespace qinfo;

namespace {

// Max reconstruction error from the periodic-sinc kernel, same fine grid.
std::vector<double> dirichlet_fidelity(std::size_t n_q, int n_levels) {
    const std::size_t n_phi = std::size_t{1} << n_q;
    const double L = nyquist_L(n_phi);
    const auto xs = sample_points(n_phi);
    const auto grid = uniform_grid(-L, L, kFidelityGridPoints);
    std::vector<double> out;
    for (int n = 0; n < n_levels; ++n) {
        std::vector<double> f;
        for (double x : xs) {
            f.push_back(oracle::hermite_explicit(n, x));
        }
        double worst = 0.0;
        for (double x : grid) {
            worst = std::max(worst, std::abs(oracle::dirichlet_interpolate(f, xs[0], xs[1] - xs[0], x) -
                                             oracle::hermite_explicit(n, x)));
        }
        out.push_back(worst);
    }
    return out;
}

} // namespace

TEST(Digitize, ThreeQubitLadder) {
    const DigitizedField f = digitize(3);
    EXPECT_EQ(f.eigenvalues, (std::vector<int>{7, 5, 3, 1, -1, -3, -5, -7}));
    ASSERT_EQ(f.phi.terms.size(), 3U);
    EXPECT_EQ(f.phi.label(f.phi.terms[0]), "ZII");
    EXPECT_EQ(f.phi.terms[0].coefficient, 4.0);
    EXPECT_EQ(f.phi.label(f.phi.terms[1]), "IZI");
    EXPECT_EQ(f.phi.terms[1].coefficient, 2.0);
    EXPECT_EQ(f.phi.label(f.phi.terms[2]), "IIZ");
    EXPECT_EQ(f.phi.terms[2].coefficient, 1.0);
}

TEST(Digitize, ThreeQubitSquare) {
    const DigitizedField f = digitize(3);
    std::map<std::string, double> terms;
    for (const auto &t : f.phi_squared.terms) {
        terms[f.phi_squared.label(t)] = t.coefficient;
    }
    EXPECT_EQ(terms, (std::map<std::string, double>{
                         {"III", 21.0}, {"ZZI", 16.0}, {"ZIZ", 8.0}, {"IZZ", 4.0}}));
    EXPECT_EQ(f.phi_squared.value(0), 49.0);
}

TEST(Digitize, RoundTripExact) {
    for (std::size_t nq = 1; nq <= 8; ++nq) {
        const DigitizedField f = digitize(nq, 0.5);
        const std::size_t dim = std::size_t{1} << nq;
        for (std::size_t k = 0; k < dim; ++k) {
            const int v = f.eigenvalues[k];
            EXPECT_EQ(v, static_cast<int>(dim) - 1 - 2 * static_cast<int>(k));
            EXPECT_EQ(f.phi.value(k), static_cast<double>(v));
            EXPECT_EQ(f.phi_squared.value(k), static_cast<double>(v * v));
            EXPECT_EQ(2 * f.field_value(k) / f.delta + 1, static_cast<double>(v));
        }
    }
    EXPECT_THROW(digitize(0), Error);
    EXPECT_THROW(digitize(11), Error);
}

TEST(Digitize, DecomposeMatchesBruteForceProjection) {
    Rng rng(41);
    std::vector<double> diag(16);
    for (double &d : diag) {
        d = oracle::gaussian(rng);
    }
    const PauliDecomposition dec = z_decompose(diag);
    for (std::uint32_t m = 0; m < 16; ++m) {
        double c = 0.0;
        for (std::size_t k = 0; k < 16; ++k) {
            c += (std::popcount(static_cast<std::uint32_t>(k) & m) & 1U ? -1.0 : 1.0) * diag[k];
        }
        c /= 16.0;
        const auto it = std::find_if(dec.terms.begin(), dec.terms.end(),
                                     [m](const PauliZTerm &t) { return t.z_mask == m; });
        EXPECT_NEAR(it == dec.terms.end() ? 0.0 : it->coefficient, c, 1e-14);
    }
    EXPECT_THROW(z_decompose({1.0, 2.0, 3.0}), Error);
}

TEST(Digitize, Json) {
    const auto doc = nlohmann::json::parse(to_json(digitize(2)).dump());
    EXPECT_EQ(doc.at("n_q").get<int>(), 2);
    EXPECT_EQ(doc.at("eigenvalues").get<std::vector<int>>(), (std::vector<int>{3, 1, -1, -3}));
    EXPECT_EQ(doc.at("pauli_terms").at("phi_q").size(), 2U);
    EXPECT_EQ(doc.at("pauli_terms").at("phi_q")[0].at("factors").get<std::string>(), "ZI");
}

TEST(Nyquist, Values) {
    EXPECT_NEAR(nyquist_L(8), 3.54, 0.005);
    EXPECT_NEAR(nyquist_L(32), 7.09, 0.005);
    EXPECT_NEAR(nyquist_L(2), std::sqrt(kPi), 1e-15);
    EXPECT_THROW(nyquist_L(1), Error);
}

TEST(Hermite, GroundStateValue) {
    EXPECT_NEAR(hermite_function(0, 0.0), std::pow(kPi, -0.25), 1e-15);
    EXPECT_NEAR(hermite_function(0, 0.0), 0.7511, 1e-4);
    EXPECT_THROW(hermite_function(61, 0.0), Error);
    EXPECT_THROW(hermite_function(-1, 0.0), Error);
}

TEST(Hermite, RecurrenceMatchesExplicit) {
    for (int n = 0; n <= 10; ++n) {
        for (double x : uniform_grid(-5.0, 5.0, 41)) {
            EXPECT_NEAR(hermite_function(n, x), oracle::hermite_explicit(n, x), 1e-10);
        }
    }
}

TEST(Hermite, Orthonormal) {
    for (int m = 0; m <= 8; ++m) {
        for (int n = 0; n <= 8; ++n) {
            const double overlap = oracle::integrate(
                [&](double x) { return hermite_function(m, x) * hermite_function(n, x); }, 12.0, 6001);
            EXPECT_NEAR(overlap, m == n ? 1.0 : 0.0, 1e-8);
        }
    }
}

TEST(Sampling, InterpolantReproducesSamples) {
    const auto xs = sample_points(16);
    std::vector<double> f;
    for (double x : xs) {
        f.push_back(hermite_function(3, x));
    }
    const FourierInterpolant interp(f, xs[0], xs[1] - xs[0]);
    for (std::size_t k = 0; k < xs.size(); ++k) {
        EXPECT_NEAR(interp(xs[k]), f[k], 1e-13);
        EXPECT_NEAR(interp(xs[k]), oracle::dirichlet_interpolate(f, xs[0], xs[1] - xs[0], xs[k]), 1e-13);
    }
    for (double x : uniform_grid(-3.0, 3.0, 37)) {
        EXPECT_NEAR(interp(x), oracle::dirichlet_interpolate(f, xs[0], xs[1] - xs[0], x), 1e-12);
    }
}

TEST(Sampling, MatchesKernelOracle) {
    for (std::size_t nq : {3U, 4U, 5U}) {
        const auto lib = sampling_fidelity(nq, 16);
        const auto ref = dirichlet_fidelity(nq, 16);
        for (std::size_t n = 0; n < 16; ++n) {
            EXPECT_NEAR(lib[n], ref[n], 1e-3 * ref[n] + 1e-15) << nq << ' ' << n;
        }
    }
}

TEST(Sampling, FiveQubitGoldenTable) {
    const double golden[] = {3.820252e-12, 9.159076e-11, 6.765339e-10, 3.646855e-09,
                             6.947539e-09, 7.622075e-08, 2.977468e-07, 1.050468e-06,
                             1.386006e-06, 1.053042e-05, 2.855182e-05, 8.101013e-05,
                             8.645502e-05, 4.940233e-04, 9.797174e-04, 2.436911e-03};
    const auto lib = sampling_fidelity(5, 16);
    for (std::size_t n = 0; n < 16; ++n) {
        EXPECT_NEAR(lib[n], golden[n], 1e-4 * golden[n]) << n;
    }
    for (std::size_t n = 0; n < 9; ++n) {
        EXPECT_LT(lib[n], 1e-5);
    }
}

TEST(Sampling, ThreeQubitsResolveOnlyTheLowestLevels) {
    const auto lib = sampling_fidelity(3, 16);
    EXPECT_LT(lib[0], 1e-2);
    EXPECT_LT(lib[1], 1e-2);
    for (std::size_t n = 2; n < 16; ++n) {
        EXPECT_GT(lib[n], 1e-2);
    }
    EXPECT_THROW(sampling_fidelity(9, 4), Error);
}

TEST(Sampling, DigitizedOscillatorEigenvectors) {
    const auto inf = digitized_oscillator_infidelity(5, 16);
    for (double v : inf) {
        EXPECT_LT(v, 1.1e-6);
    }
    EXPECT_NEAR(inf[15], 1.056e-6, 0.01e-6);
    EXPECT_THROW(digitized_oscillator_infidelity(3, 9), Error);
}

TEST(Schwinger, MatrixShape) {
    const RMatrix h = schwinger_h4({0.5, 0.1});
    EXPECT_EQ(h, h.transpose());
    EXPECT_EQ(h(0, 0), -0.2);
    EXPECT_EQ(h(0, 1), 1.0);
    EXPECT_EQ(h(2, 2), 2.2);
    EXPECT_EQ(h(3, 3), 3.0);
    EXPECT_EQ(h(0, 2), 0.0);
    const RMatrix d = schwinger_h4({0.0, 1.0});
    EXPECT_EQ(RVector(d.diagonal()), (RVector(4) << -2, 1, 4, 3).finished());
}

TEST(Schwinger, GroundStateAgainstJacobi) {
    for (const SchwingerParams p : {SchwingerParams{0.5, 0.1}, SchwingerParams{1.0, 0.0},
                                    SchwingerParams{2.0, 1.0}, SchwingerParams{0.0, 1.0}}) {
        const auto g = schwinger_ground_state(p);
        const auto [w, v] = oracle::jacobi_eigen(schwinger_h4(p));
        EXPECT_NEAR(g.energy, w(0), 1e-12);
        const double sign = v.col(0).dot(Eigen::Map<const RVector>(g.amplitudes.data(), 4)) > 0 ? 1 : -1;
        for (Eigen::Index i = 0; i < 4; ++i) {
            EXPECT_NEAR(g.amplitudes[static_cast<std::size_t>(i)], sign * v(i, 0), 1e-10);
        }
        const Eigen::Map<const RVector> a(g.amplitudes.data(), 4);
        EXPECT_NEAR(a.norm(), 1.0, 1e-12);
        EXPECT_NEAR(a.dot(schwinger_h4(p) * a), g.energy, 1e-12);
    }
}

TEST(Schwinger, GroundStateGolden) {
    const auto g = schwinger_ground_state({0.5, 0.1});
    EXPECT_NEAR(g.energy, -0.810808739618, 1e-10);
    const double expected[] = {0.846255591875, -0.516900311468, 0.126928509287, -0.023551958593};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(g.amplitudes[i], expected[i], 1e-10);
    }
}

TEST(Schwinger, GroundStateLimits) {
    const auto free = schwinger_ground_state({0.0, 1.0});
    EXPECT_EQ(free.amplitudes, (std::array<double, 4>{1.0, 0.0, 0.0, 0.0}));
    EXPECT_GT(std::abs(schwinger_ground_state({0.3, 0.5}).amplitudes[1]), 0.0);
    const auto strong = schwinger_ground_state({20.0, 0.0});
    for (double a : strong.amplitudes) {
        EXPECT_GT(std::abs(a), 0.1);
    }
}

TEST(Schwinger, SpectrumIgnoresSignOfX) {
    for (double x : {0.3, 1.0, 2.5}) {
        Eigen::SelfAdjointEigenSolver<RMatrix> a(schwinger_h4({x, 0.4}));
        Eigen::SelfAdjointEigenSolver<RMatrix> b(schwinger_h4({-x, 0.4}));
        EXPECT_LT(max_abs(RMatrix(a.eigenvalues() - b.eigenvalues())), 1e-12);
    }
}

TEST(Schwinger, EvolutionConservesProbability) {
    const auto grid = uniform_grid(0.0, 10.0, 101);
    const auto series = schwinger_evolve({0.5, 0.1}, grid);
    EXPECT_EQ(series.front().p, (std::array<double, 4>{1.0, 0.0, 0.0, 0.0}));
    for (const auto &s : series) {
        EXPECT_NEAR(s.p[0] + s.p[1] + s.p[2] + s.p[3], 1.0, 1e-10);
    }
    for (const auto &s : schwinger_evolve({0.0, 0.7}, grid)) {
        EXPECT_NEAR(s.p[0], 1.0, 1e-14);
    }
}

TEST(Schwinger, EvolutionRoutesAgree) {
    const auto grid = uniform_grid(0.0, 8.0, 41);
    for (const SchwingerParams p : {SchwingerParams{0.5, 0.1}, SchwingerParams{1.2, -0.3}}) {
        const auto a = schwinger_evolve(p, grid);
        const auto b = schwinger_evolve_qubits(p, grid);
        const CMatrix h = schwinger_h4(p).cast<Complex>();
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const CMatrix u = oracle::expm_taylor(-kI * grid[k] * h);
            for (std::size_t i = 0; i < 4; ++i) {
                EXPECT_NEAR(a[k].p[i], b[k].p[i], 1e-9);
                EXPECT_NEAR(a[k].p[i], std::norm(u(static_cast<Eigen::Index>(i), 0)), 1e-9);
            }
        }
    }
}

TEST(Schwinger, CsvHeader) {
    std::ostringstream out;
    write_schwinger_csv(out, schwinger_evolve({0.5, 0.1}, {0.0, 1.0}));
    EXPECT_EQ(out.str().substr(0, 14), "t,p1,p2,p3,p4\n");
}

TEST(SchwingerProjection, EqualsEffectiveMatrix) {
    for (const SchwingerParams p : {SchwingerParams{0.5, 0.1}, SchwingerParams{1.0, 0.0},
                                    SchwingerParams{2.0, 1.0}}) {
        const auto proj = schwinger_project(p);
        EXPECT_LT(max_abs(RMatrix(proj.h4 - schwinger_h4(p))), 1e-10);
        EXPECT_NEAR(proj.h4(0, 0), -2 * p.mu, 1e-12);
        EXPECT_LT(max_abs(RMatrix(proj.overlaps - RMatrix::Identity(4, 4))), 1e-12);
        EXPECT_TRUE(proj.gauss_law);
        EXPECT_TRUE(proj.flux_truncation);
    }
}

TEST(SchwingerProjection, BasisConsistency) {
    const auto basis = schwinger::basis_states();
    std::set<Eigen::Index> seen;
    for (const auto &state : basis) {
        double norm = 0.0;
        for (const auto &c : state) {
            EXPECT_TRUE(schwinger::gauss_law_holds(c.config));
            EXPECT_TRUE(seen.insert(schwinger::basis_index(c.config)).second);
            norm += c.amplitude * c.amplitude;
        }
        EXPECT_NEAR(norm, 1.0, 1e-15);
    }
    // A lone electron with no flux change is not gauge invariant.
    EXPECT_FALSE(schwinger::gauss_law_holds(schwinger::config({true, false, false, false}, {0, 0, 0, 0})));
}

TEST(SchwingerProjection, FullHamiltonianIsSymmetric) {
    const auto h = schwinger::full_hamiltonian({0.7, 0.2});
    EXPECT_EQ(h.rows(), schwinger::kDim);
    const schwinger::Sparse diff = h - schwinger::Sparse(h.transpose());
    EXPECT_LT(diff.norm(), 1e-12);
}
