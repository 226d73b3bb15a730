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
 * Hamiltonians as weighted Pauli/ladder strings, exact evolution through the
 * Hermitian eigendecomposition, reduced (open-system) time series and the
 * two-qubit Kraus construction.
 */
#pragma once

#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qinfo/circuit.hpp"
#include "qinfo/core.hpp"
#include "qinfo/density.hpp"
#include "qinfo/experiments.hpp"
#include "qinfo/qstate.hpp"

namespace qinfo {

/// Per-qubit factor of an operator string. Plus = [[0,1],[0,0]], Minus = its adjoint.
enum class Factor { I, X, Y, Z, Plus, Minus };

inline CMatrix factor_matrix(Factor f) {
    CMatrix m = CMatrix::Zero(2, 2);
    switch (f) {
    case Factor::I:
        m = CMatrix::Identity(2, 2);
        break;
    case Factor::X:
        m = detail::pauli_x();
        break;
    case Factor::Y:
        m = detail::pauli_y();
        break;
    case Factor::Z:
        m = detail::pauli_z();
        break;
    case Factor::Plus:
        m(0, 1) = 1.0;
        break;
    case Factor::Minus:
        m(1, 0) = 1.0;
        break;
    }
    return m;
}

inline CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

struct OperatorString {
    std::vector<Factor> factors; ///< factors[0] acts on qubit 0
    Complex coefficient{1.0};

    [[nodiscard]] CMatrix dense() const {
        CMatrix m = CMatrix::Identity(1, 1) * coefficient;
        for (Factor f : factors) {
            m = kron(m, factor_matrix(f));
        }
        return m;
    }
};

/// Identity everywhere except the listed (qubit, factor) pairs.
inline OperatorString operator_string(std::size_t n_qubits,
                                      std::initializer_list<std::pair<std::size_t, Factor>> sites,
                                      Complex coefficient) {
    OperatorString s{std::vector<Factor>(n_qubits, Factor::I), coefficient};
    for (const auto &[q, f] : sites) {
        require(q < n_qubits, ErrorKind::out_of_range, "operator string site out of range");
        s.factors[q] = f;
    }
    return s;
}

class HamiltonianSpec {
  public:
    HamiltonianSpec(std::size_t n_qubits, std::vector<OperatorString> terms)
        : n_qubits_(n_qubits), terms_(std::move(terms)) {
        require(n_qubits >= 1 && n_qubits <= 12, ErrorKind::invalid_argument,
                "Hamiltonian qubit count out of range");
        for (const auto &t : terms_) {
            require(t.factors.size() == n_qubits_, ErrorKind::invalid_argument,
                    "operator string length does not match the qubit count");
        }
    }

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] const std::vector<OperatorString> &terms() const { return terms_; }

    /// Dense sum of the terms; throws if the total is not Hermitian.
    [[nodiscard]] CMatrix dense() const {
        const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits_);
        CMatrix h = CMatrix::Zero(dim, dim);
        for (const auto &t : terms_) {
            h += t.dense();
        }
        require(max_abs(CMatrix(h - h.adjoint())) <= 1e-12, ErrorKind::invalid_argument,
                "Hamiltonian is not Hermitian");
        return h;
    }

  private:
    std::size_t n_qubits_;
    std::vector<OperatorString> terms_;
};

inline HamiltonianSpec build_hamiltonian(std::size_t n_qubits, std::vector<OperatorString> terms) {
    return HamiltonianSpec(n_qubits, std::move(terms));
}

/// -(c11 Z x 1 + c22 1 x Z + c12 (s+ s- + s- s+)); qubit 0 is the system.
inline HamiltonianSpec jaynes_cummings_2q(double c11, double c22, double c12) {
    return HamiltonianSpec(2, {
                                  operator_string(2, {{0, Factor::Z}}, -c11),
                                  operator_string(2, {{1, Factor::Z}}, -c22),
                                  operator_string(2, {{0, Factor::Plus}, {1, Factor::Minus}}, -c12),
                                  operator_string(2, {{0, Factor::Minus}, {1, Factor::Plus}}, -c12),
                              });
}

/// System qubit 0 coupled to environment qubits 1 and 2.
inline HamiltonianSpec jaynes_cummings_3q(double c11, double c22, double c33, double c12,
                                          double c13) {
    return HamiltonianSpec(3, {
                                  operator_string(3, {{0, Factor::Z}}, -c11),
                                  operator_string(3, {{1, Factor::Z}}, -c22),
                                  operator_string(3, {{2, Factor::Z}}, -c33),
                                  operator_string(3, {{0, Factor::Plus}, {1, Factor::Minus}}, -c12),
                                  operator_string(3, {{0, Factor::Minus}, {1, Factor::Plus}}, -c12),
                                  operator_string(3, {{0, Factor::Plus}, {2, Factor::Minus}}, -c13),
                                  operator_string(3, {{0, Factor::Minus}, {2, Factor::Plus}}, -c13),
                              });
}

struct Jc3Couplings {
    double c11 = 0.9;
    double c22 = 0.3;
    double c33 = 0.4;
    double c12 = 0.5;
    double c13 = 0.4;
};

/// exp(-iHt) = V exp(-i Lambda t) V^dag, diagonalized once.
class Propagator {
  public:
    explicit Propagator(const CMatrix &hamiltonian) {
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(hamiltonian);
        require(solver.info() == Eigen::Success, ErrorKind::numerical,
                "eigen-solver failed on Hamiltonian");
        energies_ = solver.eigenvalues();
        vectors_ = solver.eigenvectors();
    }

    explicit Propagator(const HamiltonianSpec &h) : Propagator(h.dense()) {}

    [[nodiscard]] CMatrix unitary(double t) const {
        const auto dim = vectors_.rows();
        if (t == 0.0) {
            return CMatrix::Identity(dim, dim);
        }
        CVector phases(dim);
        for (Eigen::Index k = 0; k < dim; ++k) {
            phases(k) = std::exp(-kI * energies_(k) * t);
        }
        return vectors_ * phases.asDiagonal() * vectors_.adjoint();
    }

    [[nodiscard]] const RVector &energies() const { return energies_; }
    [[nodiscard]] const CMatrix &eigenvectors() const { return vectors_; }

  private:
    RVector energies_;
    CMatrix vectors_;
};

inline StateVector evolve(const Propagator &u, double t, const StateVector &initial) {
    require(static_cast<Eigen::Index>(initial.dim()) == u.eigenvectors().rows(),
            ErrorKind::invalid_argument, "state and Hamiltonian dimensions differ");
    if (t == 0.0) {
        return initial;
    }
    CVector out = u.unitary(t) * initial.amplitudes();
    out.normalize();
    return StateVector::from_amplitudes(std::move(out));
}

inline DensityMatrix evolve(const Propagator &u, double t, const DensityMatrix &initial) {
    require(static_cast<Eigen::Index>(initial.dim()) == u.eigenvectors().rows(),
            ErrorKind::invalid_argument, "state and Hamiltonian dimensions differ");
    if (t == 0.0) {
        return initial;
    }
    const CMatrix m = u.unitary(t);
    CMatrix rho = m * initial.matrix() * m.adjoint();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix(std::move(rho), 1e-10);
}

template <class State> State evolve(const HamiltonianSpec &h, double t, const State &initial) {
    return evolve(Propagator(h), t, initial);
}

/// <psi|H|psi>
inline double energy(const CMatrix &h, const StateVector &psi) {
    return (psi.amplitudes().adjoint() * h * psi.amplitudes())(0, 0).real();
}

struct ReducedSample {
    double t = 0.0;
    DensityMatrix rho;
    double entropy_bits = 0.0;
    double purity = 1.0;
    double offdiag_abs = 0.0; ///< largest |rho_ij|, i != j
};

inline std::vector<ReducedSample> reduced_evolution(const HamiltonianSpec &h,
                                                    const std::vector<double> &t_grid,
                                                    const DensityMatrix &rho0,
                                                    const std::vector<std::size_t> &keep) {
    const Propagator u(h);
    std::vector<ReducedSample> series;
    series.reserve(t_grid.size());
    for (double t : t_grid) {
        DensityMatrix reduced = partial_trace(evolve(u, t, rho0), keep);
        const auto report = von_neumann_entropy(reduced);
        double off = 0.0;
        for (std::size_t i = 0; i < reduced.dim(); ++i) {
            for (std::size_t j = 0; j < reduced.dim(); ++j) {
                if (i != j) {
                    off = std::max(off, std::abs(reduced(i, j)));
                }
            }
        }
        series.push_back({t, std::move(reduced), report.entropy_bits, report.purity, off});
    }
    return series;
}

inline void write_reduced_csv(std::ostream &out, const std::vector<ReducedSample> &series) {
    out << "t,entropy_bits,purity,offdiag_abs";
    const std::size_t dim = series.empty() ? 0 : series.front().rho.dim();
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            out << ",rho" << i << j << "_re,rho" << i << j << "_im";
        }
    }
    out << "\n";
    for (const auto &s : series) {
        out << format_double(s.t) << ',' << format_double(s.entropy_bits) << ','
            << format_double(s.purity) << ',' << format_double(s.offdiag_abs);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                out << ',' << format_double(s.rho(i, j).real()) << ','
                    << format_double(s.rho(i, j).imag());
            }
        }
        out << "\n";
    }
}

/// Two-qubit Rabi setup: system |0>, environment |1>.
inline DensityMatrix rabi_initial_state() {
    return from_statevector(StateVector::basis(2, 0b01));
}

/// Three-qubit setup: system |+>, environment |01>.
inline DensityMatrix decoherence_initial_state() {
    StateVector plus = apply_gate(StateVector(1), standard_gate("H"), {0});
    return from_statevector(plus.tensor(StateVector::basis(2, 0b01)));
}

// ---------------------------------------------------------------------------
// Kraus operators

struct KrausSet {
    CMatrix e11, e12, e21, e22;
    double time = 0.0;
};

/// 2x2 sub-blocks of the joint unitary; system is qubit 0, environment qubit 1.
inline KrausSet kraus_extract(const HamiltonianSpec &h, double t) {
    require(h.n_qubits() == 2, ErrorKind::invalid_argument,
            "Kraus extraction needs a two-qubit Hamiltonian");
    const CMatrix u = Propagator(h).unitary(t);
    auto block = [&](int row_env, int col_env) {
        CMatrix e(2, 2);
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                e(a, b) = u(2 * a + row_env, 2 * b + col_env);
            }
        }
        return e;
    };
    return {block(0, 0), block(0, 1), block(1, 0), block(1, 1), t};
}

/// Reduced system state for environment prepared in |env_bit>.
inline DensityMatrix kraus_apply(const KrausSet &k, const DensityMatrix &rho_s, int env_bit) {
    require(rho_s.n_qubits() == 1, ErrorKind::invalid_argument,
            "Kraus operators act on a single system qubit");
    require(env_bit == 0 || env_bit == 1, ErrorKind::invalid_argument,
            "environment bit must be 0 or 1");
    const CMatrix &a = env_bit == 0 ? k.e11 : k.e12;
    const CMatrix &b = env_bit == 0 ? k.e21 : k.e22;
    CMatrix rho = a * rho_s.matrix() * a.adjoint() + b * rho_s.matrix() * b.adjoint();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix(std::move(rho), 1e-10);
}

/// P_ij = E_ij E_ij^dag
struct KrausProducts {
    CMatrix p11, p12, p21, p22;
};

inline KrausProducts kraus_products(const KrausSet &k) {
    return {k.e11 * k.e11.adjoint(), k.e12 * k.e12.adjoint(), k.e21 * k.e21.adjoint(),
            k.e22 * k.e22.adjoint()};
}

// ---------------------------------------------------------------------------
// SWAP-circuit measurement demonstration

struct SwapDemoResult {
    ExperimentRecord record;
    /// Pearson coefficient of the q0 and q1 registers; empty when either is constant.
    std::optional<double> correlation;
};

inline std::optional<double> pearson(const std::vector<int> &a, const std::vector<int> &b) {
    require(a.size() == b.size() && !a.empty(), ErrorKind::invalid_argument,
            "correlation needs two equal-length samples");
    const double n = static_cast<double>(a.size());
    double sa = 0, sb = 0, sab = 0, saa = 0, sbb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sb += b[i];
        sab += a[i] * b[i];
        saa += a[i] * a[i];
        sbb += b[i] * b[i];
    }
    const double va = saa / n - (sa / n) * (sa / n);
    const double vb = sbb / n - (sb / n) * (sb / n);
    if (va <= 0.0 || vb <= 0.0) {
        return std::nullopt;
    }
    return (sab / n - (sa / n) * (sb / n)) / std::sqrt(va * vb);
}

inline SwapDemoResult swap_measurement_demo(double t, std::size_t shots, std::uint64_t seed) {
    require(t >= 0.0 && t <= 2.0, ErrorKind::invalid_argument, "swap demo needs t in [0, 2]");
    SwapDemoResult result{run_circuit(experiment3_circuit(t), shots, seed), std::nullopt};
    result.correlation =
        pearson(result.record.bit_column("q0"), result.record.bit_column("q1"));
    return result;
}

} // namespace qinfo
