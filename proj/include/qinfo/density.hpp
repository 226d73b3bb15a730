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
 * Density matrices: partial trace, purity, von Neumann entropy, mutual
 * information and single-qubit Bloch-ball geometry. Entropies are in bits.
 */
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "qinfo/core.hpp"
#include "qinfo/qstate.hpp"

namespace qinfo {

inline constexpr double kDensityTolerance = 1e-12;
inline constexpr double kEigenClamp = 1e-10;

class DensityMatrix {
  public:
    /// Validates Hermiticity, unit trace and positivity.
    explicit DensityMatrix(CMatrix matrix, double tolerance = kDensityTolerance)
        : matrix_(std::move(matrix)) {
        const auto dim = static_cast<std::size_t>(matrix_.rows());
        require(matrix_.rows() == matrix_.cols() && dim >= 1 && std::has_single_bit(dim),
                ErrorKind::invalid_argument, "density matrix must be square with power-of-two size");
        n_qubits_ = static_cast<std::size_t>(std::countr_zero(dim));
        require(max_abs(CMatrix(matrix_ - matrix_.adjoint())) <= tolerance,
                ErrorKind::invalid_argument, "density matrix is not Hermitian");
        require(std::abs(matrix_.trace() - Complex{1.0}) <= tolerance,
                ErrorKind::invalid_argument, "density matrix trace is not 1");
        if (dim > 1) {
            Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
            require(solver.info() == Eigen::Success, ErrorKind::numerical,
                    "eigen-solver failed on density matrix");
            require(solver.eigenvalues().minCoeff() >= -kEigenClamp, ErrorKind::invalid_argument,
                    "density matrix has a negative eigenvalue");
        }
    }

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
    [[nodiscard]] const CMatrix &matrix() const { return matrix_; }
    [[nodiscard]] Complex operator()(std::size_t i, std::size_t j) const {
        return matrix_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }

  private:
    CMatrix matrix_;
    std::size_t n_qubits_ = 0;
};

inline DensityMatrix from_statevector(const StateVector &state) {
    const CVector &a = state.amplitudes();
    return DensityMatrix(a * a.adjoint());
}

/**
 * Reduced state on `keep` (any order, returned in ascending qubit order).
 * An empty keep gives the 1x1 matrix [1].
 */
inline DensityMatrix partial_trace(const DensityMatrix &rho, std::vector<std::size_t> keep) {
    const std::size_t n = rho.n_qubits();
    std::sort(keep.begin(), keep.end());
    require(std::adjacent_find(keep.begin(), keep.end()) == keep.end(),
            ErrorKind::invalid_argument, "duplicate index in partial trace");
    require(keep.empty() || keep.back() < n, ErrorKind::out_of_range,
            "partial trace index out of range");
    std::vector<std::size_t> traced;
    for (std::size_t q = 0; q < n; ++q) {
        if (!std::binary_search(keep.begin(), keep.end(), q)) {
            traced.push_back(q);
        }
    }
    // Scatter a local index over the given qubit positions.
    auto spread = [n](std::size_t local, const std::vector<std::size_t> &qubits) {
        std::size_t full = 0;
        const std::size_t k = qubits.size();
        for (std::size_t b = 0; b < k; ++b) {
            if ((local >> (k - 1 - b)) & 1U) {
                full |= qubit_mask(n, qubits[b]);
            }
        }
        return full;
    };
    const std::size_t dk = std::size_t{1} << keep.size();
    const std::size_t de = std::size_t{1} << traced.size();
    std::vector<std::size_t> kept_offsets(dk);
    std::vector<std::size_t> env_offsets(de);
    for (std::size_t a = 0; a < dk; ++a) {
        kept_offsets[a] = spread(a, keep);
    }
    for (std::size_t e = 0; e < de; ++e) {
        env_offsets[e] = spread(e, traced);
    }
    CMatrix reduced = CMatrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
    for (std::size_t a = 0; a < dk; ++a) {
        for (std::size_t b = 0; b < dk; ++b) {
            Complex sum = 0.0;
            for (std::size_t e = 0; e < de; ++e) {
                sum += rho(kept_offsets[a] | env_offsets[e], kept_offsets[b] | env_offsets[e]);
            }
            reduced(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = sum;
        }
    }
    return DensityMatrix(std::move(reduced), 1e-10);
}

inline double purity(const DensityMatrix &rho) {
    // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    return rho.matrix().squaredNorm();
}

struct EntropyReport {
    double entropy_bits = 0.0;
    double purity = 1.0;
    std::vector<double> eigenvalues; ///< ascending, clamped at 0
};

/// -x log2 x with 0 log 0 = 0.
inline double entropy_term(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

inline EntropyReport von_neumann_entropy(const DensityMatrix &rho) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.matrix(), Eigen::EigenvaluesOnly);
    require(solver.info() == Eigen::Success, ErrorKind::numerical,
            "eigen-solver failed in entropy");
    EntropyReport report;
    report.purity = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        double lambda = solver.eigenvalues()(i);
        require(lambda >= -kEigenClamp, ErrorKind::numerical,
                "density matrix eigenvalue below the clamping window");
        lambda = std::max(lambda, 0.0);
        report.eigenvalues.push_back(lambda);
        report.entropy_bits += entropy_term(lambda);
        report.purity += lambda * lambda;
    }
    report.entropy_bits = std::max(report.entropy_bits, 0.0);
    return report;
}

/// S_A + S_B - S_AB with A = `partition` and B its complement.
inline double mutual_information(const DensityMatrix &rho, const std::vector<std::size_t> &partition) {
    std::vector<std::size_t> rest;
    for (std::size_t q = 0; q < rho.n_qubits(); ++q) {
        if (std::find(partition.begin(), partition.end(), q) == partition.end()) {
            rest.push_back(q);
        }
    }
    require(!partition.empty() && !rest.empty(), ErrorKind::invalid_argument,
            "mutual information needs a proper bipartition");
    const double sa = von_neumann_entropy(partial_trace(rho, partition)).entropy_bits;
    const double sb = von_neumann_entropy(partial_trace(rho, rest)).entropy_bits;
    return sa + sb - von_neumann_entropy(rho).entropy_bits;
}

inline BlochVector bloch_vector(const DensityMatrix &rho, std::size_t qubit) {
    require(qubit < rho.n_qubits(), ErrorKind::out_of_range, "qubit index out of range");
    const DensityMatrix one = rho.n_qubits() == 1 ? rho : partial_trace(rho, {qubit});
    const Complex c = one(0, 1);
    return {2.0 * c.real(), -2.0 * c.imag(), (one(0, 0) - one(1, 1)).real()};
}

struct BlochBallReport {
    BlochVector bloch;
    double radius = 0.0;
    double determinant = 0.0;
    double entropy_bits = 0.0;
};

/// Single-qubit entropy from the Bloch radius alone.
inline BlochBallReport bloch_ball_analysis(const DensityMatrix &rho) {
    require(rho.n_qubits() == 1, ErrorKind::invalid_argument,
            "Bloch-ball analysis needs a single-qubit density matrix");
    BlochBallReport report;
    report.bloch = bloch_vector(rho, 0);
    report.radius = std::min(report.bloch.radius(), 1.0);
    report.determinant = rho.matrix().determinant().real();
    const double r = report.radius;
    report.entropy_bits = entropy_term((1.0 + r) / 2.0) + entropy_term((1.0 - r) / 2.0);
    return report;
}

inline nlohmann::json to_json(const DensityMatrix &rho) {
    nlohmann::json data = nlohmann::json::array();
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            data.push_back({rho(i, j).real(), rho(i, j).imag()});
        }
    }
    return {{"dimension", rho.dim()}, {"data", std::move(data)}};
}

inline DensityMatrix density_from_json(const nlohmann::json &doc) {
    try {
        const auto dim = doc.at("dimension").get<Eigen::Index>();
        const auto &data = doc.at("data");
        require(dim >= 1 && static_cast<Eigen::Index>(data.size()) == dim * dim,
                ErrorKind::invalid_argument, "density matrix data has the wrong length");
        CMatrix m(dim, dim);
        for (Eigen::Index k = 0; k < dim * dim; ++k) {
            const auto &entry = data.at(static_cast<std::size_t>(k));
            m(k / dim, k % dim) = Complex{entry.at(0).get<double>(), entry.at(1).get<double>()};
        }
        return DensityMatrix(std::move(m));
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::invalid_argument, std::string("malformed density matrix: ") + e.what());
    }
}

} // namespace qinfo
