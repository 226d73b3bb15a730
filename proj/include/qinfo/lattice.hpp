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
 * Scalar-field digitization on qubits (Pauli-Z decompositions, Nyquist
 * window, Hermite sampling fidelity) and the truncated two-site Schwinger
 * model.
 */
#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Sparse>
#include <json.hpp>
#include <unsupported/Eigen/KroneckerProduct>

#include "qinfo/core.hpp"
#include "qinfo/dynamics.hpp"
#include "qinfo/qstate.hpp"

namespace qinfo {

// ---------------------------------------------------------------------------
// Digitization

/// coefficient * product of sigma^z over the qubits set in z_mask (qubit 0 = MSB).
struct PauliZTerm {
    double coefficient = 0.0;
    std::uint32_t z_mask = 0;
};

struct PauliDecomposition {
    std::size_t n_qubits = 0;
    std::vector<PauliZTerm> terms;

    /// Eigenvalue on computational basis state `index`.
    [[nodiscard]] double value(std::size_t index) const {
        double v = 0.0;
        for (const auto &t : terms) {
            const bool odd = std::popcount(static_cast<std::uint32_t>(index) & t.z_mask) & 1U;
            v += odd ? -t.coefficient : t.coefficient;
        }
        return v;
    }

    /// Factor string such as "ZZI" for one term.
    [[nodiscard]] std::string label(const PauliZTerm &t) const {
        std::string s(n_qubits, 'I');
        for (std::size_t q = 0; q < n_qubits; ++q) {
            if (t.z_mask & qubit_mask(n_qubits, q)) {
                s[q] = 'Z';
            }
        }
        return s;
    }
};

/// Decomposes a diagonal into sigma^z strings with a fast Walsh-Hadamard transform.
inline PauliDecomposition z_decompose(std::vector<double> diagonal) {
    const std::size_t dim = diagonal.size();
    require(dim >= 2 && std::has_single_bit(dim), ErrorKind::invalid_argument,
            "diagonal length must be a power of two");
    for (std::size_t h = 1; h < dim; h <<= 1) {
        for (std::size_t i = 0; i < dim; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double a = diagonal[j];
                const double b = diagonal[j + h];
                diagonal[j] = a + b;
                diagonal[j + h] = a - b;
            }
        }
    }
    PauliDecomposition d;
    d.n_qubits = static_cast<std::size_t>(std::countr_zero(dim));
    for (std::size_t m = 0; m < dim; ++m) {
        const double c = diagonal[m] / static_cast<double>(dim);
        if (c != 0.0) {
            d.terms.push_back({c, static_cast<std::uint32_t>(m)});
        }
    }
    return d;
}

struct DigitizedField {
    std::size_t n_q = 0;
    double delta = 1.0;
    std::vector<int> eigenvalues; ///< phi_q on basis state k: N - 1 - 2k
    PauliDecomposition phi;
    PauliDecomposition phi_squared;

    /// Field value phi = delta (phi_q - 1) / 2.
    [[nodiscard]] double field_value(std::size_t index) const {
        return delta * (eigenvalues.at(index) - 1) / 2.0;
    }
};

inline DigitizedField digitize(std::size_t n_q, double delta = 1.0) {
    require(n_q >= 1 && n_q <= 10, ErrorKind::invalid_argument, "n_q must lie in 1..10");
    DigitizedField f;
    f.n_q = n_q;
    f.delta = delta;
    const std::size_t dim = std::size_t{1} << n_q;
    std::vector<double> squares(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const int v = static_cast<int>(dim) - 1 - 2 * static_cast<int>(k);
        f.eigenvalues.push_back(v);
        squares[k] = static_cast<double>(v) * v;
    }
    f.phi.n_qubits = n_q;
    for (std::size_t q = 0; q < n_q; ++q) {
        f.phi.terms.push_back({static_cast<double>(std::size_t{1} << (n_q - 1 - q)),
                               static_cast<std::uint32_t>(qubit_mask(n_q, q))});
    }
    f.phi_squared = z_decompose(std::move(squares));
    return f;
}

inline nlohmann::json to_json(const PauliDecomposition &d) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &t : d.terms) {
        terms.push_back({{"coefficient", t.coefficient}, {"factors", d.label(t)}});
    }
    return terms;
}

inline nlohmann::json to_json(const DigitizedField &f) {
    return {{"n_q", f.n_q},
            {"eigenvalues", f.eigenvalues},
            {"pauli_terms", {{"phi_q", to_json(f.phi)}, {"phi_q_squared", to_json(f.phi_squared)}}}};
}

/// Field-space window for N_phi sample points.
inline double nyquist_L(std::size_t n_phi) {
    require(n_phi >= 2, ErrorKind::invalid_argument, "N_phi must be at least 2");
    return std::sqrt(static_cast<double>(n_phi) * kPi / 2.0);
}

inline constexpr int kMaxHermiteLevel = 60;

/// Normalized oscillator eigenfunction Psi_n(x), by recurrence on Psi_n itself.
inline double hermite_function(int n, double x) {
    require(n >= 0 && n <= kMaxHermiteLevel, ErrorKind::invalid_argument,
            "Hermite level outside the stable range 0..60");
    double prev = std::pow(kPi, -0.25) * std::exp(-x * x / 2.0);
    if (n == 0) {
        return prev;
    }
    double cur = std::sqrt(2.0) * x * prev;
    for (int k = 2; k <= n; ++k) {
        const double next = std::sqrt(2.0 / k) * x * cur - std::sqrt((k - 1.0) / k) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Midpoint sample grid x_k = -L + (k + 1/2) 2L/N.
inline std::vector<double> sample_points(std::size_t n_phi) {
    const double L = nyquist_L(n_phi);
    const double dx = 2.0 * L / static_cast<double>(n_phi);
    std::vector<double> x(n_phi);
    for (std::size_t k = 0; k < n_phi; ++k) {
        x[k] = -L + (static_cast<double>(k) + 0.5) * dx;
    }
    return x;
}

/**
 * Trigonometric interpolant through equispaced samples with period
 * N * dx; the Nyquist mode enters as a cosine so the result is real.
 */
class FourierInterpolant {
  public:
    FourierInterpolant(std::vector<double> samples, double x0, double dx)
        : n_(samples.size()), x0_(x0), period_(dx * static_cast<double>(samples.size())) {
        require(n_ >= 2 && n_ % 2 == 0, ErrorKind::invalid_argument,
                "interpolant needs an even number of samples");
        coeffs_.resize(n_);
        for (std::size_t m = 0; m < n_; ++m) {
            Complex c = 0.0;
            for (std::size_t k = 0; k < n_; ++k) {
                c += samples[k] * std::exp(-2.0 * kPi * kI * static_cast<double>(m * k % n_) /
                                           static_cast<double>(n_));
            }
            coeffs_[m] = c / static_cast<double>(n_);
        }
    }

    [[nodiscard]] double operator()(double x) const {
        const double u = 2.0 * kPi * (x - x0_) / period_;
        const auto half = static_cast<std::ptrdiff_t>(n_ / 2);
        double value = coeffs_[0].real();
        for (std::ptrdiff_t m = 1; m < half; ++m) {
            value += 2.0 * (coeffs_[static_cast<std::size_t>(m)] *
                            std::exp(kI * (static_cast<double>(m) * u)))
                               .real();
        }
        value += (coeffs_[n_ / 2] * std::cos(static_cast<double>(half) * u)).real();
        return value;
    }

  private:
    std::size_t n_;
    double x0_;
    double period_;
    std::vector<Complex> coeffs_;
};

inline constexpr std::size_t kFidelityGridPoints = 4001;

/// Max |interpolant - Psi_n| on a fine grid over [-L, L], for n = 0..n_levels-1.
inline std::vector<double> sampling_fidelity(std::size_t n_q, std::size_t n_levels) {
    require(n_q >= 1 && n_q <= 8, ErrorKind::invalid_argument, "n_q must lie in 1..8");
    require(n_levels >= 1 && n_levels <= kMaxHermiteLevel + 1, ErrorKind::invalid_argument,
            "level count outside the stable range");
    const std::size_t n_phi = std::size_t{1} << n_q;
    const double L = nyquist_L(n_phi);
    const std::vector<double> xs = sample_points(n_phi);
    const std::vector<double> grid = uniform_grid(-L, L, kFidelityGridPoints);
    std::vector<double> errors;
    for (std::size_t n = 0; n < n_levels; ++n) {
        std::vector<double> samples;
        for (double x : xs) {
            samples.push_back(hermite_function(static_cast<int>(n), x));
        }
        const FourierInterpolant f(std::move(samples), xs.front(), xs[1] - xs[0]);
        double worst = 0.0;
        for (double x : grid) {
            worst = std::max(worst, std::abs(f(x) - hermite_function(static_cast<int>(n), x)));
        }
        errors.push_back(worst);
    }
    return errors;
}

/**
 * Supplementary check: 1 - |<v_n|psi_n>|^2 between the eigenvectors of the
 * sampled oscillator Hamiltonian (kinetic term through the discrete Fourier
 * basis) and the normalized samples of Psi_n.
 */
inline std::vector<double> digitized_oscillator_infidelity(std::size_t n_q, std::size_t n_levels) {
    require(n_q >= 1 && n_q <= 8, ErrorKind::invalid_argument, "n_q must lie in 1..8");
    const std::size_t n_phi = std::size_t{1} << n_q;
    require(n_levels >= 1 && n_levels <= n_phi, ErrorKind::invalid_argument,
            "more levels requested than grid points");
    const std::vector<double> xs = sample_points(n_phi);
    const double period = (xs[1] - xs[0]) * static_cast<double>(n_phi);
    const auto n = static_cast<Eigen::Index>(n_phi);
    CMatrix h = CMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            Complex kinetic = 0.0;
            for (Eigen::Index m = 0; m < n; ++m) {
                const Eigen::Index shifted = m < n / 2 ? m : m - n;
                const double p = 2.0 * kPi * static_cast<double>(shifted) / period;
                kinetic += p * p *
                           std::exp(2.0 * kPi * kI * static_cast<double>(shifted * (j - k)) /
                                    static_cast<double>(n));
            }
            h(j, k) = 0.5 * kinetic / static_cast<double>(n);
        }
        const double x = xs[static_cast<std::size_t>(j)];
        h(j, j) += 0.5 * x * x;
    }
    h = 0.5 * (h + h.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
    require(solver.info() == Eigen::Success, ErrorKind::numerical,
            "eigen-solver failed on the digitized oscillator");
    std::vector<double> infidelity;
    for (std::size_t level = 0; level < n_levels; ++level) {
        CVector psi(n);
        for (Eigen::Index j = 0; j < n; ++j) {
            psi(j) = hermite_function(static_cast<int>(level), xs[static_cast<std::size_t>(j)]);
        }
        psi.normalize();
        const double overlap =
            std::abs(solver.eigenvectors().col(static_cast<Eigen::Index>(level)).dot(psi));
        infidelity.push_back(std::max(0.0, 1.0 - overlap * overlap));
    }
    return infidelity;
}

// ---------------------------------------------------------------------------
// Two-site Schwinger model

struct SchwingerParams {
    double x = 0.0;  ///< hopping 1/(ag)^2
    double mu = 0.0; ///< mass 2m/(ag^2)
};

inline RMatrix schwinger_h4(const SchwingerParams &p) {
    require(std::isfinite(p.x) && std::isfinite(p.mu), ErrorKind::invalid_argument,
            "Schwinger parameters must be finite");
    const double r2x = std::sqrt(2.0) * p.x;
    RMatrix h(4, 4);
    h << -2 * p.mu, 2 * p.x, 0, 0,
         2 * p.x, 1, r2x, 0,
         0, r2x, 2 + 2 * p.mu, r2x,
         0, 0, r2x, 3;
    return h;
}

struct SchwingerGroundState {
    double energy = 0.0;
    std::array<double, 4> amplitudes{}; ///< over |s1>..|s4>, first nonzero entry positive
};

inline SchwingerGroundState schwinger_ground_state(const SchwingerParams &p) {
    Eigen::SelfAdjointEigenSolver<RMatrix> solver(schwinger_h4(p));
    require(solver.info() == Eigen::Success, ErrorKind::numerical,
            "eigen-solver failed on the Schwinger Hamiltonian");
    SchwingerGroundState g;
    g.energy = solver.eigenvalues()(0);
    RVector v = solver.eigenvectors().col(0);
    for (Eigen::Index i = 0; i < 4; ++i) {
        if (std::abs(v(i)) > 1e-12) {
            if (v(i) < 0) {
                v = -v;
            }
            break;
        }
    }
    for (Eigen::Index i = 0; i < 4; ++i) {
        g.amplitudes[static_cast<std::size_t>(i)] = v(i);
    }
    return g;
}

struct SchwingerSample {
    double t = 0.0;
    std::array<double, 4> p{};
};

/// p_i(t) = |<s_i| exp(-i H4 t) |s_1>|^2 through the eigen propagator.
inline std::vector<SchwingerSample> schwinger_evolve(const SchwingerParams &params,
                                                     const std::vector<double> &t_grid) {
    const Propagator u(CMatrix(schwinger_h4(params).cast<Complex>()));
    std::vector<SchwingerSample> out;
    for (double t : t_grid) {
        const CMatrix m = u.unitary(t);
        SchwingerSample s{t, {}};
        for (Eigen::Index i = 0; i < 4; ++i) {
            s.p[static_cast<std::size_t>(i)] = std::norm(m(i, 0));
        }
        out.push_back(s);
    }
    return out;
}

/// H4 rewritten on two qubits, |s_{k+1}> = |k> with qubit 0 as the high bit.
inline HamiltonianSpec schwinger_qubit_hamiltonian(const SchwingerParams &params) {
    const CMatrix h = schwinger_h4(params).cast<Complex>();
    const std::array<Factor, 4> paulis{Factor::I, Factor::X, Factor::Y, Factor::Z};
    std::vector<OperatorString> terms;
    for (Factor a : paulis) {
        for (Factor b : paulis) {
            OperatorString s{{a, b}, 1.0};
            const Complex c = (s.dense().adjoint() * h).trace() / 4.0;
            if (std::abs(c) > 1e-15) {
                terms.push_back({{a, b}, Complex{c.real(), 0.0}});
            }
        }
    }
    return HamiltonianSpec(2, std::move(terms));
}

/// Same series via state-vector evolution of the two-qubit encoding.
inline std::vector<SchwingerSample> schwinger_evolve_qubits(const SchwingerParams &params,
                                                            const std::vector<double> &t_grid) {
    const Propagator u(schwinger_qubit_hamiltonian(params));
    const StateVector s1(2);
    std::vector<SchwingerSample> out;
    for (double t : t_grid) {
        const StateVector psi = evolve(u, t, s1);
        SchwingerSample s{t, {}};
        for (std::size_t i = 0; i < 4; ++i) {
            s.p[i] = psi.probability(i);
        }
        out.push_back(s);
    }
    return out;
}

inline void write_schwinger_csv(std::ostream &out, const std::vector<SchwingerSample> &series) {
    out << "t,p1,p2,p3,p4\n";
    for (const auto &s : series) {
        out << format_double(s.t);
        for (double p : s.p) {
            out << ',' << format_double(p);
        }
        out << "\n";
    }
}

namespace schwinger {

inline constexpr int kSites = 4;
inline constexpr int kLinks = 4;
inline constexpr Eigen::Index kDim = 16 * 81;

using Sparse = Eigen::SparseMatrix<double>;

/// Fermion occupation and link flux of one basis configuration.
struct Configuration {
    std::array<bool, kSites> occupied{};
    std::array<int, kLinks> flux{};
};

/// Site n holds an electron for even n, a positron for odd n. Occupied
/// electron sites are qubit |0>, occupied positron sites are qubit |1>.
inline int site_bit(int site, bool occupied) { return (site % 2 == 0) == occupied ? 0 : 1; }

/// Fermion qubits 0..3 (site 0 most significant), then links 0..3 with digit flux + 1.
inline Eigen::Index basis_index(const Configuration &c) {
    Eigen::Index f = 0;
    for (int n = 0; n < kSites; ++n) {
        f = (f << 1) | site_bit(n, c.occupied[static_cast<std::size_t>(n)]);
    }
    Eigen::Index l = 0;
    for (int k = 0; k < kLinks; ++k) {
        l = 3 * l + (c.flux[static_cast<std::size_t>(k)] + 1);
    }
    return f * 81 + l;
}

inline Sparse from_dense(const RMatrix &m) { return m.sparseView(); }

inline Sparse identity(Eigen::Index d) {
    Sparse s(d, d);
    s.setIdentity();
    return s;
}

inline Sparse sigma_plus() {
    RMatrix m = RMatrix::Zero(2, 2);
    m(0, 1) = 1;
    return from_dense(m);
}

inline Sparse sigma_minus() {
    RMatrix m = RMatrix::Zero(2, 2);
    m(1, 0) = 1;
    return from_dense(m);
}

inline Sparse sigma_z() {
    RMatrix m = RMatrix::Zero(2, 2);
    m(0, 0) = 1;
    m(1, 1) = -1;
    return from_dense(m);
}

/// Flux raising on {-1, 0, +1}; the top state is annihilated.
inline Sparse link_raise() {
    RMatrix m = RMatrix::Zero(3, 3);
    m(1, 0) = 1;
    m(2, 1) = 1;
    return from_dense(m);
}

inline Sparse link_lower() { return Sparse(link_raise().transpose()); }

inline Sparse flux_squared() {
    RMatrix m = RMatrix::Zero(3, 3);
    m(0, 0) = 1;
    m(2, 2) = 1;
    return from_dense(m);
}

/// Tensor product with `site_ops[n]` on fermion n and `link_ops[k]` on link k.
inline Sparse embed(const std::array<Sparse, kSites> &site_ops,
                    const std::array<Sparse, kLinks> &link_ops) {
    Sparse out = identity(1);
    for (const auto &op : site_ops) {
        out = Sparse(Eigen::kroneckerProduct(out, op));
    }
    for (const auto &op : link_ops) {
        out = Sparse(Eigen::kroneckerProduct(out, op));
    }
    return out;
}

/**
 * x sum_n (s+_n L+_n s-_{n+1} + s+_{n+1} L-_n s-_n)
 *   + sum_n (l_n^2 + (mu/2) (-1)^n sz_n), periodic in n.
 */
inline Sparse full_hamiltonian(const SchwingerParams &p) {
    auto sites = [] { return std::array<Sparse, kSites>{identity(2), identity(2), identity(2), identity(2)}; };
    auto links = [] { return std::array<Sparse, kLinks>{identity(3), identity(3), identity(3), identity(3)}; };
    Sparse h(kDim, kDim);
    for (int n = 0; n < kSites; ++n) {
        const auto nn = static_cast<std::size_t>(n);
        const auto next = static_cast<std::size_t>((n + 1) % kSites);
        {
            auto s = sites();
            auto l = links();
            s[nn] = sigma_plus();
            s[next] = sigma_minus();
            l[nn] = link_raise();
            h += p.x * embed(s, l);
        }
        {
            auto s = sites();
            auto l = links();
            s[next] = sigma_plus();
            s[nn] = sigma_minus();
            l[nn] = link_lower();
            h += p.x * embed(s, l);
        }
        {
            auto l = links();
            l[nn] = flux_squared();
            h += embed(sites(), l);
        }
        {
            auto s = sites();
            s[nn] = sigma_z();
            h += (n % 2 == 0 ? 0.5 : -0.5) * p.mu * embed(s, links());
        }
    }
    return h;
}

struct Component {
    Configuration config;
    double amplitude;
};

inline Configuration config(std::array<bool, kSites> occ, std::array<int, kLinks> flux) {
    return {occ, flux};
}

/**
 * The four translation- and charge-conjugation-even states. Flux signs
 * follow the orientation under which the hopping term is gauge invariant:
 * l_n - l_{n-1} = +1 across an occupied electron site, -1 across a positron.
 */
inline std::array<std::vector<Component>, 4> basis_states() {
    const double h = 0.5;
    const double r = 1.0 / std::sqrt(2.0);
    const bool o = true;
    const bool e = false;
    return {{
        {{config({e, e, e, e}, {0, 0, 0, 0}), 1.0}},
        {{config({o, o, e, e}, {1, 0, 0, 0}), h},
         {config({e, o, o, e}, {0, -1, 0, 0}), h},
         {config({e, e, o, o}, {0, 0, 1, 0}), h},
         {config({o, e, e, o}, {0, 0, 0, -1}), h}},
        {{config({o, o, o, o}, {1, 0, 1, 0}), r},
         {config({o, o, o, o}, {0, -1, 0, -1}), r}},
        {{config({o, e, e, o}, {1, 1, 1, 0}), h},
         {config({e, o, o, e}, {1, 0, 1, 1}), h},
         {config({o, o, e, e}, {0, -1, -1, -1}), h},
         {config({e, e, o, o}, {-1, -1, 0, -1}), h}},
    }};
}

/// Net charge zero and l_n - l_{n-1} equal to the site charge (e- = +1, e+ = -1).
inline bool gauss_law_holds(const Configuration &c) {
    for (int n = 0; n < kSites; ++n) {
        const int prev = c.flux[static_cast<std::size_t>((n + kLinks - 1) % kLinks)];
        const int jump = c.flux[static_cast<std::size_t>(n)] - prev;
        const int charge = c.occupied[static_cast<std::size_t>(n)] ? (n % 2 == 0 ? 1 : -1) : 0;
        if (jump != charge) {
            return false;
        }
    }
    return true;
}

} // namespace schwinger

struct SchwingerProjection {
    RMatrix h4;       ///< <s_i|H|s_j>
    RMatrix overlaps; ///< <s_i|s_j>
    bool gauss_law = false;
    bool flux_truncation = false; ///< every component has sum l^2 < 4
};

/// Builds the 1296-dimensional Hamiltonian and projects it onto |s_1>..|s_4>.
inline SchwingerProjection schwinger_project(const SchwingerParams &params) {
    using namespace schwinger;
    const Sparse h = full_hamiltonian(params);
    RMatrix states = RMatrix::Zero(kDim, 4);
    SchwingerProjection out;
    out.gauss_law = true;
    out.flux_truncation = true;
    const auto basis = basis_states();
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (const auto &c : basis[static_cast<std::size_t>(i)]) {
            int sum_sq = 0;
            for (int f : c.config.flux) {
                require(f >= -1 && f <= 1, ErrorKind::internal_fault,
                        "basis state outside the flux truncation");
                sum_sq += f * f;
            }
            out.flux_truncation = out.flux_truncation && sum_sq < 4;
            out.gauss_law = out.gauss_law && gauss_law_holds(c.config);
            states(basis_index(c.config), i) += c.amplitude;
        }
    }
    require(out.gauss_law && out.flux_truncation, ErrorKind::internal_fault,
            "Schwinger basis state violates Gauss's law or the flux truncation");
    out.overlaps = states.transpose() * states;
    out.h4 = states.transpose() * (h * states);
    return out;
}

} // namespace qinfo
