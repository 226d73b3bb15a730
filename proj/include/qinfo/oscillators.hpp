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
 * Gaussian oscillator entanglement: thermal entropy, the two-oscillator
 * thermofield double, correlator-matrix subsystem entropy and the radial
 * lattice area-law scan. Entropies are in bits unless a name says nats.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qinfo/core.hpp"

namespace qinfo {

inline constexpr double kSymplecticTolerance = 1e-9;

/// (c+1/2) log2(c+1/2) - (c-1/2) log2(c-1/2), zero for c within tolerance of 1/2.
inline double entropy_from_c(double c) {
    require(c >= 0.5 - kSymplecticTolerance, ErrorKind::numerical,
            "symplectic eigenvalue below 1/2");
    if (c <= 0.5 + kSymplecticTolerance) {
        return 0.0;
    }
    return (c + 0.5) * std::log2(c + 0.5) - (c - 0.5) * std::log2(c - 0.5);
}

/// Same entropy written through d = c - 1/2, exact for d down to denormals.
inline double entropy_from_excess(double d) {
    if (d <= 0.0) {
        return 0.0;
    }
    return (d + 1.0) * std::log2(d + 1.0) - d * std::log2(d);
}

/// Boltzmann-sum form: -log(1 - e^-x) + x e^-x / (1 - e^-x), x = beta*omega.
inline double thermal_entropy_boltzmann(double beta_omega) {
    require(beta_omega > 0.0 && std::isfinite(beta_omega), ErrorKind::invalid_argument,
            "beta*omega must be positive");
    const double x = beta_omega;
    return (-std::log(-std::expm1(-x)) + x / std::expm1(x)) / std::log(2.0);
}

/// c-form with c = coth(x/2)/2; here c - 1/2 = 1/(e^x - 1).
inline double thermal_entropy_c(double beta_omega) {
    require(beta_omega > 0.0 && std::isfinite(beta_omega), ErrorKind::invalid_argument,
            "beta*omega must be positive");
    return entropy_from_excess(1.0 / std::expm1(beta_omega));
}

inline double thermal_entropy(double beta_omega) {
    const double a = thermal_entropy_boltzmann(beta_omega);
    const double b = thermal_entropy_c(beta_omega);
    require(std::abs(a - b) <= 1e-10, ErrorKind::numerical,
            "thermal entropy closed forms disagree");
    return a;
}

inline double partition_function(double beta_omega) {
    require(beta_omega > 0.0, ErrorKind::invalid_argument, "beta*omega must be positive");
    return 1.0 / (2.0 * std::sinh(beta_omega / 2.0));
}

// ---------------------------------------------------------------------------
// Thermofield double

struct TfdReport {
    double theta = 0.0;
    double omega = 1.0;
    double omega_plus = 0.0;
    double omega_minus = 0.0;
    double A = 0.0;           ///< ground-state squeezing amplitude
    double beta_omega = 0.0;  ///< from tan^2(theta/2) = exp(-beta omega)
    double T_effective = 0.0;
    double c = 0.0;           ///< 1 / (2 cos theta)
    double epsilon = 0.0;     ///< 1 - tan^2(theta/2)
    double S_exact = 0.0;
    double S_approx = 0.0;    ///< -log eps + 1 - eps/2, converted to bits
};

inline TfdReport tfd_pair(double theta, double omega = 1.0) {
    require(theta > 0.0 && theta < kPi / 2, ErrorKind::invalid_argument,
            "theta must lie strictly inside (0, pi/2)");
    require(omega > 0.0, ErrorKind::invalid_argument, "omega must be positive");
    TfdReport r;
    r.theta = theta;
    r.omega = omega;
    r.omega_plus = omega * (1.0 + std::sin(theta)) / std::cos(theta);
    r.omega_minus = omega * (1.0 - std::sin(theta)) / std::cos(theta);
    const double half_tan = std::tan(theta / 2.0);
    r.A = -half_tan;
    r.beta_omega = -2.0 * std::log(half_tan);
    r.T_effective = -omega / (2.0 * std::log(half_tan));
    r.c = 1.0 / (2.0 * std::cos(theta));
    r.epsilon = 1.0 - half_tan * half_tan;
    r.S_exact = thermal_entropy(r.beta_omega);
    r.S_approx = (-std::log(r.epsilon) + 1.0 - 0.5 * r.epsilon) / std::log(2.0);
    return r;
}

// ---------------------------------------------------------------------------
// Coupling matrices and correlators

/// Real symmetric positive-definite K, diagonalized on construction.
class CouplingMatrix {
  public:
    explicit CouplingMatrix(RMatrix k) : k_(std::move(k)) {
        require(k_.rows() == k_.cols() && k_.rows() >= 1, ErrorKind::invalid_argument,
                "coupling matrix must be square and nonempty");
        require(max_abs(RMatrix(k_ - k_.transpose())) <= 1e-12 * std::max(1.0, max_abs(k_)),
                ErrorKind::invalid_argument, "coupling matrix is not symmetric");
        Eigen::SelfAdjointEigenSolver<RMatrix> solver(k_);
        require(solver.info() == Eigen::Success, ErrorKind::numerical,
                "eigen-solver failed on coupling matrix");
        require(solver.eigenvalues().minCoeff() > 0.0, ErrorKind::invalid_argument,
                "coupling matrix is not positive-definite");
        omega2_ = solver.eigenvalues();
        modes_ = solver.eigenvectors();
    }

    [[nodiscard]] std::size_t n() const { return static_cast<std::size_t>(k_.rows()); }
    [[nodiscard]] const RMatrix &matrix() const { return k_; }
    /// Eigenvalues omega_k^2, ascending.
    [[nodiscard]] const RVector &omega_squared() const { return omega2_; }
    [[nodiscard]] const RMatrix &modes() const { return modes_; }

  private:
    RMatrix k_;
    RVector omega2_;
    RMatrix modes_;
};

/// omega^2 [[1 + 2 tan^2, 2 tan / cos], [2 tan / cos, 1 + 2 tan^2]]
inline CouplingMatrix tfd_coupling(double theta, double omega = 1.0) {
    require(theta > 0.0 && theta < kPi / 2, ErrorKind::invalid_argument,
            "theta must lie strictly inside (0, pi/2)");
    const double t = std::tan(theta);
    RMatrix k(2, 2);
    k << 1 + 2 * t * t, 2 * t / std::cos(theta), 2 * t / std::cos(theta), 1 + 2 * t * t;
    return CouplingMatrix(omega * omega * k);
}

struct CorrelatorPair {
    RMatrix X; ///< <phi phi> = K^{-1/2} / 2
    RMatrix P; ///< <pi pi>   = K^{1/2} / 2
};

inline CorrelatorPair correlators(const CouplingMatrix &k) {
    const RVector w = k.omega_squared().cwiseSqrt();
    const RMatrix &v = k.modes();
    return {0.5 * v * w.cwiseInverse().asDiagonal() * v.transpose(),
            0.5 * v * w.asDiagonal() * v.transpose()};
}

namespace detail {

inline RMatrix restrict(const RMatrix &m, const std::vector<std::size_t> &keep) {
    const auto n = static_cast<Eigen::Index>(keep.size());
    RMatrix out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            out(i, j) = m(static_cast<Eigen::Index>(keep[static_cast<std::size_t>(i)]),
                          static_cast<Eigen::Index>(keep[static_cast<std::size_t>(j)]));
        }
    }
    return out;
}

inline RMatrix contiguous(const RMatrix &m, Eigen::Index start, Eigen::Index size) {
    return m.block(start, start, size, size);
}

} // namespace detail

/// c_k = sqrt(eig(X_sub P_sub)), from the symmetric form X^{1/2} P X^{1/2}.
inline std::vector<double> symplectic_eigenvalues(const RMatrix &x_sub, const RMatrix &p_sub) {
    Eigen::SelfAdjointEigenSolver<RMatrix> xs(x_sub);
    require(xs.info() == Eigen::Success, ErrorKind::numerical, "eigen-solver failed on <phi phi>");
    require(xs.eigenvalues().minCoeff() > 0.0, ErrorKind::numerical,
            "<phi phi> block is not positive-definite");
    const RMatrix root =
        xs.eigenvectors() * xs.eigenvalues().cwiseSqrt().asDiagonal() * xs.eigenvectors().transpose();
    RMatrix m = root * p_sub * root;
    m = 0.5 * (m + m.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<RMatrix> ms(m, Eigen::EigenvaluesOnly);
    require(ms.info() == Eigen::Success, ErrorKind::numerical, "eigen-solver failed on X P");
    std::vector<double> c;
    c.reserve(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const double mu = ms.eigenvalues()(i);
        require(mu >= 0.25 - kSymplecticTolerance, ErrorKind::numerical,
                "X P has an eigenvalue below 1/4");
        c.push_back(std::sqrt(std::max(mu, 0.25)));
    }
    return c;
}

inline double entropy_of_block(const RMatrix &x_sub, const RMatrix &p_sub) {
    double s = 0.0;
    for (double c : symplectic_eigenvalues(x_sub, p_sub)) {
        s += entropy_from_c(c);
    }
    return s;
}

/// Entanglement entropy of the oscillators in `keep` for the ground state of K.
inline double subsystem_entropy(const CouplingMatrix &k, std::vector<std::size_t> keep) {
    require(!keep.empty(), ErrorKind::invalid_argument, "subsystem must be nonempty");
    std::sort(keep.begin(), keep.end());
    require(std::adjacent_find(keep.begin(), keep.end()) == keep.end() && keep.back() < k.n(),
            ErrorKind::invalid_argument, "invalid subsystem indices");
    const CorrelatorPair xp = correlators(k);
    return entropy_of_block(detail::restrict(xp.X, keep), detail::restrict(xp.P, keep));
}

// ---------------------------------------------------------------------------
// Radial lattice and area law

/// Radial coupling for angular momentum l on sites j = 1..N (row i is site i+1).
inline CouplingMatrix radial_K(int l, int n_sites) {
    require(l >= 0, ErrorKind::invalid_argument, "angular momentum must be non-negative");
    require(n_sites >= 2, ErrorKind::invalid_argument, "radial lattice needs at least 2 sites");
    RMatrix k = RMatrix::Zero(n_sites, n_sites);
    const double ll = static_cast<double>(l) * (l + 1);
    for (int i = 0; i < n_sites; ++i) {
        const double j = i + 1.0;
        k(i, i) = ((j + 0.5) * (j + 0.5) + (j - 0.5) * (j - 0.5) + ll) / (j * j);
        if (i + 1 < n_sites) {
            k(i, i + 1) = k(i + 1, i) = -(j + 0.5) * (j + 0.5) / (j * (j + 1.0));
        }
    }
    return CouplingMatrix(std::move(k));
}

enum class CutoffMode {
    fixed,    ///< sum l = 0..l_max, then report the tail ratio
    adaptive, ///< stop at the first l whose contribution is below tolerance everywhere
};

struct AreaLawOptions {
    int l_max = 1000;
    CutoffMode mode = CutoffMode::fixed;
    double tail_tolerance = 1e-3;
    double r_min_fraction = 0.75; ///< scanned inner radii r/R
    double fit_fraction = 0.975;  ///< fit uses 0 < r < fit_fraction * R
};

struct AreaLawSample {
    int j_max = 0;
    double r = 0.0;
    double entropy_bits = 0.0;
};

struct EntropyCurve {
    int n_sites = 0;
    double R = 0.0;
    int l_max_used = 0;
    AreaLawOptions options;
    std::vector<AreaLawSample> samples;
    double lambda_bits = 0.0;
    double lambda_nats = 0.0;
    std::size_t fit_points = 0;
    double tail_ratio = 0.0; ///< last l contribution over running sum, max over samples
    bool certified = false;  ///< tail_ratio < tail_tolerance
};

/// Zero-intercept least squares of S = lambda r^2 over 0 < r < fraction * R.
inline std::pair<double, std::size_t> fit_area_law(const std::vector<AreaLawSample> &samples,
                                                   double max_r) {
    double num = 0.0;
    double den = 0.0;
    std::size_t used = 0;
    for (const auto &s : samples) {
        if (s.r > 0.0 && s.r < max_r) {
            const double r2 = s.r * s.r;
            num += r2 * s.entropy_bits;
            den += r2 * r2;
            ++used;
        }
    }
    require(used > 0, ErrorKind::invalid_argument, "no samples inside the fit range");
    return {num / den, used};
}

/**
 * S(r) = sum_l (2l+1) S_l(r), with S_l the entropy of the shell j > j_max
 * for radial_K(l, N) and r = j_max + 1/2. The scan covers j_max with
 * r >= r_min_fraction * R plus the two endpoints j_max = 0 (reported as
 * r = 0) and j_max = N (r = R). The smaller side of the cut is used, which
 * gives the same entropy for a pure global state.
 */
inline EntropyCurve area_law_scan(int n_sites, const AreaLawOptions &options = {}) {
    require(n_sites >= 10, ErrorKind::invalid_argument, "area-law scan needs N >= 10");
    require(options.l_max >= 1, ErrorKind::invalid_argument, "l_max must be at least 1");
    require(options.r_min_fraction > 0.0 && options.r_min_fraction < 1.0 &&
                options.fit_fraction > 0.0 && options.fit_fraction <= 1.0,
            ErrorKind::invalid_argument, "radius fractions must lie in (0, 1]");
    EntropyCurve curve;
    curve.n_sites = n_sites;
    curve.R = n_sites + 0.5;
    curve.options = options;

    std::vector<int> cuts;
    cuts.push_back(0);
    const int first = std::max(
        1, static_cast<int>(std::ceil(options.r_min_fraction * curve.R - 0.5 - 1e-12)));
    for (int j = first; j <= n_sites; ++j) {
        cuts.push_back(j);
    }
    std::vector<double> sums(cuts.size(), 0.0);

    for (int l = 0; l <= options.l_max; ++l) {
        const CouplingMatrix k = radial_K(l, n_sites);
        const CorrelatorPair xp = correlators(k);
        double ratio = 0.0;
        for (std::size_t c = 0; c < cuts.size(); ++c) {
            const int j = cuts[c];
            if (j == 0 || j == n_sites) {
                continue;
            }
            const int inner = j;
            const int outer = n_sites - j;
            const Eigen::Index start = inner <= outer ? 0 : inner;
            const Eigen::Index size = std::min(inner, outer);
            const double s_l = entropy_of_block(detail::contiguous(xp.X, start, size),
                                                detail::contiguous(xp.P, start, size));
            const double term = (2.0 * l + 1.0) * s_l;
            sums[c] += term;
            if (sums[c] > 0.0) {
                ratio = std::max(ratio, term / sums[c]);
            }
        }
        curve.l_max_used = l;
        curve.tail_ratio = ratio;
        if (options.mode == CutoffMode::adaptive && l > 0 && ratio < options.tail_tolerance) {
            break;
        }
    }
    curve.certified = curve.tail_ratio < options.tail_tolerance;

    for (std::size_t c = 0; c < cuts.size(); ++c) {
        const int j = cuts[c];
        curve.samples.push_back({j, j == 0 ? 0.0 : j + 0.5, sums[c]});
    }
    const auto [lambda, used] = fit_area_law(curve.samples, options.fit_fraction * curve.R);
    curve.lambda_bits = lambda;
    curve.lambda_nats = lambda * std::log(2.0);
    curve.fit_points = used;
    return curve;
}

inline void write_area_csv(std::ostream &out, const EntropyCurve &curve) {
    out << "r,S,S_nats\n";
    for (const auto &s : curve.samples) {
        out << format_double(s.r) << ',' << format_double(s.entropy_bits) << ','
            << format_double(s.entropy_bits * std::log(2.0)) << "\n";
    }
}

inline nlohmann::json area_fit_json(const EntropyCurve &curve) {
    return {{"N", curve.n_sites},
            {"R", curve.R},
            {"l_max", curve.l_max_used},
            {"cutoff_mode", curve.options.mode == CutoffMode::fixed ? "fixed" : "adaptive"},
            {"lambda", curve.lambda_nats},
            {"lambda_units", "nats per lattice unit squared"},
            {"lambda_nats", curve.lambda_nats},
            {"lambda_bits", curve.lambda_bits},
            {"fit_range", {0.0, curve.options.fit_fraction * curve.R}},
            {"fit_points", curve.fit_points},
            {"tail_ratio", curve.tail_ratio},
            {"tail_tolerance", curve.options.tail_tolerance},
            {"certified", curve.certified}};
}

} // namespace qinfo
