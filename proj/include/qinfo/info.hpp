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
 * Classical information: Shannon entropy, the single-bit flip channel and
 * the Bayesian posterior after a noisy readout.
 */
#pragma once

#include <cmath>
#include <numeric>
#include <ostream>
#include <vector>

#include "qinfo/core.hpp"

namespace qinfo {

class Distribution {
  public:
    explicit Distribution(std::vector<double> p) : p_(std::move(p)) {
        require(!p_.empty(), ErrorKind::invalid_argument, "empty distribution");
        for (double v : p_) {
            require(std::isfinite(v) && v >= 0.0, ErrorKind::invalid_argument,
                    "probabilities must be non-negative");
        }
        require(std::abs(std::accumulate(p_.begin(), p_.end(), 0.0) - 1.0) <= 1e-12,
                ErrorKind::invalid_argument, "probabilities must sum to 1");
    }

    Distribution(std::initializer_list<double> p) : Distribution(std::vector<double>(p)) {}

    [[nodiscard]] std::size_t size() const { return p_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return p_.at(i); }
    [[nodiscard]] const std::vector<double> &probabilities() const { return p_; }

  private:
    std::vector<double> p_;
};

/// Readout is correct with probability mu.
class BitFlipNoise {
  public:
    explicit BitFlipNoise(double mu) : mu_(mu) {
        require(mu >= 0.5 && mu <= 1.0, ErrorKind::invalid_argument,
                "bit-flip fidelity mu must lie in [1/2, 1]");
    }

    [[nodiscard]] double mu() const { return mu_; }

  private:
    double mu_;
};

inline double shannon_entropy(const Distribution &d) {
    double s = 0.0;
    for (double p : d.probabilities()) {
        if (p > 0.0) {
            s -= p * std::log2(p);
        }
    }
    return s;
}

inline Distribution readout_distribution(const Distribution &prior, const BitFlipNoise &noise) {
    require(prior.size() == 2, ErrorKind::invalid_argument, "readout needs a binary prior");
    const double mu = noise.mu();
    const double y0 = mu * prior[0] + (1.0 - mu) * prior[1];
    return Distribution({y0, 1.0 - y0});
}

/// P(x | y) for the readout bit y.
inline Distribution bayes_posterior(const Distribution &prior, const BitFlipNoise &noise, int y) {
    require(prior.size() == 2, ErrorKind::invalid_argument, "posterior needs a binary prior");
    require(y == 0 || y == 1, ErrorKind::invalid_argument, "readout bit must be 0 or 1");
    const double mu = noise.mu();
    const double like0 = y == 0 ? mu : 1.0 - mu; // P(y | x=0)
    const double like1 = y == 1 ? mu : 1.0 - mu; // P(y | x=1)
    const double evidence = like0 * prior[0] + like1 * prior[1];
    require(evidence > 0.0, ErrorKind::invalid_argument,
            "readout value has zero probability under this prior");
    const double x0 = like0 * prior[0] / evidence;
    return Distribution({x0, 1.0 - x0});
}

inline double binary_entropy(double p) {
    require(p >= 0.0 && p <= 1.0, ErrorKind::invalid_argument, "probability outside [0,1]");
    return shannon_entropy(Distribution({p, 1.0 - p}));
}

/// Biased-coin entropy on a `points`-sample grid over p in [0,1].
inline void write_coinflip_csv(std::ostream &out, std::size_t points = 101) {
    out << "p,entropy\n";
    for (double p : uniform_grid(0.0, 1.0, points)) {
        out << format_double(p) << ',' << format_double(binary_entropy(p)) << "\n";
    }
}

} // namespace qinfo
