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
 * Shared numeric types, the error type and the portable random stream.
 */
#pragma once

#include <charconv>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <Eigen/Dense>

namespace qinfo {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

enum class ErrorKind {
    invalid_argument, ///< caller supplied something outside the contract
    out_of_range,     ///< qubit/site index outside the register
    numerical,        ///< eigen-solver failure or tolerance violation
    internal_fault,   ///< a state the algorithms should never reach
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::invalid_argument:
        return "invalid_argument";
    case ErrorKind::out_of_range:
        return "out_of_range";
    case ErrorKind::numerical:
        return "numerical";
    case ErrorKind::internal_fault:
        return "internal_fault";
    }
    return "unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

inline void require(bool condition, ErrorKind kind, const std::string &what) {
    if (!condition) {
        throw Error(kind, what);
    }
}

/**
 * Seeded 64-bit Mersenne Twister. The engine output is fixed by the
 * standard; uniform() maps it to [0,1) with explicit bit arithmetic so
 * draws are identical on every platform (std::uniform_real_distribution
 * is implementation-defined).
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Fair coin: 0 or 1.
    int bit() { return static_cast<int>(engine_() >> 63); }

    std::uint64_t next() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

/// Shortest decimal text that parses back to exactly `value`.
inline std::string format_double(double value) {
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc{}) {
        throw Error(ErrorKind::internal_fault, "double formatting failed");
    }
    return {buffer, end};
}

inline double max_abs(const CMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const RMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Uniform grid of `points` samples covering [start, stop] inclusive.
inline std::vector<double> uniform_grid(double start, double stop, std::size_t points) {
    require(points >= 1, ErrorKind::invalid_argument, "grid needs at least one point");
    std::vector<double> grid(points);
    if (points == 1) {
        grid[0] = start;
        return grid;
    }
    const double step = (stop - start) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = start + step * static_cast<double>(i);
    }
    grid.back() = stop;
    return grid;
}

} // namespace qinfo
