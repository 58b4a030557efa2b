// Copyright 2026 The bosefield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BOSEFIELD_COMMON_HPP
#define BOSEFIELD_COMMON_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace bosefield {

using Complex = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

inline constexpr Complex kImag{0.0, 1.0};

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSymmetricError : Error {
  using Error::Error;
};
/// Raised when a coupling matrix has a (near-)zero or negative mode.
struct NotPositiveDefiniteError : Error {
  using Error::Error;
};
struct FunctionSingularError : Error {
  using Error::Error;
};
struct NotSelfAdjointError : Error {
  using Error::Error;
};
struct NotUnitaryError : Error {
  using Error::Error;
};
struct NotNormalizedError : Error {
  using Error::Error;
};
struct BasisMismatchError : Error {
  using Error::Error;
};
struct DimensionError : Error {
  using Error::Error;
};
struct NotTranslationInvariantError : Error {
  using Error::Error;
};
struct QuadratureError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};

/// Deterministic uniform double in [0, 1). std::uniform_real_distribution is
/// implementation defined, the raw engine output is not.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform in [lo, hi).
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// Box-Muller standard normal, deterministic given the engine state.
inline double gaussian(std::mt19937_64& rng) {
  double u1 = uniform01(rng);
  double u2 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

/// Pairwise reduction; keeps parallel/ordered summations bit-stable.
inline double pairwise_sum(std::vector<double> terms) {
  if (terms.empty()) return 0.0;
  while (terms.size() > 1) {
    std::size_t half = (terms.size() + 1) / 2;
    for (std::size_t i = 0; i + i + 1 < terms.size() + 1; ++i) {
      if (2 * i + 1 < terms.size())
        terms[i] = terms[2 * i] + terms[2 * i + 1];
      else
        terms[i] = terms[2 * i];
    }
    terms.resize(half);
  }
  return terms[0];
}

inline void require(bool condition, const std::string& message) {
  if (!condition) throw DimensionError(message);
}

}  // namespace bosefield

#endif  // BOSEFIELD_COMMON_HPP
