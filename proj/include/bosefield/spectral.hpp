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

#ifndef BOSEFIELD_SPECTRAL_HPP
#define BOSEFIELD_SPECTRAL_HPP

#include <cmath>
#include <functional>

#include "bosefield/common.hpp"

namespace bosefield {

/// Real symmetric positive-definite coupling matrix (frequency squared units).
struct CouplingMatrix {
  MatrixXd entries;

  CouplingMatrix() = default;
  explicit CouplingMatrix(MatrixXd m) : entries(std::move(m)) {
    require(entries.rows() == entries.cols(), "coupling matrix must be square");
  }
  int size() const { return static_cast<int>(entries.rows()); }
};

/// Eigendecomposition of a coupling matrix. Immutable; every matrix function
/// of the frequency operator used elsewhere is evaluated through it.
struct SpectralModel {
  VectorXd frequencies;  // ascending, strictly positive
  MatrixXd modes;        // orthonormal columns
  MatrixXd source;       // the decomposed coupling matrix

  SpectralModel() = default;
  SpectralModel(VectorXd freq, MatrixXd u, MatrixXd src)
      : frequencies(std::move(freq)), modes(std::move(u)), source(std::move(src)) {
    const int n = size();
    require(modes.rows() == n && modes.cols() == n && source.rows() == n && source.cols() == n,
            "spectral model dimensions inconsistent");
    const double orth = (modes.transpose() * modes - MatrixXd::Identity(n, n)).norm();
    if (orth > 1e-10 * std::sqrt(static_cast<double>(n)))
      throw NotUnitaryError("mode matrix is not orthonormal");
    MatrixXd rebuilt = modes * frequencies.array().square().matrix().asDiagonal() * modes.transpose();
    if ((rebuilt - source).norm() > 1e-10 * std::max(1.0, source.norm()))
      throw Error("modes/frequencies do not reconstruct the coupling matrix");
    for (int i = 0; i < n; ++i)
      if (!(frequencies[i] > 0.0)) throw NotPositiveDefiniteError("non-positive frequency");
  }

  int size() const { return static_cast<int>(frequencies.size()); }
};

/// Relative tolerance for the positive-definiteness gate. Below it the
/// smallest mode is treated as a zero mode and the model is rejected.
inline constexpr double kPositiveDefiniteFloor = 1e-10;

inline SpectralModel decompose(const CouplingMatrix& m) {
  const int n = m.size();
  require(n > 0, "empty coupling matrix");
  const double scale = m.entries.norm();
  if ((m.entries - m.entries.transpose()).norm() > 1e-12 * std::max(1.0, scale))
    throw NotSymmetricError("coupling matrix is not symmetric");
  MatrixXd sym = 0.5 * (m.entries + m.entries.transpose());
  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success) throw Error("eigendecomposition failed");
  const VectorXd evals = solver.eigenvalues();  // ascending
  const double largest = evals[n - 1];
  if (!(largest > 0.0) || evals[0] <= kPositiveDefiniteFloor * largest)
    throw NotPositiveDefiniteError("coupling matrix has a zero mode (smallest eigenvalue " +
                                   std::to_string(evals[0]) + ")");
  SpectralModel model;
  model.frequencies = evals.array().sqrt();
  model.modes = solver.eigenvectors();
  model.source = std::move(sym);
  return model;
}

namespace detail {

template <typename Scalar>
Eigen::Vector<Scalar, Eigen::Dynamic> spectral_values(const SpectralModel& s,
                                                      const std::function<Scalar(double)>& f) {
  const int n = s.size();
  Eigen::Vector<Scalar, Eigen::Dynamic> fw(n);
  for (int i = 0; i < n; ++i) {
    fw[i] = f(s.frequencies[i]);
    if (!std::isfinite(std::abs(fw[i])))
      throw FunctionSingularError("scalar function is singular at frequency " +
                                  std::to_string(s.frequencies[i]));
  }
  return fw;
}

}  // namespace detail

/// Evaluates U f(diag w) U^T v for a real scalar function.
inline VectorXd apply_scalar_function(const SpectralModel& s, const std::function<double(double)>& f,
                                      const VectorXd& v) {
  require(v.size() == s.size(), "vector dimension mismatch");
  const VectorXd fw = detail::spectral_values<double>(s, f);
  return s.modes * (fw.asDiagonal() * (s.modes.transpose() * v));
}

/// Same for complex-valued functions of the frequencies.
inline VectorXcd apply_scalar_function(const SpectralModel& s,
                                       const std::function<Complex(double)>& f, const VectorXcd& v) {
  require(v.size() == s.size(), "vector dimension mismatch");
  const VectorXcd fw = detail::spectral_values<Complex>(s, f);
  return s.modes.cast<Complex>() * (fw.asDiagonal() * (s.modes.transpose().cast<Complex>() * v));
}

/// Materialized U f(diag w) U^T.
inline MatrixXd scalar_function_matrix(const SpectralModel& s,
                                       const std::function<double(double)>& f) {
  const VectorXd fw = detail::spectral_values<double>(s, f);
  return s.modes * fw.asDiagonal() * s.modes.transpose();
}

inline MatrixXcd scalar_function_matrix(const SpectralModel& s,
                                        const std::function<Complex(double)>& f) {
  const VectorXcd fw = detail::spectral_values<Complex>(s, f);
  return s.modes.cast<Complex>() * fw.asDiagonal() * s.modes.transpose().cast<Complex>();
}

/// Real power of the frequency operator. All powers exist in finite dimension
/// because the spectrum is strictly positive.
inline MatrixXd omega_power(const SpectralModel& s, double lambda) {
  return scalar_function_matrix(s, [lambda](double w) { return std::pow(w, lambda); });
}

inline VectorXd omega_power_apply(const SpectralModel& s, double lambda, const VectorXd& v) {
  return apply_scalar_function(s, [lambda](double w) { return std::pow(w, lambda); }, v);
}

inline VectorXcd omega_power_apply(const SpectralModel& s, double lambda, const VectorXcd& v) {
  return apply_scalar_function(
      s, [lambda](double w) { return Complex(std::pow(w, lambda), 0.0); }, v);
}

}  // namespace bosefield

#endif  // BOSEFIELD_SPECTRAL_HPP
