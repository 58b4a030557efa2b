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

#ifndef BOSEFIELD_CLASSICAL_HPP
#define BOSEFIELD_CLASSICAL_HPP

#include <cmath>

#include "bosefield/spectral.hpp"

namespace bosefield {

/// Classical state: displacements and momenta of the oscillators.
struct PhaseVector {
  VectorXd q;
  VectorXd p;

  PhaseVector() = default;
  PhaseVector(VectorXd q_, VectorXd p_) : q(std::move(q_)), p(std::move(p_)) {
    require(q.size() == p.size(), "phase vector components must have equal length");
  }
  static PhaseVector zero(int n) { return {VectorXd::Zero(n), VectorXd::Zero(n)}; }
  int size() const { return static_cast<int>(q.size()); }
  double norm() const { return std::sqrt(q.squaredNorm() + p.squaredNorm()); }
};

inline PhaseVector operator+(const PhaseVector& a, const PhaseVector& b) {
  return {a.q + b.q, a.p + b.p};
}
inline PhaseVector operator-(const PhaseVector& a, const PhaseVector& b) {
  return {a.q - b.q, a.p - b.p};
}
inline PhaseVector operator*(double c, const PhaseVector& x) { return {c * x.q, c * x.p}; }

/// One-particle vector: the complex image of a phase-space point.
struct ComplexAmplitude {
  VectorXcd z;

  ComplexAmplitude() = default;
  explicit ComplexAmplitude(VectorXcd z_) : z(std::move(z_)) {}
  int size() const { return static_cast<int>(z.size()); }
  double norm() const { return z.norm(); }
};

inline void check_dims(const SpectralModel& s, const PhaseVector& x) {
  require(x.size() == s.size(), "phase vector dimension mismatch");
}

/// Total energy, (p.p + q.W^2 q) / 2.
inline double hamiltonian(const SpectralModel& s, const PhaseVector& x) {
  check_dims(s, x);
  return 0.5 * (x.p.squaredNorm() + x.q.dot(s.source * x.q));
}

/// s(X, X') = q.p' - q'.p. Antisymmetric, model independent.
inline double symplectic_form(const PhaseVector& x, const PhaseVector& y) {
  require(x.size() == y.size(), "phase vector dimension mismatch");
  return x.q.dot(y.p) - y.q.dot(x.p);
}

/// The compatible complex structure: J(q, p) = (-W^{-1} p, W q).
inline PhaseVector apply_j(const SpectralModel& s, const PhaseVector& x) {
  check_dims(s, x);
  return {-omega_power_apply(s, -1.0, x.p), omega_power_apply(s, 1.0, x.q)};
}

/// Hamiltonian flow, cos(Wt) I - sin(Wt) J applied to (q, p).
inline PhaseVector flow(const SpectralModel& s, const PhaseVector& x, double t) {
  check_dims(s, x);
  auto cos_t = [t](double w) { return std::cos(w * t); };
  VectorXd q = apply_scalar_function(s, cos_t, x.q) +
               apply_scalar_function(s, [t](double w) { return std::sin(w * t) / w; }, x.p);
  VectorXd p = apply_scalar_function(s, cos_t, x.p) -
               apply_scalar_function(s, [t](double w) { return w * std::sin(w * t); }, x.q);
  return {std::move(q), std::move(p)};
}

/// Riemannian metric g(X, Y) = s(X, JY): the natural inner product on the
/// phase space normed by the frequency operator.
inline double g_metric(const SpectralModel& s, const PhaseVector& x, const PhaseVector& y) {
  check_dims(s, x);
  check_dims(s, y);
  return x.q.dot(omega_power_apply(s, 1.0, y.q)) + x.p.dot(omega_power_apply(s, -1.0, y.p));
}

/// Complex inner product <X, Y>_+ = (g(X,Y) + i s(X,Y)) / 2.
inline Complex inner_plus(const SpectralModel& s, const PhaseVector& x, const PhaseVector& y) {
  return 0.5 * Complex(g_metric(s, x, y), symplectic_form(x, y));
}

/// z(X) = (W^{1/2} q + i W^{-1/2} p) / sqrt(2).
inline ComplexAmplitude z_map(const SpectralModel& s, const PhaseVector& x) {
  check_dims(s, x);
  const VectorXd a = omega_power_apply(s, 0.5, x.q);
  const VectorXd b = omega_power_apply(s, -0.5, x.p);
  return ComplexAmplitude{(a.cast<Complex>() + kImag * b.cast<Complex>()) / std::sqrt(2.0)};
}

/// The anti-linear companion, z'(X) = (W^{1/2} q - i W^{-1/2} p) / sqrt(2).
inline ComplexAmplitude z_dagger_map(const SpectralModel& s, const PhaseVector& x) {
  check_dims(s, x);
  const VectorXd a = omega_power_apply(s, 0.5, x.q);
  const VectorXd b = omega_power_apply(s, -0.5, x.p);
  return ComplexAmplitude{(a.cast<Complex>() - kImag * b.cast<Complex>()) / std::sqrt(2.0)};
}

/// Inverse of z_map: q = sqrt(2) W^{-1/2} Re z, p = sqrt(2) W^{1/2} Im z.
inline PhaseVector z_inverse(const SpectralModel& s, const ComplexAmplitude& zeta) {
  require(zeta.size() == s.size(), "amplitude dimension mismatch");
  const VectorXd re = zeta.z.real();
  const VectorXd im = zeta.z.imag();
  return {std::sqrt(2.0) * omega_power_apply(s, -0.5, re),
          std::sqrt(2.0) * omega_power_apply(s, 0.5, im)};
}

/// Classical annihilation function, conj(xi) . z(X). Anti-linear in xi.
inline Complex annihilation_fn(const SpectralModel& s, const ComplexAmplitude& xi,
                               const PhaseVector& x) {
  require(xi.size() == s.size(), "amplitude dimension mismatch");
  return xi.z.dot(z_map(s, x).z);  // Eigen dot conjugates the left argument
}

/// Classical creation function, xi . z'(X). Linear in xi.
inline Complex creation_fn(const SpectralModel& s, const ComplexAmplitude& xi,
                           const PhaseVector& x) {
  require(xi.size() == s.size(), "amplitude dimension mismatch");
  const VectorXcd zd = z_dagger_map(s, x).z;
  return (xi.z.array() * zd.array()).sum();
}

/// A linear observable on phase space, stored as X -> cq.q + cp.p with
/// complex coefficient vectors. Every supported generator kind reduces to
/// this form, which makes the Poisson bracket a single bilinear expression.
struct LinearObservable {
  enum class Kind { Field, Momentum, Symplectic, Annihilation, Creation };

  Kind kind;
  VectorXcd coeff_q;
  VectorXcd coeff_p;

  Complex evaluate(const PhaseVector& x) const {
    require(x.size() == static_cast<int>(coeff_q.size()), "dimension mismatch");
    return (coeff_q.array() * x.q.cast<Complex>().array()).sum() +
           (coeff_p.array() * x.p.cast<Complex>().array()).sum();
  }

  static LinearObservable field(const VectorXd& eta) {
    return {Kind::Field, eta.cast<Complex>(), VectorXcd::Zero(eta.size())};
  }
  static LinearObservable momentum(const VectorXd& eta) {
    return {Kind::Momentum, VectorXcd::Zero(eta.size()), eta.cast<Complex>()};
  }
  /// s(Y, .) as a function of X: q_Y.p - p_Y.q.
  static LinearObservable symplectic(const PhaseVector& y) {
    return {Kind::Symplectic, (-y.p).cast<Complex>(), y.q.cast<Complex>()};
  }
  static LinearObservable annihilation(const SpectralModel& s, const ComplexAmplitude& xi) {
    const VectorXcd xk = xi.z.conjugate();
    return {Kind::Annihilation, omega_power_apply(s, 0.5, xk) / std::sqrt(2.0),
            kImag * omega_power_apply(s, -0.5, xk) / std::sqrt(2.0)};
  }
  static LinearObservable creation(const SpectralModel& s, const ComplexAmplitude& xi) {
    return {Kind::Creation, omega_power_apply(s, 0.5, xi.z) / std::sqrt(2.0),
            -kImag * omega_power_apply(s, -0.5, xi.z) / std::sqrt(2.0)};
  }
};

/// Poisson bracket of two linear observables; always a constant.
inline Complex poisson_bracket(const LinearObservable& f, const LinearObservable& g) {
  require(f.coeff_q.size() == g.coeff_q.size(), "observable dimension mismatch");
  return (f.coeff_q.array() * g.coeff_p.array()).sum() -
         (g.coeff_q.array() * f.coeff_p.array()).sum();
}

/// Energy expressed through the normal-mode annihilation/creation functions.
/// Agrees with hamiltonian(); kept as an independent route for testing.
inline double hamiltonian_via_modes(const SpectralModel& s, const PhaseVector& x) {
  check_dims(s, x);
  const int n = s.size();
  Complex total = 0.0;
  for (int i = 0; i < n; ++i) {
    const ComplexAmplitude eta{s.modes.col(i).cast<Complex>()};
    const Complex a = annihilation_fn(s, eta, x);
    const Complex ad = creation_fn(s, eta, x);
    // modes are real so conj(eta) = eta
    total += 0.5 * s.frequencies[i] * (ad * a + a * ad);
  }
  return total.real();
}

}  // namespace bosefield

#endif  // BOSEFIELD_CLASSICAL_HPP
