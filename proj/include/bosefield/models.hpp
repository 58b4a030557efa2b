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

#ifndef BOSEFIELD_MODELS_HPP
#define BOSEFIELD_MODELS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "bosefield/spectral.hpp"

namespace bosefield {

/// Constructor data for the concrete systems: a ring of n oscillators, a
/// d-dimensional nearest-neighbour lattice, or an arbitrary coupling matrix.
/// omega_w is the pinning frequency, omega_n the nearest-neighbour coupling.
struct ModelSpec {
  enum class Variant { Ring, Lattice, Custom };

  Variant variant = Variant::Custom;
  int ring_sites = 0;
  std::vector<int> extent;  // lattice sites per axis
  double omega_w = 0.0;
  double omega_n = 0.0;
  bool periodic = true;
  MatrixXd matrix;  // custom coupling

  static ModelSpec ring(int n, double omega_w, double omega_n) {
    ModelSpec m;
    m.variant = Variant::Ring;
    m.ring_sites = n;
    m.omega_w = omega_w;
    m.omega_n = omega_n;
    m.validate();
    return m;
  }

  static ModelSpec lattice(std::vector<int> extent, double omega_w, double omega_n,
                           bool periodic = true) {
    ModelSpec m;
    m.variant = Variant::Lattice;
    m.extent = std::move(extent);
    m.omega_w = omega_w;
    m.omega_n = omega_n;
    m.periodic = periodic;
    m.validate();
    return m;
  }

  static ModelSpec custom(MatrixXd coupling) {
    ModelSpec m;
    m.variant = Variant::Custom;
    m.matrix = std::move(coupling);
    m.validate();
    return m;
  }

  int dimension() const {
    switch (variant) {
      case Variant::Ring:
        return 1;
      case Variant::Lattice:
        return static_cast<int>(extent.size());
      case Variant::Custom:
        return 1;
    }
    return 1;
  }

  int site_count() const {
    switch (variant) {
      case Variant::Ring:
        return ring_sites;
      case Variant::Lattice: {
        int total = 1;
        for (int e : extent) total *= e;
        return total;
      }
      case Variant::Custom:
        return static_cast<int>(matrix.rows());
    }
    return 0;
  }

  double omega0_squared() const {
    return omega_w * omega_w + 2.0 * dimension() * omega_n * omega_n;
  }

  /// Coupling ratio; at most 1/(2d), the maximum reached exactly when the
  /// pinning vanishes (the zero-mode configuration).
  double nu() const { return omega_n * omega_n / omega0_squared(); }

  bool zero_mode_risk() const {
    return variant != Variant::Custom && omega_w == 0.0 && omega_n > 0.0;
  }

  bool translation_invariant() const {
    return variant == Variant::Ring || (variant == Variant::Lattice && periodic);
  }

  void validate() const {
    switch (variant) {
      case Variant::Ring:
        if (ring_sites < 1) throw ValidationError("ring needs at least one site");
        break;
      case Variant::Lattice:
        if (extent.empty()) throw ValidationError("lattice needs at least one axis");
        for (int e : extent)
          if (e < 1) throw ValidationError("lattice extent must be positive");
        break;
      case Variant::Custom:
        if (matrix.rows() == 0 || matrix.rows() != matrix.cols())
          throw ValidationError("custom coupling must be a nonempty square matrix");
        return;
    }
    if (omega_w < 0.0 || omega_n < 0.0) throw ValidationError("frequencies must be nonnegative");
    if (omega_w == 0.0 && omega_n == 0.0)
      throw ValidationError("omega_w and omega_n cannot both vanish");
  }
};

/// Assembles the coupling matrix. Sites of a lattice are linearized
/// row-major; periodic models wrap nearest neighbours, open models drop the
/// boundary bonds (which weakens the diagonal accordingly).
inline CouplingMatrix build_omega_squared(const ModelSpec& m) {
  m.validate();
  if (m.variant == ModelSpec::Variant::Custom) return CouplingMatrix(m.matrix);

  const double wn2 = m.omega_n * m.omega_n;
  const double ww2 = m.omega_w * m.omega_w;

  if (m.variant == ModelSpec::Variant::Ring) {
    const int n = m.ring_sites;
    MatrixXd c = MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
      c(j, j) += ww2 + 2.0 * wn2;
      c(j, (j + 1) % n) -= wn2;
      c(j, (j + n - 1) % n) -= wn2;
    }
    return CouplingMatrix(std::move(c));
  }

  const auto& ext = m.extent;
  const int d = static_cast<int>(ext.size());
  const int n = m.site_count();
  std::vector<int> stride(d, 1);
  for (int a = d - 2; a >= 0; --a) stride[a] = stride[a + 1] * ext[a + 1];

  MatrixXd c = MatrixXd::Zero(n, n);
  std::vector<int> coord(d, 0);
  for (int site = 0; site < n; ++site) {
    c(site, site) += ww2;
    for (int a = 0; a < d; ++a) {
      for (int dir : {+1, -1}) {
        int ca = coord[a] + dir;
        if (m.periodic) {
          ca = (ca + ext[a]) % ext[a];
        } else if (ca < 0 || ca >= ext[a]) {
          continue;
        }
        const int neighbour = site + (ca - coord[a]) * stride[a];
        c(site, site) += wn2;
        c(site, neighbour) -= wn2;
      }
    }
    for (int a = d - 1; a >= 0; --a) {
      if (++coord[a] < ext[a]) break;
      coord[a] = 0;
    }
  }
  return CouplingMatrix(std::move(c));
}

/// Squared dispersion at reciprocal point k (one entry per axis, periodic in
/// each with period 1).
inline double dispersion(const ModelSpec& m, const VectorXd& k) {
  if (!m.translation_invariant())
    throw NotTranslationInvariantError("dispersion requires a periodic ring or lattice");
  const int d = m.dimension();
  require(static_cast<int>(k.size()) == d, "reciprocal point has wrong dimension");
  double cos_sum = 0.0;
  for (int a = 0; a < d; ++a) cos_sum += std::cos(2.0 * M_PI * k[a]);
  return m.omega0_squared() * (1.0 - 2.0 * m.nu() * cos_sum);
}

inline double dispersion(const ModelSpec& m, double k) {
  VectorXd kv(1);
  kv[0] = k;
  return dispersion(m, kv);
}

/// Amplitude profile over the Brillouin zone, evaluated on [-1/2, 1/2]^d.
using BzFunction = std::function<Complex(const VectorXd&)>;

inline BzFunction delta_site_profile() {
  return [](const VectorXd&) { return Complex(1.0, 0.0); };
}

namespace detail {

// Gauss-Legendre nodes/weights on [-1, 1], orders 8 and 16.
inline const double kGl8Nodes[4] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
                                    0.9602898564975363};
inline const double kGl8Weights[4] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745,
                                      0.1012285362903763};
inline const double kGl16Nodes[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                     0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                     0.9445750230732326, 0.9894009349916499};
inline const double kGl16Weights[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                       0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                       0.0622535239386479, 0.0271524594117541};

using BoxFunction = std::function<double(const VectorXd&)>;

inline double tensor_gauss(const BoxFunction& f, const VectorXd& lo, const VectorXd& hi,
                           const double* nodes, const double* weights, int half_order) {
  const int d = static_cast<int>(lo.size());
  const int order = 2 * half_order;
  std::vector<double> node(order), weight(order);
  std::vector<double> cell;
  VectorXd mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);

  std::vector<int> idx(d, 0);
  VectorXd point(d);
  double jac = 1.0;
  for (int a = 0; a < d; ++a) jac *= half[a];
  for (int i = 0; i < half_order; ++i) {
    node[i] = -nodes[half_order - 1 - i];
    node[half_order + i] = nodes[i];
    weight[i] = weights[half_order - 1 - i];
    weight[half_order + i] = weights[i];
  }
  while (true) {
    double w = jac;
    for (int a = 0; a < d; ++a) {
      point[a] = mid[a] + half[a] * node[idx[a]];
      w *= weight[idx[a]];
    }
    cell.push_back(w * f(point));
    int a = d - 1;
    for (; a >= 0; --a) {
      if (++idx[a] < order) break;
      idx[a] = 0;
    }
    if (a < 0) break;
  }
  return pairwise_sum(std::move(cell));
}

inline double adaptive_box(const BoxFunction& f, const VectorXd& lo, const VectorXd& hi,
                           double rel_tol, int depth) {
  const double coarse = tensor_gauss(f, lo, hi, kGl8Nodes, kGl8Weights, 4);
  const double fine = tensor_gauss(f, lo, hi, kGl16Nodes, kGl16Weights, 8);
  if (std::abs(fine - coarse) <= rel_tol * std::abs(fine) + 1e-300) return fine;
  if (depth <= 0) throw QuadratureError("adaptive quadrature failed to converge");
  int axis = 0;
  (hi - lo).maxCoeff(&axis);
  VectorXd mid_hi = hi, mid_lo = lo;
  mid_hi[axis] = mid_lo[axis] = 0.5 * (lo[axis] + hi[axis]);
  return adaptive_box(f, lo, mid_hi, rel_tol, depth - 1) +
         adaptive_box(f, mid_lo, hi, rel_tol, depth - 1);
}

/// Integral over the box annulus [-a, a]^d minus (-b, b)^d, decomposed into
/// 2d disjoint slabs.
inline double annulus_integral(const BoxFunction& f, int d, double a, double b, double rel_tol) {
  std::vector<double> parts;
  for (int axis = 0; axis < d; ++axis) {
    for (int side : {+1, -1}) {
      VectorXd lo(d), hi(d);
      for (int j = 0; j < d; ++j) {
        const double r = (j < axis) ? b : a;
        lo[j] = -r;
        hi[j] = r;
      }
      lo[axis] = (side > 0) ? b : -a;
      hi[axis] = (side > 0) ? a : -b;
      parts.push_back(adaptive_box(f, lo, hi, rel_tol, 40));
    }
  }
  return pairwise_sum(std::move(parts));
}

inline BoxFunction scale_integrand(const ModelSpec& m, double lambda, const BzFunction& qhat) {
  return [&m, lambda, &qhat](const VectorXd& k) {
    const double w2 = dispersion(m, k);
    return std::norm(qhat(k)) * std::pow(w2, lambda);
  };
}

}  // namespace detail

/// Partial scale-space integral over the Brillouin zone with the box
/// (-eps, eps)^d removed around the singular point. The integrand is
/// |qhat(k)|^2 w(k)^{2 lambda}; the domain is split into dyadic shells toward
/// k = 0 so every cell sees a smooth integrand at its own scale.
inline double infrared_partial_integral(const ModelSpec& m, double lambda, const BzFunction& qhat,
                                        double eps, double rel_tol = 1e-7) {
  if (!m.translation_invariant())
    throw NotTranslationInvariantError("scale-space diagnostics need translation invariance");
  if (!(eps > 0.0 && eps <= 0.25)) throw ValidationError("cutoff must lie in (0, 1/4]");
  const int d = m.dimension();
  const auto f = detail::scale_integrand(m, lambda, qhat);
  std::vector<double> shells;
  double outer = 0.5;
  while (outer > eps) {
    const double inner = std::max(0.5 * outer, eps);
    shells.push_back(detail::annulus_integral(f, d, outer, inner, rel_tol));
    outer = inner;
  }
  return pairwise_sum(std::move(shells));
}

/// Classification of the eps -> 0 behaviour of the partial integrals.
struct ScaleClassification {
  enum class Kind { Convergent, Divergent, Inconclusive };

  Kind kind = Kind::Inconclusive;
  double value = 0.0;      // extrapolated limit (Convergent only)
  double log_slope = 0.0;  // least-squares slope against log(1/eps)
  double fit_residual = 0.0;
  double scale = 0.0;
  std::vector<std::pair<double, double>> partials;  // (eps, integral)
};

inline const std::vector<double>& default_cutoff_ladder() {
  static const std::vector<double> ladder = [] {
    std::vector<double> eps;
    for (int e = 3; e <= 12; ++e) eps.push_back(std::ldexp(1.0, -e));
    return eps;
  }();
  return ladder;
}

/// Fits the partial-integral ladder and decides membership. Divergent means
/// the least-squares slope against log(1/eps) exceeds 0.05 of the integral
/// scale (the largest partial). Inconclusive is reserved for data that fits
/// neither a line in log(1/eps) nor a geometric saturation to within 10% of
/// the data range.
inline ScaleClassification classify_scale_membership(
    const ModelSpec& m, double lambda, const BzFunction& qhat,
    const std::vector<double>& cutoffs = default_cutoff_ladder()) {
  require(cutoffs.size() >= 4, "need at least four cutoffs to classify");
  ScaleClassification out;
  std::vector<double> eps = cutoffs;
  std::sort(eps.begin(), eps.end(), std::greater<>());

  const int count = static_cast<int>(eps.size());
  VectorXd x(count), I(count);
  for (int i = 0; i < count; ++i) {
    x[i] = std::log(1.0 / eps[i]);
    I[i] = infrared_partial_integral(m, lambda, qhat, eps[i]);
    out.partials.emplace_back(eps[i], I[i]);
  }
  out.scale = I.cwiseAbs().maxCoeff();
  const double range = I.maxCoeff() - I.minCoeff();

  // Least-squares line in log(1/eps).
  const double xm = x.mean(), im = I.mean();
  const double var = (x.array() - xm).square().sum();
  out.log_slope = ((x.array() - xm) * (I.array() - im)).sum() / var;
  const double intercept = im - out.log_slope * xm;
  const double lin_residual =
      (I - (out.log_slope * x.array() + intercept).matrix()).cwiseAbs().maxCoeff();

  if (range <= 1e-9 * std::max(out.scale, 1e-300)) {
    out.kind = ScaleClassification::Kind::Convergent;
    out.value = I[count - 1];
    out.fit_residual = lin_residual;
    return out;
  }

  // Geometric model I = a + c r^i, with the ratio estimated from the last
  // increments. r < 1 is saturation, r > 1 unbounded growth.
  double ratio = 0.5;
  const double d_last = I[count - 1] - I[count - 2];
  const double d_prev = I[count - 2] - I[count - 3];
  if (std::abs(d_prev) > 0.0) ratio = std::clamp(d_last / d_prev, 1e-2, 1e2);
  VectorXd powers(count);
  for (int i = 0; i < count; ++i) powers[i] = std::pow(ratio, i);
  Eigen::Matrix2d gram;
  gram << count, powers.sum(), powers.sum(), powers.squaredNorm();
  Eigen::Vector2d rhs(I.sum(), powers.dot(I));
  Eigen::Vector2d ac = gram.ldlt().solve(rhs);
  const double geo_residual = (I - (ac[0] + ac[1] * powers.array()).matrix()).cwiseAbs().maxCoeff();

  out.fit_residual = std::min(lin_residual, geo_residual);
  if (out.fit_residual > 0.1 * range) {
    out.kind = ScaleClassification::Kind::Inconclusive;
    return out;
  }
  if (out.log_slope > 0.05 * out.scale) {
    out.kind = ScaleClassification::Kind::Divergent;
    return out;
  }
  out.kind = ScaleClassification::Kind::Convergent;
  if (ratio < 1.0) {
    // Richardson-style limit: the fitted asymptote, with a fallback to the
    // tail-sum estimate when the fit is degenerate.
    out.value = (geo_residual <= lin_residual) ? ac[0]
                                               : I[count - 1] + d_last * ratio / (1.0 - ratio);
  } else {
    out.value = I[count - 1];
  }
  return out;
}

}  // namespace bosefield

#endif  // BOSEFIELD_MODELS_HPP
