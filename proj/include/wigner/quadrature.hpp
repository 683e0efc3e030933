#pragma once

#include <cmath>
#include <vector>

#include "wigner/constants.hpp"
#include "wigner/errors.hpp"

// Solid-angle quadrature: Gauss-Legendre in cos(theta), uniform trapezoid
// in the periodic phi coordinate.

namespace wigner {

struct QuadratureRule {
  std::vector<double> nodes;    // abscissas on [-1, 1]
  std::vector<double> weights;  // matching weights
};

// Nodes and weights by Newton iteration on the Legendre recurrence.
inline QuadratureRule gauss_legendre(int n) {
  if (n < 1) fail(ErrorCode::NonPositiveInput, "quadrature order must be >= 1");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int mid = (n + 1) / 2;
  for (int i = 0; i < mid; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return rule;
}

struct SphereQuadrature {
  int n_cos = 64;
  int n_phi = 128;
};

// Integral over the unit sphere of f(theta, phi).
template <typename F>
double integrate_sphere(const F& f, const SphereQuadrature& q) {
  if (q.n_cos < 1 || q.n_phi < 1)
    fail(ErrorCode::NonPositiveInput, "sphere quadrature needs positive orders");
  const QuadratureRule gl = gauss_legendre(q.n_cos);
  const double dphi = 2.0 * pi / q.n_phi;
  double total = 0.0;
  for (int i = 0; i < q.n_cos; ++i) {
    const double theta = std::acos(gl.nodes[i]);
    double ring = 0.0;
    for (int j = 0; j < q.n_phi; ++j) ring += f(theta, j * dphi);
    total += gl.weights[i] * ring * dphi;
  }
  return total;
}

}  // namespace wigner
