#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "wigner/inequalities.hpp"
#include "wigner/quadrature.hpp"

// Momentum-perturbation study: solid-angle averaged pair probability, the
// quadratic scaling fit of its deviation, and the analyzer-distance estimate.

namespace wigner {

struct SweepSpec {
  std::vector<double> p_over_M;
  Scenario scenario = Scenario::brownian;
  Vec3 ell{1.0, 0.0, 0.0};
  AxisTriple axes{2.0 * pi / 3.0, 0.0, pi / 3.0};
  SphereQuadrature quad{64, 128};
};

inline std::vector<double> geometric_ladder(double lo = 1e-3, double hi = 1e-1,
                                            int n = 13) {
  if (n < 2 || lo <= 0.0 || hi <= lo)
    fail(ErrorCode::UsageError, "ladder needs n >= 2 and 0 < lo < hi");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i)
    out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  return out;
}

inline void validate_sweep(const SweepSpec& spec) {
  const auto& p = spec.p_over_M;
  if (p.empty()) fail(ErrorCode::UsageError, "empty momentum ladder");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0 || p[i] >= 0.5)
      fail(ErrorCode::UsageError, "ladder values must lie in (0, 0.5)");
    if (i > 0 && p[i] <= p[i - 1])
      fail(ErrorCode::UsageError, "ladder must be strictly increasing");
  }
  if (p.back() / p.front() < 100.0)
    fail(ErrorCode::UsageError, "ladder must span at least two decades");
}

namespace detail {

// One pass over the sphere: numerator |amp(+,+)|^2 and denominator summed
// over the four spin outcomes, with the perturbed kinematics re-solved at
// each emission direction.
inline double averaged_once(const ChannelConfig& cfg, const Perturbation& pert,
                            double theta_a, double theta_b,
                            const SphereQuadrature& q) {
  const QuadratureRule gl = gauss_legendre(q.n_cos);
  const double dphi = 2.0 * pi / q.n_phi;
  const SpinConfig pp{Spin::up, Spin::up};
  double num = 0.0, den = 0.0;
  for (int i = 0; i < q.n_cos; ++i) {
    const double theta = std::acos(gl.nodes[i]);
    for (int j = 0; j < q.n_phi; ++j) {
      const Direction n_dir{theta, j * dphi};
      const PerturbedKinematics pk =
          perturbed_kinematics(cfg.M, cfg.m1, cfg.m2, pert, n_dir);
      const double wgt = gl.weights[i] * dphi;
      for (const auto& sc : all_spin_configs()) {
        const double a2 =
            std::norm(amp_ps_ff_perturbed(cfg, pk, theta_a, theta_b, sc));
        den += wgt * a2;
        if (sc.s2 == pp.s2 && sc.s1 == pp.s1) num += wgt * a2;
      }
    }
  }
  if (den <= 0.0) fail(ErrorCode::ZeroEnergy, "averaged weights vanish");
  return num / den;
}

}  // namespace detail

// Mean emission direction under the quadrature, for validating that the
// linear term of the deviation integrates away.
inline Vec3 mean_direction(const SphereQuadrature& q) {
  Vec3 acc = Vec3::Zero();
  const QuadratureRule gl = gauss_legendre(q.n_cos);
  const double dphi = 2.0 * pi / q.n_phi;
  for (int i = 0; i < q.n_cos; ++i) {
    const double theta = std::acos(gl.nodes[i]);
    for (int j = 0; j < q.n_phi; ++j)
      acc += gl.weights[i] * dphi * unit_vector({theta, j * dphi});
  }
  return acc / (4.0 * pi);
}

// Solid-angle averaged probability of the (+,+) outcome, with an always-on
// refinement check: the returned value uses the requested quadrature, and a
// doubled rule must agree to 1e-9.
inline double averaged_probability(const ChannelConfig& cfg,
                                   const Perturbation& pert, double theta_a,
                                   double theta_b, const SphereQuadrature& q) {
  require_channel(cfg, Channel::PS_FF, "averaged_probability");
  if (q.n_cos < 16 || q.n_phi < 32)
    fail(ErrorCode::UsageError, "quadrature must be at least 16 x 32");
  const double coarse = detail::averaged_once(cfg, pert, theta_a, theta_b, q);
  const SphereQuadrature fine{2 * q.n_cos, 2 * q.n_phi};
  const double refined = detail::averaged_once(cfg, pert, theta_a, theta_b, fine);
  if (std::abs(refined - coarse) > 1e-9)
    fail(ErrorCode::QuadratureUnderResolved,
         "doubling the quadrature shifts the average by more than 1e-9");
  return coarse;
}

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
};

struct SweepRow {
  double p_over_M = 0.0;
  double delta_w = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  ScalingFit fit;
};

// Deviation ladder and least-squares fit of log|delta_w| vs log(p/M).
inline SweepResult correction_sweep(const ChannelConfig& cfg,
                                    const SweepSpec& spec) {
  validate_sweep(spec);
  Perturbation base;
  base.ell = spec.ell;
  base.scenario = spec.scenario;
  base.p_mag = 0.0;
  const double w0 = averaged_probability(cfg, base, spec.axes.theta_a,
                                         spec.axes.theta_b, spec.quad);
  SweepResult out;
  std::vector<double> xs, ys;
  for (double r : spec.p_over_M) {
    Perturbation pert = base;
    pert.p_mag = r * cfg.M;
    const double w = averaged_probability(cfg, pert, spec.axes.theta_a,
                                          spec.axes.theta_b, spec.quad);
    const double dw = w - w0;
    out.rows.push_back({r, dw});
    if (std::abs(dw) >= 1e-14) {
      xs.push_back(std::log(r));
      ys.push_back(std::log(std::abs(dw)));
    }
  }
  if (xs.size() < 2)
    fail(ErrorCode::DegenerateFit,
         "deviations too small to fit a scaling exponent");
  const double n = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  out.fit.slope = (n * sxy - sx * sy) / denom;
  out.fit.intercept = (sy - out.fit.slope * sx) / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (out.fit.slope * xs[i] + out.fit.intercept);
    ss += r * r;
  }
  out.fit.residual = std::sqrt(ss / n);
  return out;
}

inline ScalingFit scaling_exponent(const ChannelConfig& cfg,
                                   const SweepSpec& spec) {
  return correction_sweep(cfg, spec).fit;
}

// Quadratic momentum-spread estimate set by the analyzer distance:
// (hbar c / (M L))^2 for M in GeV and L in cm.
inline double analyzer_distance_correction(double M_gev, double L_cm) {
  if (M_gev <= 0.0 || L_cm <= 0.0)
    fail(ErrorCode::NonPositiveInput, "mass and distance must be positive");
  const double x = hbar_c_gev_cm / (M_gev * L_cm);
  return x * x;
}

}  // namespace wigner
