#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "wigner/amplitudes.hpp"
#include "wigner/kinematics.hpp"

// Joint outcome probabilities, phase-space factors, and the gamma-gamma
// correlation weights built from spherical harmonics.

namespace wigner {

enum class ProbMode { integrated, normalized };

struct JointProbability {
  double value = 0.0;
};

struct PhaseSpaceFactor {
  double value = 0.0;
};

// f carrying the physical decay normalization; the fixed-direction variant
// keeps the sin(theta~) acceptance factor.
inline PhaseSpaceFactor f_factor(const ChannelConfig& cfg) {
  if (cfg.M <= cfg.m1 + cfg.m2)
    fail(ErrorCode::BelowThreshold, "parent mass below fermion pair threshold");
  const double lam = kallen(cfg.M * cfg.M, cfg.m1 * cfg.m1, cfg.m2 * cfg.m2);
  const double dm = cfg.m1 - cfg.m2;
  const double val = cfg.g * cfg.g / (16.0 * pi) * (cfg.M * cfg.M - dm * dm) /
                     (cfg.M * cfg.M * cfg.M) * std::sqrt(lam);
  return {val};
}

inline PhaseSpaceFactor f_factor_fixed(const ChannelConfig& cfg,
                                       double theta_tilde) {
  if (cfg.M <= cfg.m1 + cfg.m2)
    fail(ErrorCode::BelowThreshold, "parent mass below fermion pair threshold");
  const double lam = kallen(cfg.M * cfg.M, cfg.m1 * cfg.m1, cfg.m2 * cfg.m2);
  const double dm = cfg.m1 - cfg.m2;
  const double val = cfg.g * cfg.g / 16.0 * (cfg.M * cfg.M - dm * dm) /
                     (cfg.M * cfg.M * cfg.M) * std::sqrt(lam) *
                     std::sin(theta_tilde) / (4.0 * pi * pi);
  return {val};
}

// Squared amplitudes of the four spin outcomes for the PS channel at a
// reference emission direction (the amplitude does not depend on it).
inline std::array<double, 4> ps_outcome_weights(const ChannelConfig& cfg,
                                                const DecayKinematics& kin,
                                                double theta_a,
                                                double theta_b) {
  const Direction n = special_configuration();
  std::array<double, 4> w{};
  int i = 0;
  for (const auto& sc : all_spin_configs())
    w[i++] = std::norm(amp_ps_ff(cfg, kin, n, theta_a, theta_b, sc));
  return w;
}

inline JointProbability joint_prob_ps(const ChannelConfig& cfg,
                                      double theta_a, double theta_b,
                                      const SpinConfig& sc, ProbMode mode) {
  require_channel(cfg, Channel::PS_FF, "joint_prob_ps");
  const DecayKinematics kin = rest_frame_kinematics(cfg.M, cfg.m1, cfg.m2);
  const Direction n = special_configuration();
  const double w = std::norm(amp_ps_ff(cfg, kin, n, theta_a, theta_b, sc));
  if (mode == ProbMode::integrated)
    return {w * kin.k_mag / (8.0 * pi * cfg.M * cfg.M)};
  const auto all = ps_outcome_weights(cfg, kin, theta_a, theta_b);
  const double total = all[0] + all[1] + all[2] + all[3];
  return {w / total};
}

// Normalized spin probabilities for the scalar channel at a fixed emission
// direction n.
inline JointProbability joint_prob_s(const ChannelConfig& cfg, double theta_a,
                                     double theta_b, const SpinConfig& sc,
                                     const Direction& n_dir) {
  require_channel(cfg, Channel::S_FF, "joint_prob_s");
  const DecayKinematics kin = rest_frame_kinematics(cfg.M, cfg.m1, cfg.m2);
  double total = 0.0;
  double w = 0.0;
  for (const auto& each : all_spin_configs()) {
    const double v = std::norm(amp_s_ff(cfg, kin, n_dir, theta_a, theta_b, each));
    total += v;
    if (each.s2 == sc.s2 && each.s1 == sc.s1) w = v;
  }
  if (total <= 0.0)
    fail(ErrorCode::ZeroEnergy, "scalar channel outcome weights vanish");
  return {w / total};
}

// Normalized polarization probabilities for the two-photon channels.
inline JointProbability joint_prob_gg(const ChannelConfig& cfg, double theta_a,
                                      double theta_b, int lam1, int lam2) {
  double total = 0.0;
  double w = 0.0;
  for (int l1 = 1; l1 <= 2; ++l1)
    for (int l2 = 1; l2 <= 2; ++l2) {
      const double v = std::norm(amp_gg(cfg, theta_a, theta_b, l1, l2));
      total += v;
      if (l1 == lam1 && l2 == lam2) w = v;
    }
  if (total <= 0.0)
    fail(ErrorCode::ZeroEnergy, "photon outcome weights vanish");
  return {w / total};
}

// Orthonormal Y_l^m with the Condon-Shortley phase; std::assoc_legendre
// omits the phase, so it is restored here.
inline Complex spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || l > 4 || std::abs(m) > l)
    fail(ErrorCode::BadQuantumNumbers, "need |m| <= l <= 4");
  if (m < 0) {
    const Complex y = spherical_harmonic(l, -m, theta, phi);
    return (((-m) % 2) ? -1.0 : 1.0) * std::conj(y);
  }
  double ratio = 1.0;
  for (int k = l - m + 1; k <= l + m; ++k) ratio *= k;
  const double norm = std::sqrt((2.0 * l + 1.0) / (4.0 * pi) / ratio);
  const double leg = std::assoc_legendre(l, m, std::cos(theta));
  const double phase = (m % 2) ? -1.0 : 1.0;
  return phase * norm * leg * std::exp(I * static_cast<double>(m) * phi);
}

struct GGWeights {
  double corr = 0.0;
  double anti = 0.0;
  double ratio = 0.0;
};

// Relative photon-pair weights at theta = phi = pi/2: correlation from the
// |m| = 2 harmonics, anticorrelation from m = 0.
inline GGWeights gg_correlation_weights() {
  const double th = pi / 2, ph = pi / 2;
  const double corr = 2.0 * std::norm(spherical_harmonic(2, 2, th, ph));
  const double anti = std::norm(spherical_harmonic(2, 0, th, ph));
  return {corr, anti, corr / anti};
}

}  // namespace wigner
