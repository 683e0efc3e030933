#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "wigner/kinematics.hpp"
#include "wigner/spinor.hpp"

// Decay amplitudes for the five supported channels, built from spinor
// contractions and explicit photon polarization vectors.

namespace wigner {

enum class Channel { PS_FF, S_FF, H_GG, PI0_GG, P0_GG_AB };

inline const char* channel_name(Channel c) {
  switch (c) {
    case Channel::PS_FF: return "ps-ff";
    case Channel::S_FF: return "s-ff";
    case Channel::H_GG: return "h-gg";
    case Channel::PI0_GG: return "pi0-gg";
    case Channel::P0_GG_AB: return "p0-gg-ab";
  }
  return "?";
}

struct ChannelConfig {
  Channel channel = Channel::PS_FF;
  double M = 1.0;      // parent mass
  double m1 = 0.0;     // antifermion mass
  double m2 = 0.0;     // fermion mass
  double g = 1.0;      // effective coupling
  double F_H = 1.0;    // H -> gg constant
  double F_pi = 1.0;   // pi0 -> gg constant
  Complex A{1.0, 0.0}; // parity-odd gg constant
  Complex B{0.0, 0.0}; // parity-even gg constant
  double omega = 0.0;  // photon energy; 0 means M/2

  double photon_energy() const { return omega > 0 ? omega : M / 2; }
};

// Spin projections measured along analyzer axes: s2 for the fermion on a,
// s1 for the antifermion on b.
struct SpinConfig {
  Spin s2 = Spin::up;
  Spin s1 = Spin::up;
};

inline const std::array<SpinConfig, 4>& all_spin_configs() {
  static const std::array<SpinConfig, 4> v{{{Spin::up, Spin::up},
                                            {Spin::up, Spin::down},
                                            {Spin::down, Spin::up},
                                            {Spin::down, Spin::down}}};
  return v;
}

// ---------------------------------------------------------------------------
// Fermion-antifermion channels
// ---------------------------------------------------------------------------

// ubar(k2) gamma5 v(k1) and ubar(k2) v(k1) via the two-spinor blocks.
inline Complex contraction_g5(double eps1, double m1, double eps2, double m2,
                              const Vec3& n, const Vec3& n1, double theta_a,
                              double theta_b, const SpinConfig& sc) {
  const TwoSpinor x = chi(sc.s2, theta_a, 0.0);
  const TwoSpinor z = xi(sc.s1, theta_b, 0.0);
  const double P = std::sqrt(eps2 + m2) * std::sqrt(eps1 + m1);
  const double Q = std::sqrt(eps2 - m2) * std::sqrt(eps1 - m1);
  const TwoSpinor rotated = pauli_dot(n) * (pauli_dot(n1) * z);
  return P * x.dot(z) - Q * x.dot(rotated);
}

inline Complex contraction_1(double eps1, double m1, double eps2, double m2,
                             const Vec3& n, const Vec3& n1, double theta_a,
                             double theta_b, const SpinConfig& sc) {
  const TwoSpinor x = chi(sc.s2, theta_a, 0.0);
  const TwoSpinor z = xi(sc.s1, theta_b, 0.0);
  const double P = std::sqrt(eps2 + m2) * std::sqrt(eps1 - m1);
  const double Q = std::sqrt(eps2 - m2) * std::sqrt(eps1 + m1);
  return P * x.dot(pauli_dot(n1) * z) - Q * x.dot(pauli_dot(n) * z);
}

inline void require_channel(const ChannelConfig& cfg, Channel want,
                            const char* who) {
  if (cfg.channel != want)
    fail(ErrorCode::WrongChannel, std::string(who) + " needs channel " +
                                      channel_name(want) + ", got " +
                                      channel_name(cfg.channel));
}

// A = -g ubar(k2, s2, a) gamma5 v(k1, s1, b), parent at rest, so the
// antifermion direction is -n. Independent of n by construction.
inline Complex amp_ps_ff(const ChannelConfig& cfg, const DecayKinematics& kin,
                         const Direction& n_dir, double theta_a, double theta_b,
                         const SpinConfig& sc) {
  require_channel(cfg, Channel::PS_FF, "amp_ps_ff");
  const Vec3 n = unit_vector(n_dir);
  return -cfg.g * contraction_g5(kin.eps1, kin.m1, kin.eps2, kin.m2, n, -n,
                                 theta_a, theta_b, sc);
}

// Closed form of the (+,+) amplitude, kept as an independent oracle.
inline Complex amp_ps_ff_closed(const ChannelConfig& cfg,
                                const DecayKinematics& kin, double theta_a,
                                double theta_b) {
  require_channel(cfg, Channel::PS_FF, "amp_ps_ff_closed");
  const double pref = std::sqrt((kin.eps2 + kin.m2) / (kin.eps1 + kin.m1)) *
                      (kin.M + kin.m1 - kin.m2);
  return cfg.g * pref * std::sin((theta_a - theta_b) / 2);
}

// Same contraction with exact non-antiparallel directions and energies.
inline Complex amp_ps_ff_perturbed(const ChannelConfig& cfg,
                                   const PerturbedKinematics& pk,
                                   double theta_a, double theta_b,
                                   const SpinConfig& sc) {
  require_channel(cfg, Channel::PS_FF, "amp_ps_ff_perturbed");
  return -cfg.g * contraction_g5(pk.eps1, cfg.m1, pk.eps2, cfg.m2, pk.n, pk.n1,
                                 theta_a, theta_b, sc);
}

// A = -g ubar(k2, s2, a) v(k1, s1, b), parent at rest.
inline Complex amp_s_ff(const ChannelConfig& cfg, const DecayKinematics& kin,
                        const Direction& n_dir, double theta_a, double theta_b,
                        const SpinConfig& sc) {
  require_channel(cfg, Channel::S_FF, "amp_s_ff");
  const Vec3 n = unit_vector(n_dir);
  return -cfg.g * contraction_1(kin.eps1, kin.m1, kin.eps2, kin.m2, n, -n,
                                theta_a, theta_b, sc);
}

// ---------------------------------------------------------------------------
// Two-photon channels: momenta k1 = w(1,0,-1,0), k2 = w(1,0,1,0), analyzer
// axes in the XZ plane, polarization labels 1 and 2.
// ---------------------------------------------------------------------------

using FourVec = Eigen::Vector4d;

inline FourVec photon_pol(double theta_axis, int lam) {
  if (lam != 1 && lam != 2)
    fail(ErrorCode::BadQuantumNumbers, "polarization label must be 1 or 2");
  if (lam == 1) return FourVec(0.0, std::sin(theta_axis), 0.0, std::cos(theta_axis));
  return FourVec(0.0, std::cos(theta_axis), 0.0, -std::sin(theta_axis));
}

inline double minkowski(const FourVec& a, const FourVec& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

// Levi-Civita with lower indices, eps_{0123} = +1.
inline int levi_civita4(int mu, int nu, int al, int be) {
  const int idx[4] = {mu, nu, al, be};
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  return sign;
}

// eps_{mu nu al be} e1^mu e2^nu k1^al k2^be with upper-index arguments:
// each raised spatial index costs a metric sign, absorbed here by summing
// over the lower-index tensor against contravariant components with the
// three minus signs of the metric applied per spatial index.
inline double epsilon_contraction(const FourVec& e1, const FourVec& e2,
                                  const FourVec& k1, const FourVec& k2) {
  double total = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int al = 0; al < 4; ++al)
        for (int be = 0; be < 4; ++be) {
          const int s = levi_civita4(mu, nu, al, be);
          if (s == 0) continue;
          total += s * e1[mu] * e2[nu] * k1[al] * k2[be];
        }
  return total;
}

inline Complex amp_gg(const ChannelConfig& cfg, double theta_a, double theta_b,
                      int lam1, int lam2) {
  if (cfg.channel != Channel::H_GG && cfg.channel != Channel::PI0_GG &&
      cfg.channel != Channel::P0_GG_AB)
    fail(ErrorCode::WrongChannel, "amp_gg needs a two-photon channel");
  const double w = cfg.photon_energy();
  const FourVec k1(w, 0.0, -w, 0.0);
  const FourVec k2(w, 0.0, w, 0.0);
  const FourVec e1 = photon_pol(theta_a, lam1);
  const FourVec e2 = photon_pol(theta_b, lam2);
  switch (cfg.channel) {
    case Channel::H_GG:
      return cfg.F_H * minkowski(e1, e2);
    case Channel::PI0_GG:
      return cfg.F_pi * epsilon_contraction(e1, e2, k1, k2);
    case Channel::P0_GG_AB: {
      const double half_m2 = 0.5 * minkowski(k1 + k2, k1 + k2);
      const Complex tensor = cfg.A * epsilon_contraction(e1, e2, k1, k2);
      const Complex scalar = -I * cfg.B * (minkowski(e1, k2) * minkowski(e2, k1) -
                                           minkowski(e1, e2) * half_m2);
      return tensor + scalar;
    }
    default: break;
  }
  return {};
}

}  // namespace wigner
