#pragma once

#include <cmath>

#include "wigner/spinor.hpp"

// Directions, analyzer axes, and two-body decay kinematics in the parent
// rest frame, plus the perturbed (non-back-to-back) solver.

namespace wigner {

struct Direction {
  double theta = 0.0;  // polar angle, radians
  double phi = 0.0;    // azimuth, radians
};

struct AnalyzerAxis {
  double theta = 0.0;  // angle in the XZ plane, phi = 0 implied
};

inline Vec3 unit_vector(const Direction& d) {
  return Vec3(std::sin(d.theta) * std::cos(d.phi),
              std::sin(d.theta) * std::sin(d.phi), std::cos(d.theta));
}

inline Vec3 axis_vector(const AnalyzerAxis& a) {
  return Vec3(std::sin(a.theta), 0.0, std::cos(a.theta));
}

// Fermion emission along +Y, perpendicular to the XZ analyzer plane.
inline Direction special_configuration() { return Direction{pi / 2, pi / 2}; }

inline double kallen(double a, double b, double c) {
  return a * a + b * b + c * c - 2 * a * b - 2 * a * c - 2 * b * c;
}

struct DecayKinematics {
  double M = 0, m1 = 0, m2 = 0;  // parent, antifermion, fermion masses
  double k_mag = 0;              // daughter momentum
  double eps1 = 0, eps2 = 0;     // daughter energies
};

inline DecayKinematics rest_frame_kinematics(double M, double m1, double m2) {
  if (m1 < 0 || m2 < 0) fail(ErrorCode::NegativeMass, "daughter masses must be non-negative");
  if (M <= m1 + m2) fail(ErrorCode::BelowThreshold, "need M > m1 + m2");
  DecayKinematics k;
  k.M = M;
  k.m1 = m1;
  k.m2 = m2;
  k.k_mag = std::sqrt(kallen(M * M, m1 * m1, m2 * m2)) / (2 * M);
  k.eps1 = energy(k.k_mag, m1);
  k.eps2 = energy(k.k_mag, m2);
  return k;
}

// cos(theta~) between the propagation direction (theta, phi) and an analyzer
// axis at theta_a in the XZ plane; zero iff they are orthogonal.
inline double coplanarity_residual(double theta, double phi, double theta_a) {
  return std::cos(theta) * std::cos(theta_a) +
         std::sin(theta) * std::sin(theta_a) * std::cos(phi);
}

enum class Scenario { brownian, recoil };

struct Perturbation {
  double p_mag = 0.0;        // total pair momentum
  Vec3 ell{1.0, 0.0, 0.0};   // its direction, unit
  Scenario scenario = Scenario::brownian;
};

struct PerturbedKinematics {
  Vec3 k1{0, 0, 0}, k2{0, 0, 0};  // antifermion, fermion momenta
  double k1_mag = 0, k2_mag = 0;
  double eps1 = 0, eps2 = 0;
  double E = 0;  // total pair energy
  Vec3 n{0, 0, 1};   // fermion direction
  Vec3 n1{0, 0, -1}; // antifermion direction
};

inline double pair_energy(double M, const Perturbation& pert) {
  switch (pert.scenario) {
    case Scenario::brownian: return std::sqrt(M * M + pert.p_mag * pert.p_mag);
    case Scenario::recoil: return M - pert.p_mag;
  }
  return M;
}

inline PerturbedKinematics perturbed_kinematics(double M, double m1, double m2,
                                                const Perturbation& pert,
                                                const Direction& n_dir) {
  if (m1 < 0 || m2 < 0) fail(ErrorCode::NegativeMass, "daughter masses must be non-negative");
  if (M <= m1 + m2) fail(ErrorCode::BelowThreshold, "need M > m1 + m2");
  if (pert.p_mag < 0) fail(ErrorCode::NonPositiveInput, "perturbation momentum must be >= 0");
  if (pert.p_mag / M >= 0.5) fail(ErrorCode::UsageError, "perturbation requires p/M < 0.5");
  if (std::abs(pert.ell.norm() - 1.0) > 1e-9)
    fail(ErrorCode::NonUnitVector, "perturbation direction must be unit length");

  const Vec3 n = unit_vector(n_dir);
  const double p = pert.p_mag;
  const double ln = pert.ell.dot(n);
  const double E = pair_energy(M, pert);

  const auto residual = [&](double k2) {
    const double e2 = energy(k2, m2);
    const double k1sq = k2 * k2 - 2 * p * k2 * ln + p * p;
    const double e1 = std::sqrt(std::max(k1sq, 0.0) + m1 * m1);
    return e2 + e1 - E;
  };

  // residual(E) > 0 always (eps2 alone exceeds E there), so a sign change on
  // [0, E] exists exactly when residual(0) < 0.
  double lo = 0.0, hi = E;
  if (residual(lo) >= 0)
    fail(ErrorCode::NoSolution, "kinematics does not close on the mass shells");
  for (int it = 0; it < 200 && (hi - lo) > 1e-16 * E; ++it) {
    const double mid = 0.5 * (lo + hi);
    (residual(mid) < 0 ? lo : hi) = mid;
  }
  const double k2_mag = 0.5 * (lo + hi);

  PerturbedKinematics out;
  out.k2 = k2_mag * n;
  out.k1 = p * pert.ell - out.k2;
  out.k1_mag = out.k1.norm();
  out.k2_mag = k2_mag;
  out.eps1 = energy(out.k1_mag, m1);
  out.eps2 = energy(out.k2_mag, m2);
  out.E = E;
  out.n = n;
  out.n1 = out.k1_mag > 0 ? Vec3(out.k1 / out.k1_mag) : Vec3(-n);
  return out;
}

}  // namespace wigner
