#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>

#include "wigner/constants.hpp"
#include "wigner/errors.hpp"

// Spinor and gamma-matrix algebra in the standard (Dirac) representation,
// metric signature (+,-,-,-).

namespace wigner {

using Complex = std::complex<double>;
using TwoSpinor = Eigen::Vector2cd;
using FourSpinor = Eigen::Vector4cd;
using Matrix2C = Eigen::Matrix2cd;
using Matrix4C = Eigen::Matrix4cd;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;

inline constexpr Complex I{0.0, 1.0};

enum class Spin : int { up = +1, down = -1 };

inline constexpr double spin_value(Spin s) {
  return s == Spin::up ? 0.5 : -0.5;
}

inline Spin spin_flip(Spin s) { return s == Spin::up ? Spin::down : Spin::up; }

// ---------------------------------------------------------------------------
// Pauli and gamma matrices
// ---------------------------------------------------------------------------

inline const Matrix2C& pauli(int i) {
  static const std::array<Matrix2C, 3> sigma = [] {
    std::array<Matrix2C, 3> s;
    s[0] << 0, 1, 1, 0;
    s[1] << 0, -I, I, 0;
    s[2] << 1, 0, 0, -1;
    return s;
  }();
  if (i < 1 || i > 3) fail(ErrorCode::BadQuantumNumbers, "pauli index must be 1..3");
  return sigma[static_cast<std::size_t>(i - 1)];
}

inline Matrix2C pauli_dot(const Vec3& n) {
  if (std::abs(n.norm() - 1.0) > 1e-9)
    fail(ErrorCode::NonUnitVector, "pauli_dot needs a unit vector");
  Matrix2C m = n.x() * pauli(1) + n.y() * pauli(2) + n.z() * pauli(3);
  return m;
}

inline const Matrix4C& gamma(int mu) {
  static const std::array<Matrix4C, 4> g = [] {
    std::array<Matrix4C, 4> a;
    for (auto& m : a) m.setZero();
    a[0].block<2, 2>(0, 0) = Matrix2C::Identity();
    a[0].block<2, 2>(2, 2) = -Matrix2C::Identity();
    for (int i = 1; i <= 3; ++i) {
      a[static_cast<std::size_t>(i)].block<2, 2>(0, 2) = pauli(i);
      a[static_cast<std::size_t>(i)].block<2, 2>(2, 0) = -pauli(i);
    }
    return a;
  }();
  if (mu < 0 || mu > 3) fail(ErrorCode::BadQuantumNumbers, "gamma index must be 0..3");
  return g[static_cast<std::size_t>(mu)];
}

inline const Matrix4C& gamma5() {
  static const Matrix4C g5 = [] {
    Matrix4C m;
    m.setZero();
    m.block<2, 2>(0, 2) = Matrix2C::Identity();
    m.block<2, 2>(2, 0) = Matrix2C::Identity();
    return m;
  }();
  return g5;
}

// ---------------------------------------------------------------------------
// Two-component spinors for an axis in direction (theta, phi)
// ---------------------------------------------------------------------------

inline TwoSpinor chi(Spin s, double theta, double phi) {
  const double c = std::cos(theta / 2);
  const double sn = std::sin(theta / 2);
  const Complex em = std::exp(-I * (phi / 2));
  const Complex ep = std::exp(I * (phi / 2));
  TwoSpinor out;
  if (s == Spin::up)
    out << c * em, sn * ep;
  else
    out << -sn * em, c * ep;
  return out;
}

// xi_{-s}(a) = -2s * chi_{-s}(a)
inline TwoSpinor xi(Spin s, double theta, double phi) {
  return -2.0 * spin_value(s) * chi(spin_flip(s), theta, phi);
}

// ---------------------------------------------------------------------------
// Free Dirac solutions
// ---------------------------------------------------------------------------

inline double energy(double p_mag, double m) {
  return std::sqrt(p_mag * p_mag + m * m);
}

inline FourSpinor dirac_u(double p_mag, double m, const Vec3& n, Spin s,
                          double theta_axis, double phi_axis) {
  if (m < 0) fail(ErrorCode::NegativeMass, "dirac_u mass must be non-negative");
  if (p_mag < 0) fail(ErrorCode::NonPositiveInput, "dirac_u momentum must be non-negative");
  const double eps = energy(p_mag, m);
  const TwoSpinor x = chi(s, theta_axis, phi_axis);
  FourSpinor u;
  u.head<2>() = std::sqrt(eps + m) * x;
  u.tail<2>() = std::sqrt(eps - m) * (pauli_dot(n) * x);
  return u;
}

// n is the direction of the antiparticle's own momentum.
inline FourSpinor dirac_v(double p_mag, double m, const Vec3& n, Spin s,
                          double theta_axis, double phi_axis) {
  if (m < 0) fail(ErrorCode::NegativeMass, "dirac_v mass must be non-negative");
  if (p_mag < 0) fail(ErrorCode::NonPositiveInput, "dirac_v momentum must be non-negative");
  const double eps = energy(p_mag, m);
  const TwoSpinor x = xi(s, theta_axis, phi_axis);
  FourSpinor v;
  v.head<2>() = std::sqrt(eps - m) * (pauli_dot(n) * x);
  v.tail<2>() = std::sqrt(eps + m) * x;
  return v;
}

inline FourSpinor dirac_bar(const FourSpinor& w) {
  return gamma(0).transpose() * w.conjugate();
}

// ---------------------------------------------------------------------------
// Relativistic spin operator O^i for momentum p and mass m
// ---------------------------------------------------------------------------

inline std::array<Matrix4C, 3> spin_operator(const Vec3& p, double m) {
  const double eps = energy(p.norm(), m);
  if (eps <= 0) fail(ErrorCode::ZeroEnergy, "spin operator needs eps > 0");
  Matrix4C gdotp = Matrix4C::Zero();
  for (int i = 1; i <= 3; ++i) gdotp += p[i - 1] * gamma(i);
  std::array<Matrix4C, 3> O;
  for (int i = 1; i <= 3; ++i) {
    O[static_cast<std::size_t>(i - 1)] =
        -gamma5() * gamma(i) + gamma5() * (p[i - 1] / eps) +
        (p[i - 1] / (eps * (eps + m))) * gamma5() * gdotp;
  }
  return O;
}

inline Matrix4C spin_operator_dot(const Vec3& axis, const Vec3& p, double m) {
  const auto O = spin_operator(p, m);
  return axis.x() * O[0] + axis.y() * O[1] + axis.z() * O[2];
}

// ---------------------------------------------------------------------------
// Closed-form overlaps for axes in the XZ plane (phi_a = phi_b = 0)
// ---------------------------------------------------------------------------

struct OverlapForms {
  Complex scalar;  // chi+(a)^dag chi-(b)
  CVec3 w_pp;      // chi+(a)^dag sigma chi-(b)
  CVec3 w_pm;      // chi+(a)^dag sigma chi+(b)
};

inline OverlapForms overlap_forms(double theta_a, double theta_b) {
  const double tab = theta_a - theta_b;
  const double kap = theta_a + theta_b;
  OverlapForms f;
  f.scalar = std::sin(tab / 2);
  f.w_pp << std::cos(kap / 2), -I * std::cos(tab / 2), -std::sin(kap / 2);
  f.w_pm << std::sin(kap / 2), I * std::sin(tab / 2), std::cos(kap / 2);
  return f;
}

}  // namespace wigner
