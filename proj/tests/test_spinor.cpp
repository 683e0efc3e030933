#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <random>

#include "test_util.hpp"
#include "wigner/spinor.hpp"

using namespace wigner;
using Catch::Approx;
using testutil::caught_code;

namespace {

Vec3 random_unit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vec3 v;
  do {
    v = Vec3(u(rng), u(rng), u(rng));
  } while (v.norm() < 1e-3);
  return v.normalized();
}

Vec3 polar_axis(double theta, double phi) {
  return Vec3(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
              std::cos(theta));
}

int eps3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

Matrix4C slash(double eps, const Vec3& k) {
  Matrix4C m = eps * gamma(0);
  for (int i = 1; i <= 3; ++i) m -= k[i - 1] * gamma(i);
  return m;
}

// Worst residual of ([O^i, O^j] - sign * 2i eps^{ijk} O^k) w over all pairs.
double algebra_action_residual(const std::array<Matrix4C, 3>& O,
                               const FourSpinor& w, double sign) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      Matrix4C c = O[static_cast<std::size_t>(i)] * O[static_cast<std::size_t>(j)] -
                   O[static_cast<std::size_t>(j)] * O[static_cast<std::size_t>(i)];
      for (int k = 0; k < 3; ++k)
        if (const int e = eps3(i, j, k); e != 0)
          c -= sign * Complex(0.0, 2.0 * e) * O[static_cast<std::size_t>(k)];
      worst = std::max(worst, (c * w).norm() / w.norm());
    }
  return worst;
}

}  // namespace

TEST_CASE("pauli matrices obey the su(2) product rule", "[spinor]") {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      Matrix2C expect = Matrix2C::Zero();
      if (i == j) expect = Matrix2C::Identity();
      for (int k = 1; k <= 3; ++k)
        if (const int e = eps3(i - 1, j - 1, k - 1); e != 0)
          expect += Complex(0.0, static_cast<double>(e)) * pauli(k);
      REQUIRE((pauli(i) * pauli(j) - expect).norm() < 1e-15);
    }
  REQUIRE(caught_code([] { pauli(0); }) == ErrorCode::BadQuantumNumbers);
  REQUIRE(caught_code([] { pauli(4); }) == ErrorCode::BadQuantumNumbers);
}

TEST_CASE("pauli_dot squares to the identity on unit vectors", "[spinor]") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 25; ++t) {
    const Matrix2C m = pauli_dot(random_unit(rng));
    REQUIRE((m * m - Matrix2C::Identity()).norm() < 1e-12);
  }
  REQUIRE(caught_code([] { pauli_dot(Vec3(1.0, 1.0, 0.0)); }) ==
          ErrorCode::NonUnitVector);
}

TEST_CASE("gamma matrices satisfy the Clifford algebra", "[spinor]") {
  const double metric[4] = {1.0, -1.0, -1.0, -1.0};
  for (int mu = 0; mu <= 3; ++mu)
    for (int nu = 0; nu <= 3; ++nu) {
      const Matrix4C anti = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
      const Matrix4C expect =
          (mu == nu ? 2.0 * metric[mu] : 0.0) * Matrix4C::Identity();
      REQUIRE((anti - expect).norm() < 1e-15);
    }
  REQUIRE(caught_code([] { gamma(-1); }) == ErrorCode::BadQuantumNumbers);
  REQUIRE(caught_code([] { gamma(4); }) == ErrorCode::BadQuantumNumbers);
}

TEST_CASE("gamma5 has the block form i g0 g1 g2 g3", "[spinor]") {
  const Matrix4C built = I * gamma(0) * gamma(1) * gamma(2) * gamma(3);
  REQUIRE((gamma5() - built).norm() < 1e-15);
  REQUIRE((gamma5() * gamma5() - Matrix4C::Identity()).norm() < 1e-15);
  for (int mu = 0; mu <= 3; ++mu)
    REQUIRE((gamma5() * gamma(mu) + gamma(mu) * gamma5()).norm() < 1e-15);
}

TEST_CASE("chi spinors at reference angles", "[spinor]") {
  const double r = std::sqrt(0.5);
  const TwoSpinor up_x = chi(Spin::up, pi / 2, 0.0);
  REQUIRE(std::abs(up_x(0) - Complex(r, 0.0)) < 1e-15);
  REQUIRE(std::abs(up_x(1) - Complex(r, 0.0)) < 1e-15);
  const TwoSpinor down_x = chi(Spin::down, pi / 2, 0.0);
  REQUIRE(std::abs(down_x(0) - Complex(-r, 0.0)) < 1e-15);
  REQUIRE(std::abs(down_x(1) - Complex(r, 0.0)) < 1e-15);
  const TwoSpinor up_z = chi(Spin::up, 0.0, 0.0);
  REQUIRE(std::abs(up_z(0) - Complex(1.0, 0.0)) < 1e-15);
  REQUIRE(std::abs(up_z(1)) < 1e-15);
}

TEST_CASE("chi spinors diagonalize sigma.a and are orthonormal", "[spinor]") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> uth(0.0, pi), uph(-pi, pi);
  for (int t = 0; t < 50; ++t) {
    const double th = uth(rng), ph = uph(rng);
    const Matrix2C proj = pauli_dot(polar_axis(th, ph));
    for (Spin s : {Spin::up, Spin::down}) {
      const TwoSpinor x = chi(s, th, ph);
      REQUIRE((proj * x - 2.0 * spin_value(s) * x).norm() < 1e-14);
      REQUIRE(std::abs(x.dot(x) - Complex(1.0, 0.0)) < 1e-14);
    }
    REQUIRE(std::abs(chi(Spin::up, th, ph).dot(chi(Spin::down, th, ph))) <
            1e-14);
  }
}

TEST_CASE("xi flips the chi label with the documented sign", "[spinor]") {
  const TwoSpinor xi_up = xi(Spin::up, 0.0, 0.0);
  REQUIRE(std::abs(xi_up(0)) < 1e-15);
  REQUIRE(std::abs(xi_up(1) - Complex(-1.0, 0.0)) < 1e-15);
  const TwoSpinor xi_down = xi(Spin::down, 0.0, 0.0);
  REQUIRE(std::abs(xi_down(0) - Complex(1.0, 0.0)) < 1e-15);
  REQUIRE(std::abs(xi_down(1)) < 1e-15);

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> uth(0.0, pi), uph(-pi, pi);
  for (int t = 0; t < 20; ++t) {
    const double th = uth(rng), ph = uph(rng);
    for (Spin s : {Spin::up, Spin::down}) {
      const TwoSpinor lhs = xi(s, th, ph);
      const TwoSpinor rhs = -2.0 * spin_value(s) * chi(spin_flip(s), th, ph);
      REQUIRE((lhs - rhs).norm() < 1e-15);
    }
  }
}

TEST_CASE("dirac solutions satisfy norms and field equations", "[spinor]") {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> um(0.05, 3.0), up(0.0, 4.0),
      uth(0.0, pi), uph(-pi, pi);
  for (int t = 0; t < 50; ++t) {
    const double m = um(rng), k = up(rng);
    const double eps = energy(k, m);
    const Vec3 n = random_unit(rng);
    const double th = uth(rng), ph = uph(rng);
    for (Spin s : {Spin::up, Spin::down}) {
      const FourSpinor u = dirac_u(k, m, n, s, th, ph);
      const FourSpinor v = dirac_v(k, m, n, s, th, ph);
      REQUIRE(std::abs(u.dot(u) - Complex(2.0 * eps, 0.0)) < 1e-12 * eps);
      REQUIRE(std::abs(v.dot(v) - Complex(2.0 * eps, 0.0)) < 1e-12 * eps);
      const Complex ubar_u = (dirac_bar(u).transpose() * u)(0);
      const Complex vbar_v = (dirac_bar(v).transpose() * v)(0);
      REQUIRE(std::abs(ubar_u - Complex(2.0 * m, 0.0)) < 1e-12 * eps);
      REQUIRE(std::abs(vbar_v - Complex(-2.0 * m, 0.0)) < 1e-12 * eps);
      const Matrix4C kslash = slash(eps, k * n);
      REQUIRE(((kslash - m * Matrix4C::Identity()) * u).norm() < 1e-12 * eps);
      REQUIRE(((kslash + m * Matrix4C::Identity()) * v).norm() < 1e-12 * eps);
    }
  }
}

TEST_CASE("dirac solutions at rest take the two-spinor form", "[spinor]") {
  const double m = 1.0;
  const FourSpinor v = dirac_v(0.0, m, Vec3(0, 0, 1), Spin::up, 0.0, 0.0);
  REQUIRE(std::abs(v(0)) < 1e-15);
  REQUIRE(std::abs(v(1)) < 1e-15);
  REQUIRE(std::abs(v(2)) < 1e-15);
  REQUIRE(std::abs(v(3) - Complex(-std::sqrt(2.0), 0.0)) < 1e-15);

  const double th = 0.7, ph = -1.1;
  const FourSpinor u = dirac_u(0.0, 2.0, Vec3(0, 1, 0), Spin::down, th, ph);
  const TwoSpinor x = chi(Spin::down, th, ph);
  REQUIRE(std::abs(u(0) - 2.0 * x(0)) < 1e-15);
  REQUIRE(std::abs(u(1) - 2.0 * x(1)) < 1e-15);
  REQUIRE(std::abs(u(2)) < 1e-15);
  REQUIRE(std::abs(u(3)) < 1e-15);
}

TEST_CASE("dirac constructors reject bad inputs", "[spinor]") {
  const Vec3 z(0, 0, 1);
  REQUIRE(caught_code([&] { dirac_u(1.0, -0.5, z, Spin::up, 0, 0); }) ==
          ErrorCode::NegativeMass);
  REQUIRE(caught_code([&] { dirac_v(1.0, -0.5, z, Spin::up, 0, 0); }) ==
          ErrorCode::NegativeMass);
  REQUIRE(caught_code([&] { dirac_u(-1.0, 0.5, z, Spin::up, 0, 0); }) ==
          ErrorCode::NonPositiveInput);
  REQUIRE(caught_code([&] { dirac_v(-1.0, 0.5, z, Spin::up, 0, 0); }) ==
          ErrorCode::NonPositiveInput);
}

TEST_CASE("spin operator eigenrelations for u and v", "[spinor]") {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> um(0.05, 3.0), up(0.0, 4.0),
      uth(0.0, pi), uph(-pi, pi);
  for (int t = 0; t < 100; ++t) {
    const double m = um(rng), k = up(rng);
    const Vec3 n = random_unit(rng);
    const double th = uth(rng), ph = uph(rng);
    const Vec3 axis = polar_axis(th, ph);
    const Matrix4C proj_u = spin_operator_dot(axis, k * n, m);
    const Matrix4C proj_v = spin_operator_dot(axis, -k * n, m);
    for (Spin s : {Spin::up, Spin::down}) {
      const double twos = 2.0 * spin_value(s);
      const FourSpinor u = dirac_u(k, m, n, s, th, ph);
      const FourSpinor v = dirac_v(k, m, n, s, th, ph);
      REQUIRE((proj_u * u - twos * u).norm() / u.norm() < 1e-12);
      REQUIRE((proj_v * v - twos * v).norm() / v.norm() < 1e-12);
    }
  }
}

TEST_CASE("spin operator along z has the closed block form", "[spinor]") {
  const double p = 0.7, m = 1.3;
  const double eps = energy(p, m);
  const auto O = spin_operator(Vec3(0, 0, p), m);
  Matrix4C expect = Matrix4C::Zero();
  expect.block<2, 2>(0, 0) = (m / eps) * pauli(3);
  expect.block<2, 2>(2, 2) = -(m / eps) * pauli(3);
  expect.block<2, 2>(0, 2) = (p / eps) * Matrix2C::Identity();
  expect.block<2, 2>(2, 0) = (p / eps) * Matrix2C::Identity();
  REQUIRE((O[2] - expect).norm() < 1e-14);
}

TEST_CASE("spin operator algebra closes on the dirac solutions", "[spinor]") {
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> um(0.05, 3.0), up(0.0, 4.0),
      uth(0.0, pi), uph(-pi, pi);
  for (int t = 0; t < 100; ++t) {
    const double m = um(rng), k = up(rng);
    const Vec3 n = random_unit(rng);
    const double th = uth(rng), ph = uph(rng);
    const auto O = spin_operator(k * n, m);
    const auto O_neg = spin_operator(-k * n, m);
    for (Spin s : {Spin::up, Spin::down}) {
      const FourSpinor u = dirac_u(k, m, n, s, th, ph);
      const FourSpinor v = dirac_v(k, m, n, s, th, ph);
      // Positive-energy solutions carry the algebra as written; the
      // antiparticle solutions carry it with the conjugate sign.
      REQUIRE(algebra_action_residual(O, u, +1.0) < 1e-12);
      REQUIRE(algebra_action_residual(O_neg, v, -1.0) < 1e-12);
    }
  }
}

TEST_CASE("spin operator commutator obstruction at rest", "[spinor]") {
  // As a full matrix identity the algebra fails: at p = 0 the operator is
  // diag(sigma, -sigma), whose lower block closes with the opposite sign.
  // The obstruction is confined to the antiparticle block and has Frobenius
  // norm exactly 4*sqrt(2).
  const auto O = spin_operator(Vec3(0, 0, 0), 1.0);
  const Matrix4C resid = O[0] * O[1] - O[1] * O[0] - 2.0 * I * O[2];
  REQUIRE(resid.norm() == Approx(4.0 * std::sqrt(2.0)).margin(1e-12));
  Matrix4C upper_block = resid;
  upper_block.block<2, 2>(2, 2).setZero();
  REQUIRE(upper_block.norm() < 1e-15);
}

TEST_CASE("spin operator rejects vanishing energy", "[spinor]") {
  REQUIRE(caught_code([] { spin_operator(Vec3(0, 0, 0), 0.0); }) ==
          ErrorCode::ZeroEnergy);
}

TEST_CASE("overlap forms at reference angles", "[spinor]") {
  const OverlapForms f = overlap_forms(pi / 2, 0.0);
  REQUIRE(std::abs(f.scalar - Complex(std::sin(pi / 4), 0.0)) < 1e-15);
  REQUIRE(std::abs(overlap_forms(0.0, 0.0).scalar) < 1e-15);
  REQUIRE(std::abs(overlap_forms(0.3, 0.3).scalar) < 1e-15);
}

TEST_CASE("overlap forms match direct spinor contractions", "[spinor]") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ua(-2.0 * pi, 2.0 * pi);
  for (int t = 0; t < 1000; ++t) {
    const double ta = ua(rng), tb = ua(rng);
    const OverlapForms f = overlap_forms(ta, tb);
    const TwoSpinor plus_a = chi(Spin::up, ta, 0.0);
    const TwoSpinor plus_b = chi(Spin::up, tb, 0.0);
    const TwoSpinor minus_b = chi(Spin::down, tb, 0.0);
    REQUIRE(std::abs(plus_a.dot(minus_b) - f.scalar) < 1e-14);
    for (int i = 1; i <= 3; ++i) {
      const Complex wpp = (plus_a.adjoint() * (pauli(i) * minus_b))(0);
      const Complex wpm = (plus_a.adjoint() * (pauli(i) * plus_b))(0);
      REQUIRE(std::abs(wpp - f.w_pp(i - 1)) < 1e-14);
      REQUIRE(std::abs(wpm - f.w_pm(i - 1)) < 1e-14);
    }
  }
}
