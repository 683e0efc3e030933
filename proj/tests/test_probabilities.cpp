#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_util.hpp"
#include "wigner/probabilities.hpp"

using namespace wigner;
using Catch::Approx;
using testutil::caught_code;

TEST_CASE("phase space factor reference values", "[probabilities]") {
  ChannelConfig massless;
  REQUIRE(f_factor(massless).value == Approx(1.0 / (16.0 * pi)).epsilon(1e-14));

  ChannelConfig massive;
  massive.m1 = 0.1;
  massive.m2 = 0.3;
  // lambda(1, 0.01, 0.09) = 0.8064 and M^2 - (m1 - m2)^2 = 0.96 by hand.
  REQUIRE(f_factor(massive).value ==
          Approx(0.96 * std::sqrt(0.8064) / (16.0 * pi)).epsilon(1e-14));

  ChannelConfig heavy;
  heavy.m1 = 0.6;
  heavy.m2 = 0.5;
  REQUIRE(caught_code([&] { f_factor(heavy); }) == ErrorCode::BelowThreshold);
  REQUIRE(caught_code([&] { f_factor_fixed(heavy, 0.3); }) ==
          ErrorCode::BelowThreshold);
}

TEST_CASE("fixed-direction factor carries the polar weight", "[probabilities]") {
  ChannelConfig cfg;
  cfg.m1 = 0.2;
  cfg.m2 = 0.1;
  cfg.g = 1.3;
  const double f = f_factor(cfg).value;
  for (double tt : {0.2, 1.0, pi / 2, 2.9}) {
    REQUIRE(f_factor_fixed(cfg, tt).value ==
            Approx(f * std::sin(tt) / (4.0 * pi)).epsilon(1e-13));
  }
  REQUIRE(f_factor_fixed(cfg, 0.0).value == Approx(0.0).margin(1e-18));
}

TEST_CASE("pseudoscalar joint probabilities, massless daughters", "[probabilities]") {
  ChannelConfig cfg;
  const double ta = 0.9, tb = -0.7, half = (ta - tb) / 2;
  const double s2 = std::sin(half) * std::sin(half);
  REQUIRE(joint_prob_ps(cfg, ta, tb, {Spin::up, Spin::up},
                        ProbMode::integrated)
              .value == Approx(s2 / (16.0 * pi)).epsilon(1e-13));
  REQUIRE(joint_prob_ps(cfg, ta, tb, {Spin::up, Spin::up},
                        ProbMode::normalized)
              .value == Approx(0.5 * s2).epsilon(1e-13));
}

TEST_CASE("normalized spin table is mass independent", "[probabilities]") {
  ChannelConfig cfg;
  cfg.m1 = 0.1;
  cfg.m2 = 0.3;
  cfg.g = 2.2;
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ua(-pi, pi);
  for (int t = 0; t < 50; ++t) {
    const double ta = ua(rng), tb = ua(rng), half = (ta - tb) / 2;
    const double s2 = std::sin(half) * std::sin(half);
    const double c2 = std::cos(half) * std::cos(half);
    const auto p = [&](Spin a, Spin b) {
      return joint_prob_ps(cfg, ta, tb, {a, b}, ProbMode::normalized).value;
    };
    REQUIRE(p(Spin::up, Spin::up) == Approx(0.5 * s2).margin(1e-13));
    REQUIRE(p(Spin::down, Spin::down) == Approx(0.5 * s2).margin(1e-13));
    REQUIRE(p(Spin::up, Spin::down) == Approx(0.5 * c2).margin(1e-13));
    REQUIRE(p(Spin::down, Spin::up) == Approx(0.5 * c2).margin(1e-13));
    REQUIRE(p(Spin::up, Spin::up) + p(Spin::up, Spin::down) ==
            Approx(0.5).margin(1e-13));
    REQUIRE(p(Spin::up, Spin::up) + p(Spin::down, Spin::down) +
                p(Spin::up, Spin::down) + p(Spin::down, Spin::up) ==
            Approx(1.0).margin(1e-13));
  }
}

TEST_CASE("equal-spin probability at the wide angle is 3/8", "[probabilities]") {
  ChannelConfig cfg;
  REQUIRE(joint_prob_ps(cfg, 2.0 * pi / 3.0, 0.0, {Spin::up, Spin::up},
                        ProbMode::normalized)
              .value == Approx(0.375).epsilon(1e-13));
}

TEST_CASE("scalar channel probabilities normalize and match the weights", "[probabilities]") {
  ChannelConfig cfg;
  cfg.channel = Channel::S_FF;
  cfg.m1 = 0.15;
  cfg.m2 = 0.25;
  const DecayKinematics kin = rest_frame_kinematics(cfg.M, cfg.m1, cfg.m2);
  const Direction n{1.0, 0.7};
  const double ta = 0.6, tb = -1.1;
  double total = 0.0;
  for (const auto& sc : all_spin_configs())
    total += std::norm(amp_s_ff(cfg, kin, n, ta, tb, sc));
  double psum = 0.0;
  for (const auto& sc : all_spin_configs()) {
    const double direct = std::norm(amp_s_ff(cfg, kin, n, ta, tb, sc)) / total;
    const double p = joint_prob_s(cfg, ta, tb, sc, n).value;
    REQUIRE(p == Approx(direct).margin(1e-14));
    psum += p;
  }
  REQUIRE(psum == Approx(1.0).margin(1e-14));
}

TEST_CASE("two-photon probabilities for the scalar parent", "[probabilities]") {
  ChannelConfig cfg;
  cfg.channel = Channel::H_GG;
  cfg.F_H = 3.0;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> ua(-pi, pi);
  for (int t = 0; t < 50; ++t) {
    const double ta = ua(rng), tb = ua(rng);
    const double c2 = std::cos(ta - tb) * std::cos(ta - tb);
    REQUIRE(joint_prob_gg(cfg, ta, tb, 1, 1).value ==
            Approx(0.5 * c2).margin(1e-13));
    REQUIRE(joint_prob_gg(cfg, ta, tb, 1, 2).value ==
            Approx(0.5 * (1.0 - c2)).margin(1e-13));
  }
}

TEST_CASE("two-photon probabilities for the pseudoscalar parent", "[probabilities]") {
  ChannelConfig cfg;
  cfg.channel = Channel::PI0_GG;
  const double ta = 1.2, tb = 0.1;
  const double s2 = std::sin(ta - tb) * std::sin(ta - tb);
  REQUIRE(joint_prob_gg(cfg, ta, tb, 1, 1).value ==
          Approx(0.5 * s2).margin(1e-13));
  REQUIRE(joint_prob_gg(cfg, ta, tb, 2, 1).value ==
          Approx(0.5 * (1.0 - s2)).margin(1e-13));
}

TEST_CASE("mixed-parity photon probabilities interpolate the parities", "[probabilities]") {
  ChannelConfig cfg;
  cfg.channel = Channel::P0_GG_AB;
  cfg.A = Complex(2.0, 0.0);
  cfg.B = Complex(1.0, 0.0);
  const double r2 = std::norm(cfg.A) + std::norm(cfg.B);
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> ua(-pi, pi);
  for (int t = 0; t < 50; ++t) {
    const double ta = ua(rng), tb = ua(rng);
    const double s2 = std::sin(ta - tb) * std::sin(ta - tb);
    const double expect = (std::norm(cfg.A) * s2 +
                           std::norm(cfg.B) * (1.0 - s2)) / (2.0 * r2);
    REQUIRE(joint_prob_gg(cfg, ta, tb, 1, 1).value ==
            Approx(expect).margin(1e-13));
    double psum = 0.0;
    for (int l1 : {1, 2})
      for (int l2 : {1, 2}) psum += joint_prob_gg(cfg, ta, tb, l1, l2).value;
    REQUIRE(psum == Approx(1.0).margin(1e-13));
  }
}

TEST_CASE("spherical harmonic reference values", "[probabilities]") {
  REQUIRE(spherical_harmonic(0, 0, 0.7, 1.3).real() ==
          Approx(1.0 / std::sqrt(4.0 * pi)).epsilon(1e-14));
  REQUIRE(spherical_harmonic(1, 0, 0.7, 0.0).real() ==
          Approx(std::sqrt(3.0 / (4.0 * pi)) * std::cos(0.7)).epsilon(1e-14));
  REQUIRE(spherical_harmonic(1, 1, pi / 2, 0.0).real() ==
          Approx(-std::sqrt(3.0 / (8.0 * pi))).epsilon(1e-14));
  REQUIRE(std::norm(spherical_harmonic(2, 2, pi / 2, pi / 2)) ==
          Approx(15.0 / (32.0 * pi)).epsilon(1e-14));
  REQUIRE(std::norm(spherical_harmonic(2, 0, pi / 2, 0.0)) ==
          Approx(5.0 / (16.0 * pi)).epsilon(1e-14));
}

TEST_CASE("spherical harmonic conjugation symmetry", "[probabilities]") {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> uth(0.0, pi), uph(-pi, pi);
  for (int l = 0; l <= 4; ++l)
    for (int m = 0; m <= l; ++m)
      for (int t = 0; t < 5; ++t) {
        const double th = uth(rng), ph = uph(rng);
        const Complex plus = spherical_harmonic(l, m, th, ph);
        const Complex minus = spherical_harmonic(l, -m, th, ph);
        const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
        REQUIRE(std::abs(minus - sgn * std::conj(plus)) < 1e-13);
      }
}

TEST_CASE("spherical harmonic rejects bad quantum numbers", "[probabilities]") {
  REQUIRE(caught_code([] { spherical_harmonic(5, 0, 0.1, 0.2); }) ==
          ErrorCode::BadQuantumNumbers);
  REQUIRE(caught_code([] { spherical_harmonic(2, 3, 0.1, 0.2); }) ==
          ErrorCode::BadQuantumNumbers);
  REQUIRE(caught_code([] { spherical_harmonic(-1, 0, 0.1, 0.2); }) ==
          ErrorCode::BadQuantumNumbers);
}

TEST_CASE("photon pair angular weights", "[probabilities]") {
  const GGWeights w = gg_correlation_weights();
  REQUIRE(w.corr == Approx(15.0 / (16.0 * pi)).epsilon(1e-13));
  REQUIRE(w.anti == Approx(5.0 / (16.0 * pi)).epsilon(1e-13));
  REQUIRE(w.ratio == Approx(3.0).epsilon(1e-13));
}

TEST_CASE("probability entry points reject mismatched channels", "[probabilities]") {
  ChannelConfig ps;
  ChannelConfig gg;
  gg.channel = Channel::H_GG;
  REQUIRE(caught_code([&] {
            joint_prob_ps(gg, 0.1, 0.0, SpinConfig{}, ProbMode::normalized);
          }) == ErrorCode::WrongChannel);
  REQUIRE(caught_code([&] {
            joint_prob_s(ps, 0.1, 0.0, SpinConfig{}, Direction{1.0, 0.0});
          }) == ErrorCode::WrongChannel);
  REQUIRE(caught_code([&] { joint_prob_gg(ps, 0.1, 0.0, 1, 1); }) ==
          ErrorCode::WrongChannel);
}
