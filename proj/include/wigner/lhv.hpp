#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "wigner/errors.hpp"

// Counting-based local-hidden-variable oracle: joint distributions over the
// 8 outcome triples, pairwise probabilities, triangle-type margins, and
// exact feasibility of target pair probabilities.

namespace wigner {

enum class CorrelationMode { ANTI, CORR };

inline const char* mode_name(CorrelationMode m) {
  return m == CorrelationMode::ANTI ? "anti" : "corr";
}

inline CorrelationMode parse_mode(const std::string& s) {
  if (s == "anti") return CorrelationMode::ANTI;
  if (s == "corr") return CorrelationMode::CORR;
  fail(ErrorCode::UsageError, "unknown correlation mode: " + s);
}

enum class AxisLabel { a = 2, b = 1, c = 0 };

// Weights over fermion-side outcome triples (s_a, s_b, s_c), indexed in
// binary order with + mapped to 1: index = 4[a=+] + 2[b=+] + 1[c=+].
struct LHVDistribution {
  std::array<double, 8> weights{};
};

inline void validate(const LHVDistribution& dist) {
  double sum = 0.0;
  for (double w : dist.weights) {
    if (!(w >= 0.0))
      fail(ErrorCode::InvalidDistribution, "weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    fail(ErrorCode::InvalidDistribution, "weights must sum to 1");
}

inline LHVDistribution uniform_distribution() {
  LHVDistribution d;
  d.weights.fill(0.125);
  return d;
}

inline LHVDistribution point_mass(int index) {
  if (index < 0 || index > 7)
    fail(ErrorCode::BadQuantumNumbers, "triple index must be 0..7");
  LHVDistribution d;
  d.weights[index] = 1.0;
  return d;
}

inline LHVDistribution random_distribution(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  LHVDistribution d;
  double sum = 0.0;
  for (double& w : d.weights) {
    w = u(rng);
    sum += w;
  }
  for (double& w : d.weights) w /= sum;
  return d;
}

namespace detail {

inline bool triple_sign(int index, AxisLabel axis) {
  return (index >> static_cast<int>(axis)) & 1;
}

}  // namespace detail

// Joint probability that the fermion projects to fermion_sign on its axis
// while the antifermion projects to antifermion_sign on another axis; the
// antifermion value maps to the fermion side through the mode.
inline double pair_probability(const LHVDistribution& dist,
                               AxisLabel fermion_axis, bool fermion_plus,
                               AxisLabel antifermion_axis,
                               bool antifermion_plus, CorrelationMode mode) {
  if (fermion_axis == antifermion_axis)
    fail(ErrorCode::SameAxis, "pair probability needs two distinct axes");
  const bool mapped =
      mode == CorrelationMode::ANTI ? !antifermion_plus : antifermion_plus;
  double sum = 0.0;
  for (int i = 0; i < 8; ++i)
    if (detail::triple_sign(i, fermion_axis) == fermion_plus &&
        detail::triple_sign(i, antifermion_axis) == mapped)
      sum += dist.weights[i];
  return sum;
}

// Marginal of a single fermion-side or antifermion-side outcome.
inline double fermion_marginal(const LHVDistribution& dist, AxisLabel axis,
                               bool plus) {
  double sum = 0.0;
  for (int i = 0; i < 8; ++i)
    if (detail::triple_sign(i, axis) == plus) sum += dist.weights[i];
  return sum;
}

inline double antifermion_marginal(const LHVDistribution& dist, AxisLabel axis,
                                   bool plus, CorrelationMode mode) {
  const bool mapped = mode == CorrelationMode::ANTI ? !plus : plus;
  return fermion_marginal(dist, axis, mapped);
}

namespace detail {

// The three triangle operands: P(a2,b1), P(a2,c1), P(c2,b1) with the signs
// of the mode's canonical form.
inline std::array<double, 3> triangle_operands(const LHVDistribution& dist,
                                               CorrelationMode mode) {
  const bool partner = mode == CorrelationMode::ANTI;  // + for ANTI, - for CORR
  return {pair_probability(dist, AxisLabel::a, true, AxisLabel::b, partner, mode),
          pair_probability(dist, AxisLabel::a, true, AxisLabel::c, partner, mode),
          pair_probability(dist, AxisLabel::c, true, AxisLabel::b, partner, mode)};
}

}  // namespace detail

// rhs - lhs of the mode's triangle inequality; analytically >= 0 for any
// valid distribution.
inline double triangle_margin(const LHVDistribution& dist,
                              CorrelationMode mode) {
  validate(dist);
  const auto t = detail::triangle_operands(dist, mode);
  return t[1] + t[2] - t[0];
}

struct VariantMargins {
  double flipped = 0.0;
  double weakened = 0.0;
};

// Margins of the two equivalent rewritings: the flipped-axis form and the
// weakened sum bounded by single-outcome marginals.
inline VariantMargins variant_margins(const LHVDistribution& dist,
                                      CorrelationMode mode) {
  validate(dist);
  VariantMargins out;
  if (mode == CorrelationMode::ANTI) {
    const double lhs =
        pair_probability(dist, AxisLabel::a, true, AxisLabel::b, false, mode);
    const double rhs =
        pair_probability(dist, AxisLabel::a, true, AxisLabel::c, false, mode) +
        pair_probability(dist, AxisLabel::b, true, AxisLabel::c, true, mode);
    out.flipped = rhs - lhs;
  } else {
    const double lhs =
        pair_probability(dist, AxisLabel::a, true, AxisLabel::b, true, mode);
    const double rhs =
        pair_probability(dist, AxisLabel::a, true, AxisLabel::c, true, mode) +
        pair_probability(dist, AxisLabel::b, true, AxisLabel::c, false, mode);
    out.flipped = rhs - lhs;
  }
  const auto t = detail::triangle_operands(dist, mode);
  const bool partner = mode == CorrelationMode::ANTI;
  const double cap = fermion_marginal(dist, AxisLabel::a, true) +
                     antifermion_marginal(dist, AxisLabel::b, partner, mode);
  out.weakened = cap - (t[0] + t[1] + t[2]);
  return out;
}

// ---------------------------------------------------------------------------
// Feasibility of target pair probabilities
// ---------------------------------------------------------------------------

struct FeasibilityResult {
  bool feasible = false;
  std::optional<LHVDistribution> witness;
  // margins of the two closed-form feasibility conditions:
  // t2 + t3 - t1 and 1 - (t2 + t3)
  std::array<double, 2> certificate{};
};

// Searches for non-negative weights summing to 1 that reproduce the three
// triangle operands, by enumerating all 70 basic solutions of the 4x8
// equality system in lexicographic column order.
inline FeasibilityResult feasibility(double t1, double t2, double t3,
                                     CorrelationMode mode) {
  for (double t : {t1, t2, t3})
    if (!(t >= 0.0 && t <= 1.0))
      fail(ErrorCode::InvalidDistribution, "targets must lie in [0, 1]");
  (void)mode;  // both modes share the fermion-side patterns
  Eigen::Matrix<double, 4, 8> sys = Eigen::Matrix<double, 4, 8>::Zero();
  // P(a+, b-): indices 4, 5; P(a+, c-): 4, 6; P(c+, b-): 1, 5; total: all.
  sys(0, 4) = sys(0, 5) = 1.0;
  sys(1, 4) = sys(1, 6) = 1.0;
  sys(2, 1) = sys(2, 5) = 1.0;
  sys.row(3).setOnes();
  const Eigen::Vector4d target(t1, t2, t3, 1.0);

  FeasibilityResult out;
  out.certificate = {t2 + t3 - t1, 1.0 - (t2 + t3)};
  for (int i0 = 0; i0 < 8 && !out.witness; ++i0)
    for (int i1 = i0 + 1; i1 < 8 && !out.witness; ++i1)
      for (int i2 = i1 + 1; i2 < 8 && !out.witness; ++i2)
        for (int i3 = i2 + 1; i3 < 8 && !out.witness; ++i3) {
          Eigen::Matrix4d basis;
          basis.col(0) = sys.col(i0);
          basis.col(1) = sys.col(i1);
          basis.col(2) = sys.col(i2);
          basis.col(3) = sys.col(i3);
          const Eigen::FullPivLU<Eigen::Matrix4d> lu(basis);
          if (!lu.isInvertible()) continue;
          const Eigen::Vector4d x = lu.solve(target);
          if ((x.array() < -1e-12).any()) continue;
          LHVDistribution w;
          w.weights[i0] = std::max(x[0], 0.0);
          w.weights[i1] = std::max(x[1], 0.0);
          w.weights[i2] = std::max(x[2], 0.0);
          w.weights[i3] = std::max(x[3], 0.0);
          out.witness = w;
        }
  out.feasible = out.witness.has_value();
  return out;
}

}  // namespace wigner
