#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "wigner/probabilities.hpp"

// Registry and evaluators for the Bell-type inequalities, plus grid
// scanning, violation maximization, and the |A|/|B| threshold search.

namespace wigner {

enum class InequalityId {
  BELL_CLASSIC,
  CHSH_CLASSIC,
  WIGNER_PS,
  WIGNER_NQM,
  WIGNER_PHOTON_PS,
  WIGNER_S,
  WIGNER_PHOTON_S,
  WIGNER_PHOTON_HIGGS,
  TRIG_HIGGS,
  TRIG_PI0,
  TRIG_AB,
  WEAKENED_SUM,
};

inline const char* inequality_name(InequalityId id) {
  switch (id) {
    case InequalityId::BELL_CLASSIC: return "bell-classic";
    case InequalityId::CHSH_CLASSIC: return "chsh-classic";
    case InequalityId::WIGNER_PS: return "wigner-ps";
    case InequalityId::WIGNER_NQM: return "wigner-nqm";
    case InequalityId::WIGNER_PHOTON_PS: return "wigner-photon-ps";
    case InequalityId::WIGNER_S: return "wigner-s";
    case InequalityId::WIGNER_PHOTON_S: return "wigner-photon-s";
    case InequalityId::WIGNER_PHOTON_HIGGS: return "wigner-photon-higgs";
    case InequalityId::TRIG_HIGGS: return "trig-higgs";
    case InequalityId::TRIG_PI0: return "trig-pi0";
    case InequalityId::TRIG_AB: return "trig-ab";
    case InequalityId::WEAKENED_SUM: return "weakened-sum";
  }
  return "?";
}

inline InequalityId parse_inequality(const std::string& s) {
  for (InequalityId id : {InequalityId::BELL_CLASSIC, InequalityId::CHSH_CLASSIC,
                          InequalityId::WIGNER_PS, InequalityId::WIGNER_NQM,
                          InequalityId::WIGNER_PHOTON_PS, InequalityId::WIGNER_S,
                          InequalityId::WIGNER_PHOTON_S,
                          InequalityId::WIGNER_PHOTON_HIGGS,
                          InequalityId::TRIG_HIGGS, InequalityId::TRIG_PI0,
                          InequalityId::TRIG_AB, InequalityId::WEAKENED_SUM})
    if (s == inequality_name(id)) return id;
  fail(ErrorCode::UsageError, "unknown inequality id: " + s);
}

inline Channel parse_channel(const std::string& s) {
  for (Channel c : {Channel::PS_FF, Channel::S_FF, Channel::H_GG,
                    Channel::PI0_GG, Channel::P0_GG_AB})
    if (s == channel_name(c)) return c;
  fail(ErrorCode::UsageError, "unknown channel: " + s);
}

struct InequalityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool violated = false;
};

inline InequalityReport make_report(double lhs, double rhs) {
  const double margin = lhs - rhs;
  return {lhs, rhs, margin, margin > 0.0};
}

struct AxisTriple {
  double theta_a = 0.0;
  double theta_b = 0.0;
  double theta_c = 0.0;
};

inline void check_correlator(double e, const char* name) {
  if (!(e >= -1.0 && e <= 1.0))
    fail(ErrorCode::OutOfRangeCorrelator,
         std::string(name) + " must lie in [-1, 1]");
}

inline InequalityReport eval_bell(double corr_ab, double corr_ac,
                                  double corr_bc) {
  check_correlator(corr_ab, "corr_ab");
  check_correlator(corr_ac, "corr_ac");
  check_correlator(corr_bc, "corr_bc");
  return make_report(std::abs(corr_ab - corr_ac), 1.0 + corr_bc);
}

inline InequalityReport eval_chsh(double corr_ab, double corr_ac,
                                  double corr_db, double corr_dc) {
  check_correlator(corr_ab, "corr_ab");
  check_correlator(corr_ac, "corr_ac");
  check_correlator(corr_db, "corr_db");
  check_correlator(corr_dc, "corr_dc");
  return make_report(std::abs(corr_ab + corr_ac + corr_db - corr_dc), 2.0);
}

// Formal three-probability inequality for photon pairs, evaluated on
// caller-supplied weights.
inline InequalityReport eval_photon_s(double w1, double w2, double w3) {
  for (double w : {w1, w2, w3})
    if (!(w >= 0.0 && w <= 1.0))
      fail(ErrorCode::InvalidDistribution,
           "probabilities must lie in [0, 1]");
  return make_report(w1, w2 + w3);
}

namespace detail {

inline double sin2_half(double t) {
  const double s = std::sin(t / 2);
  return s * s;
}

inline double sin2(double t) {
  const double s = std::sin(t);
  return s * s;
}

inline void need_channel(const ChannelConfig& cfg, bool ok,
                         InequalityId id, const char* allowed) {
  if (!ok)
    fail(ErrorCode::ChannelMismatch,
         std::string(inequality_name(id)) + " needs channel " + allowed +
             ", got " + channel_name(cfg.channel));
}

}  // namespace detail

inline InequalityReport eval_wigner(InequalityId id, const AxisTriple& ax,
                                    const ChannelConfig& cfg) {
  using detail::need_channel;
  const double tab = ax.theta_a - ax.theta_b;
  const double tac = ax.theta_a - ax.theta_c;
  const double tcb = ax.theta_c - ax.theta_b;
  switch (id) {
    case InequalityId::WIGNER_PS: {
      need_channel(cfg, cfg.channel == Channel::PS_FF, id, "ps-ff");
      const SpinConfig pp{Spin::up, Spin::up};
      const double ab =
          joint_prob_ps(cfg, ax.theta_a, ax.theta_b, pp, ProbMode::normalized).value;
      const double ac =
          joint_prob_ps(cfg, ax.theta_a, ax.theta_c, pp, ProbMode::normalized).value;
      const double cb =
          joint_prob_ps(cfg, ax.theta_c, ax.theta_b, pp, ProbMode::normalized).value;
      return make_report(ab, ac + cb);
    }
    case InequalityId::WIGNER_NQM:
      return make_report(detail::sin2_half(tab),
                         detail::sin2_half(tac) + detail::sin2_half(tcb));
    case InequalityId::WIGNER_PHOTON_PS: {
      need_channel(cfg,
                   cfg.channel == Channel::PI0_GG ||
                       cfg.channel == Channel::P0_GG_AB,
                   id, "pi0-gg or p0-gg-ab");
      const double ab = joint_prob_gg(cfg, ax.theta_a, ax.theta_b, 1, 1).value;
      const double ac = joint_prob_gg(cfg, ax.theta_a, ax.theta_c, 1, 1).value;
      const double cb = joint_prob_gg(cfg, ax.theta_c, ax.theta_b, 1, 1).value;
      return make_report(ab, ac + cb);
    }
    case InequalityId::WIGNER_S: {
      need_channel(cfg, cfg.channel == Channel::S_FF, id, "s-ff");
      const Direction n = special_configuration();
      const SpinConfig pm{Spin::up, Spin::down};
      const double ab = joint_prob_s(cfg, ax.theta_a, ax.theta_b, pm, n).value;
      const double ac = joint_prob_s(cfg, ax.theta_a, ax.theta_c, pm, n).value;
      const double cb = joint_prob_s(cfg, ax.theta_c, ax.theta_b, pm, n).value;
      return make_report(ab, ac + cb);
    }
    case InequalityId::WIGNER_PHOTON_S:
      fail(ErrorCode::ChannelMismatch,
           "wigner-photon-s takes user probabilities; use eval_photon_s");
    case InequalityId::WIGNER_PHOTON_HIGGS: {
      need_channel(cfg, cfg.channel == Channel::H_GG, id, "h-gg");
      const auto combo = [&](double ta, double tb) {
        return 3.0 * joint_prob_gg(cfg, ta, tb, 1, 2).value +
               joint_prob_gg(cfg, ta, tb, 1, 1).value;
      };
      return make_report(combo(ax.theta_a, ax.theta_b),
                         combo(ax.theta_a, ax.theta_c) +
                             combo(ax.theta_c, ax.theta_b));
    }
    case InequalityId::TRIG_HIGGS:
      return make_report(detail::sin2(tab),
                         0.5 + detail::sin2(tac) + detail::sin2(tcb));
    case InequalityId::TRIG_PI0:
      return make_report(detail::sin2(tab), detail::sin2(tac) + detail::sin2(tcb));
    case InequalityId::TRIG_AB: {
      need_channel(cfg, cfg.channel == Channel::P0_GG_AB, id, "p0-gg-ab");
      const double a2 = std::norm(cfg.A);
      const double b2 = std::norm(cfg.B);
      const double diff = a2 - b2;
      return make_report(diff * detail::sin2(tab),
                         b2 + diff * (detail::sin2(tac) + detail::sin2(tcb)));
    }
    case InequalityId::WEAKENED_SUM:
      return make_report(detail::sin2_half(tab) + detail::sin2_half(tac) +
                             detail::sin2_half(tcb),
                         2.0);
    case InequalityId::BELL_CLASSIC:
    case InequalityId::CHSH_CLASSIC:
      fail(ErrorCode::ChannelMismatch,
           std::string(inequality_name(id)) +
               " takes correlators; use eval_bell or eval_chsh");
  }
  fail(ErrorCode::UsageError, "unhandled inequality id");
}

// ---------------------------------------------------------------------------
// Grid scan over theta_a and theta_c with theta_b held at zero
// ---------------------------------------------------------------------------

struct ScanGrid {
  int n_points = 361;
  double lo = -pi;
  double hi = pi;
};

struct ScanRow {
  double theta_a = 0.0;
  double theta_b = 0.0;
  double theta_c = 0.0;
  InequalityReport rep;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  std::size_t best_index = 0;
};

inline ScanResult scan(InequalityId id, const ScanGrid& grid,
                       const ChannelConfig& cfg) {
  if (grid.n_points < 2)
    fail(ErrorCode::EmptyGrid, "scan grid needs at least 2 points per angle");
  ScanResult out;
  out.rows.reserve(static_cast<std::size_t>(grid.n_points) * grid.n_points);
  const double step = (grid.hi - grid.lo) / (grid.n_points - 1);
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid.n_points; ++i) {
    const double ta = grid.lo + i * step;
    for (int j = 0; j < grid.n_points; ++j) {
      const double tc = grid.lo + j * step;
      ScanRow row{ta, 0.0, tc, eval_wigner(id, {ta, 0.0, tc}, cfg)};
      if (row.rep.margin > best) {
        best = row.rep.margin;
        out.best_index = out.rows.size();
      }
      out.rows.push_back(row);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Violation maximization: coarse grid, then coordinate-wise golden-section
// ---------------------------------------------------------------------------

namespace detail {

template <typename F>
double golden_max(const F& f, double lo, double hi) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-12) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return (a + b) / 2;
}

}  // namespace detail

struct MaxViolationResult {
  AxisTriple axes;
  double margin = 0.0;
  double theta_ab = 0.0;  // separation angle folded to [0, pi]
  int sweeps = 0;
};

inline MaxViolationResult maximize_violation(InequalityId id,
                                             const ChannelConfig& cfg,
                                             double tol = 1e-10) {
  if (tol <= 0.0) fail(ErrorCode::NonPositiveInput, "tolerance must be > 0");
  const auto margin_at = [&](double ta, double tc) {
    return eval_wigner(id, {ta, 0.0, tc}, cfg).margin;
  };
  const int n = 181;
  const double step = 2.0 * pi / (n - 1);
  double best_a = 0.0, best_c = 0.0;
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double ta = -pi + i * step;
    for (int j = 0; j < n; ++j) {
      const double tc = -pi + j * step;
      const double m = margin_at(ta, tc);
      if (m > best) {
        best = m;
        best_a = ta;
        best_c = tc;
      }
    }
  }
  MaxViolationResult out;
  double prev = best;
  int sweeps = 0;
  for (;;) {
    if (++sweeps > 1000)
      fail(ErrorCode::NoConvergence, "violation maximization did not settle");
    best_a = detail::golden_max(
        [&](double x) { return margin_at(x, best_c); }, best_a - step,
        best_a + step);
    best_c = detail::golden_max(
        [&](double x) { return margin_at(best_a, x); }, best_c - step,
        best_c + step);
    const double cur = margin_at(best_a, best_c);
    if (std::abs(cur - prev) < tol) {
      out.margin = cur;
      break;
    }
    prev = cur;
  }
  out.axes = {best_a, 0.0, best_c};
  out.theta_ab = std::acos(std::cos(best_a));
  out.sweeps = sweeps;
  return out;
}

// ---------------------------------------------------------------------------
// Measured |A|/|B| violation threshold for TRIG_AB
// ---------------------------------------------------------------------------

struct ABThresholdResult {
  double ratio = 0.0;          // measured threshold of |A|/|B|
  double stated_bound = 0.0;   // sqrt(2), the claimed bound
  bool differs_from_stated_bound = false;
};

inline ABThresholdResult ab_violation_threshold(double r_lo = 1.0,
                                                double r_hi = 10.0,
                                                double tol = 1e-6) {
  if (r_hi <= r_lo || tol <= 0.0)
    fail(ErrorCode::NonPositiveInput, "need a proper bracket and tol > 0");
  const auto peak_margin = [&](double r) {
    ChannelConfig cfg;
    cfg.channel = Channel::P0_GG_AB;
    cfg.A = Complex{r, 0.0};
    cfg.B = Complex{1.0, 0.0};
    return maximize_violation(InequalityId::TRIG_AB, cfg, 1e-12).margin;
  };
  double lo = r_lo, hi = r_hi;
  double m_lo = peak_margin(lo), m_hi = peak_margin(hi);
  if (m_lo == 0.0) return {lo, std::sqrt(2.0), false};
  if (m_hi == 0.0) return {hi, std::sqrt(2.0), false};
  if ((m_lo > 0.0) == (m_hi > 0.0))
    fail(ErrorCode::BracketFailure,
         "peak margin does not change sign over the ratio bracket");
  while (hi - lo > tol) {
    const double mid = (lo + hi) / 2;
    const double m = peak_margin(mid);
    if ((m > 0.0) == (m_lo > 0.0)) {
      lo = mid;
      m_lo = m;
    } else {
      hi = mid;
    }
  }
  ABThresholdResult out;
  out.ratio = (lo + hi) / 2;
  out.stated_bound = std::sqrt(2.0);
  out.differs_from_stated_bound = std::abs(out.ratio - out.stated_bound) > 0.01;
  return out;
}

// Scan-based violability check for the closed photon-pair inequality with
// the extra 1/2 on the right-hand side.
struct TrigHiggsCheck {
  double max_margin = 0.0;
  bool stated_violable = true;   // the claim under test
  bool measured_violable = false;
  bool differs_from_stated = false;
};

inline TrigHiggsCheck trig_higgs_violability() {
  ChannelConfig cfg;
  cfg.channel = Channel::H_GG;
  const MaxViolationResult best =
      maximize_violation(InequalityId::TRIG_HIGGS, cfg, 1e-12);
  TrigHiggsCheck out;
  out.max_margin = best.margin;
  out.measured_violable = best.margin > 0.0;
  out.differs_from_stated = out.measured_violable != out.stated_violable;
  return out;
}

}  // namespace wigner
