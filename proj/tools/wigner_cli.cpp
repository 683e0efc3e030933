#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wigner/corrections.hpp"
#include "wigner/emit.hpp"
#include "wigner/lhv.hpp"

namespace {

using namespace wigner;

constexpr double deg = pi / 180.0;

void emit_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) fail(ErrorCode::UsageError, "cannot open output file: " + path);
  std::fwrite(text.data(), 1, text.size(), f);
  std::fclose(f);
}

Complex to_complex(const std::vector<double>& v, const char* name) {
  if (v.size() == 1) return {v[0], 0.0};
  if (v.size() == 2) return {v[0], v[1]};
  fail(ErrorCode::UsageError,
       std::string(name) + " takes one real or re,im values");
}

Scenario parse_scenario(const std::string& s) {
  if (s == "brownian") return Scenario::brownian;
  if (s == "recoil") return Scenario::recoil;
  fail(ErrorCode::UsageError, "unknown scenario: " + s);
}

Channel default_channel(InequalityId id) {
  switch (id) {
    case InequalityId::WIGNER_S: return Channel::S_FF;
    case InequalityId::WIGNER_PHOTON_PS: return Channel::PI0_GG;
    case InequalityId::WIGNER_PHOTON_HIGGS: return Channel::H_GG;
    case InequalityId::TRIG_AB: return Channel::P0_GG_AB;
    default: return Channel::PS_FF;
  }
}

struct ChannelFlags {
  std::string channel;
  double M = 1.0;
  double m1 = 0.0;
  double m2 = 0.0;
  double g = 1.0;
  double F_H = 1.0;
  double F_pi = 1.0;
  double omega = 0.0;
  std::vector<double> A{1.0};
  std::vector<double> B{0.0};
};

void add_channel_flags(CLI::App* sub, ChannelFlags& f) {
  sub->add_option("--channel", f.channel,
                  "decay channel: ps-ff, s-ff, h-gg, pi0-gg, p0-gg-ab "
                  "(default chosen per inequality)");
  sub->add_option("-M,--mass", f.M, "parent mass")->capture_default_str();
  sub->add_option("--m1", f.m1, "antifermion mass")->capture_default_str();
  sub->add_option("--m2", f.m2, "fermion mass")->capture_default_str();
  sub->add_option("-g,--coupling", f.g, "coupling")->capture_default_str();
  sub->add_option("--FH", f.F_H, "two-photon scalar constant")
      ->capture_default_str();
  sub->add_option("--Fpi", f.F_pi, "two-photon pseudoscalar constant")
      ->capture_default_str();
  sub->add_option("--omega", f.omega, "photon energy (0 means M/2)")
      ->capture_default_str();
  sub->add_option("--A", f.A, "parity-odd constant, real or re,im")
      ->delimiter(',')
      ->expected(1, 2);
  sub->add_option("--B", f.B, "parity-even constant, real or re,im")
      ->delimiter(',')
      ->expected(1, 2);
}

ChannelConfig build_config(const ChannelFlags& f, InequalityId id) {
  ChannelConfig cfg;
  cfg.channel = f.channel.empty() ? default_channel(id) : parse_channel(f.channel);
  cfg.M = f.M;
  cfg.m1 = f.m1;
  cfg.m2 = f.m2;
  cfg.g = f.g;
  cfg.F_H = f.F_H;
  cfg.F_pi = f.F_pi;
  cfg.omega = f.omega;
  cfg.A = to_complex(f.A, "--A");
  cfg.B = to_complex(f.B, "--B");
  return cfg;
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

struct EvalOpts {
  std::string inequality;
  std::vector<double> angles;
  std::vector<double> correlators;
  std::vector<double> probs;
  bool degrees = false;
  std::string output;
  ChannelFlags flags;
};

void run_eval(const EvalOpts& o) {
  const InequalityId id = parse_inequality(o.inequality);
  JsonWriter out;
  out.field("inequality", inequality_name(id));
  if (id == InequalityId::BELL_CLASSIC) {
    if (o.correlators.size() != 3)
      fail(ErrorCode::UsageError, "bell-classic needs --correlators ab,ac,bc");
    const auto rep =
        eval_bell(o.correlators[0], o.correlators[1], o.correlators[2]);
    out.field("corr_ab", o.correlators[0])
        .field("corr_ac", o.correlators[1])
        .field("corr_bc", o.correlators[2])
        .field("lhs", rep.lhs)
        .field("rhs", rep.rhs)
        .field("margin", rep.margin)
        .field("violated", rep.violated);
    emit_text(out.str(), o.output);
    return;
  }
  if (id == InequalityId::CHSH_CLASSIC) {
    if (o.correlators.size() != 4)
      fail(ErrorCode::UsageError,
           "chsh-classic needs --correlators ab,ac,db,dc");
    const auto rep = eval_chsh(o.correlators[0], o.correlators[1],
                               o.correlators[2], o.correlators[3]);
    out.field("corr_ab", o.correlators[0])
        .field("corr_ac", o.correlators[1])
        .field("corr_db", o.correlators[2])
        .field("corr_dc", o.correlators[3])
        .field("lhs", rep.lhs)
        .field("rhs", rep.rhs)
        .field("margin", rep.margin)
        .field("violated", rep.violated);
    emit_text(out.str(), o.output);
    return;
  }
  if (id == InequalityId::WIGNER_PHOTON_S) {
    if (o.probs.size() != 3)
      fail(ErrorCode::UsageError, "wigner-photon-s needs --probs w1,w2,w3");
    const auto rep = eval_photon_s(o.probs[0], o.probs[1], o.probs[2]);
    out.field("w1", o.probs[0])
        .field("w2", o.probs[1])
        .field("w3", o.probs[2])
        .field("lhs", rep.lhs)
        .field("rhs", rep.rhs)
        .field("margin", rep.margin)
        .field("violated", rep.violated);
    emit_text(out.str(), o.output);
    return;
  }
  if (o.angles.size() != 3)
    fail(ErrorCode::UsageError,
         "eval needs --angles theta_a,theta_b,theta_c for this inequality");
  const double scale = o.degrees ? deg : 1.0;
  const AxisTriple ax{o.angles[0] * scale, o.angles[1] * scale,
                      o.angles[2] * scale};
  const ChannelConfig cfg = build_config(o.flags, id);
  const auto rep = eval_wigner(id, ax, cfg);
  out.field("channel", channel_name(cfg.channel))
      .field("theta_a", ax.theta_a)
      .field("theta_b", ax.theta_b)
      .field("theta_c", ax.theta_c)
      .field("lhs", rep.lhs)
      .field("rhs", rep.rhs)
      .field("margin", rep.margin)
      .field("violated", rep.violated);
  emit_text(out.str(), o.output);
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

struct ScanOpts {
  std::string inequality;
  int grid = 361;
  std::vector<double> range{-pi, pi};
  bool degrees = false;
  std::string format = "csv";
  std::string output;
  ChannelFlags flags;
};

void run_scan(const ScanOpts& o) {
  const InequalityId id = parse_inequality(o.inequality);
  if (o.range.size() != 2)
    fail(ErrorCode::UsageError, "--range takes lo,hi");
  const double scale = o.degrees ? deg : 1.0;
  const ScanGrid grid{o.grid, o.range[0] * scale, o.range[1] * scale};
  const ChannelConfig cfg = build_config(o.flags, id);
  const ScanResult res = scan(id, grid, cfg);
  if (o.format == "csv") {
    CsvWriter csv("theta_a,theta_b,theta_c,lhs,rhs,margin,violated");
    for (const auto& row : res.rows)
      csv.cell(row.theta_a)
          .cell(row.theta_b)
          .cell(row.theta_c)
          .cell(row.rep.lhs)
          .cell(row.rep.rhs)
          .cell(row.rep.margin)
          .cell(row.rep.violated)
          .endrow();
    emit_text(csv.str(), o.output);
    return;
  }
  if (o.format != "json")
    fail(ErrorCode::UsageError, "--format must be csv or json");
  const ScanRow& best = res.rows[res.best_index];
  JsonWriter out;
  out.field("inequality", inequality_name(id))
      .field("channel", channel_name(cfg.channel))
      .field("n_points", grid.n_points)
      .field("range_lo", grid.lo)
      .field("range_hi", grid.hi)
      .field("best_theta_a", best.theta_a)
      .field("best_theta_b", best.theta_b)
      .field("best_theta_c", best.theta_c)
      .field("best_lhs", best.rep.lhs)
      .field("best_rhs", best.rep.rhs)
      .field("best_margin", best.rep.margin)
      .field("best_violated", best.rep.violated);
  emit_text(out.str(), o.output);
}

// ---------------------------------------------------------------------------
// max-violation
// ---------------------------------------------------------------------------

struct MaxOpts {
  std::string inequality;
  double tol = 1e-10;
  bool ab_threshold = false;
  std::string output;
  ChannelFlags flags;
};

void run_max(const MaxOpts& o) {
  const InequalityId id = parse_inequality(o.inequality);
  const ChannelConfig cfg = build_config(o.flags, id);
  const MaxViolationResult res = maximize_violation(id, cfg, o.tol);
  JsonWriter out;
  out.field("inequality", inequality_name(id))
      .field("channel", channel_name(cfg.channel))
      .field("theta_a", res.axes.theta_a)
      .field("theta_b", res.axes.theta_b)
      .field("theta_c", res.axes.theta_c)
      .field("theta_ab", res.theta_ab)
      .field("margin", res.margin)
      .field("violated", res.margin > 0.0)
      .field("sweeps", res.sweeps);
  if (id == InequalityId::TRIG_HIGGS) {
    const TrigHiggsCheck check = trig_higgs_violability();
    out.field("stated_violable", check.stated_violable)
        .field("measured_violable", check.measured_violable)
        .field("differs_from_stated", check.differs_from_stated);
  }
  if (o.ab_threshold) {
    const ABThresholdResult thr = ab_violation_threshold();
    out.field("ab_ratio", thr.ratio)
        .field("ab_stated_bound", thr.stated_bound)
        .field("ab_differs_from_stated_bound", thr.differs_from_stated_bound);
  }
  emit_text(out.str(), o.output);
}

// ---------------------------------------------------------------------------
// lhv-check
// ---------------------------------------------------------------------------

struct LhvOpts {
  std::string mode = "anti";
  int sweep = 10000;
  unsigned long seed = 12345;
  std::vector<double> targets;
  std::string output;
};

void run_lhv(const LhvOpts& o) {
  const CorrelationMode mode = parse_mode(o.mode);
  if (o.sweep < 0) fail(ErrorCode::UsageError, "--sweep must be >= 0");
  std::mt19937_64 rng(o.seed);
  double min_triangle = 1.0, min_flipped = 1.0, min_weakened = 1.0;
  for (int i = 0; i < o.sweep; ++i) {
    const LHVDistribution d = random_distribution(rng);
    min_triangle = std::min(min_triangle, triangle_margin(d, mode));
    const VariantMargins vm = variant_margins(d, mode);
    min_flipped = std::min(min_flipped, vm.flipped);
    min_weakened = std::min(min_weakened, vm.weakened);
  }
  JsonWriter out;
  out.field("mode", mode_name(mode))
      .field("sweep", o.sweep)
      .field("seed", o.seed)
      .field("min_triangle_margin", min_triangle)
      .field("min_flipped_margin", min_flipped)
      .field("min_weakened_margin", min_weakened)
      .field("all_nonnegative", min_triangle >= -1e-12 &&
                                    min_flipped >= -1e-12 &&
                                    min_weakened >= -1e-12);
  if (!o.targets.empty()) {
    if (o.targets.size() != 3)
      fail(ErrorCode::UsageError, "--targets takes t1,t2,t3");
    const FeasibilityResult fr =
        feasibility(o.targets[0], o.targets[1], o.targets[2], mode);
    out.field("target_1", o.targets[0])
        .field("target_2", o.targets[1])
        .field("target_3", o.targets[2])
        .field("feasible", fr.feasible)
        .field("certificate_triangle", fr.certificate[0])
        .field("certificate_total", fr.certificate[1]);
    if (fr.witness)
      for (int i = 0; i < 8; ++i)
        out.field("witness_" + std::to_string(i), fr.witness->weights[i]);
  }
  emit_text(out.str(), o.output);
}

// ---------------------------------------------------------------------------
// correction-sweep
// ---------------------------------------------------------------------------

struct SweepOpts {
  std::string scenario = "brownian";
  std::vector<double> ell{1.0, 0.0, 0.0};
  std::vector<int> quad{64, 128};
  std::vector<double> ladder{1e-3, 1e-1};
  int ladder_n = 13;
  double M = 1.0;
  double m1 = 0.1;
  double m2 = 0.1;
  double g = 1.0;
  std::vector<double> angles{2.0 * pi / 3.0, 0.0, pi / 3.0};
  bool degrees = false;
  std::string format = "csv";
  std::string output;
};

void run_sweep(const SweepOpts& o) {
  if (o.ell.size() != 3) fail(ErrorCode::UsageError, "--ell takes x,y,z");
  if (o.quad.size() != 2)
    fail(ErrorCode::UsageError, "--quad takes n_cos,n_phi");
  if (o.ladder.size() != 2)
    fail(ErrorCode::UsageError, "--ladder takes lo,hi");
  if (o.angles.size() != 3)
    fail(ErrorCode::UsageError, "--angles takes theta_a,theta_b,theta_c");
  ChannelConfig cfg;
  cfg.channel = Channel::PS_FF;
  cfg.M = o.M;
  cfg.m1 = o.m1;
  cfg.m2 = o.m2;
  cfg.g = o.g;
  SweepSpec spec;
  spec.p_over_M = geometric_ladder(o.ladder[0], o.ladder[1], o.ladder_n);
  spec.scenario = parse_scenario(o.scenario);
  spec.ell = Vec3(o.ell[0], o.ell[1], o.ell[2]);
  const double scale = o.degrees ? deg : 1.0;
  spec.axes = {o.angles[0] * scale, o.angles[1] * scale, o.angles[2] * scale};
  spec.quad = {o.quad[0], o.quad[1]};
  const SweepResult res = correction_sweep(cfg, spec);
  if (o.format == "csv") {
    CsvWriter csv("p_over_M,delta_w");
    for (const auto& row : res.rows)
      csv.cell(row.p_over_M).cell(row.delta_w).endrow();
    emit_text(csv.str(), o.output);
    return;
  }
  if (o.format != "json")
    fail(ErrorCode::UsageError, "--format must be csv or json");
  JsonWriter out;
  out.field("scenario", o.scenario)
      .field("n_rows", static_cast<int>(res.rows.size()))
      .field("slope", res.fit.slope)
      .field("intercept", res.fit.intercept)
      .field("residual", res.fit.residual);
  emit_text(out.str(), o.output);
}

// ---------------------------------------------------------------------------
// weights and selftest
// ---------------------------------------------------------------------------

void run_weights(const std::string& output) {
  const GGWeights w = gg_correlation_weights();
  JsonWriter out;
  out.field("corr", w.corr).field("anti", w.anti).field("ratio", w.ratio);
  emit_text(out.str(), output);
}

void run_selftest(const std::string& output) {
  std::string text;
  const auto check = [&](const char* name, bool ok) {
    text += std::string(ok ? "ok" : "FAIL") + ": " + name + "\n";
    if (!ok) fail(ErrorCode::NoConvergence, std::string("selftest: ") + name);
  };
  ChannelConfig ps;
  const MaxViolationResult nqm =
      maximize_violation(InequalityId::WIGNER_NQM, ps, 1e-12);
  check("wigner-nqm peak margin 1/4",
        std::abs(nqm.margin - 0.25) < 1e-9 &&
            std::abs(nqm.theta_ab - 2.0 * pi / 3.0) < 1e-4);
  const GGWeights w = gg_correlation_weights();
  check("photon weight ratio 3", std::abs(w.ratio - 3.0) < 1e-12);
  check("uniform triangle margin 1/4",
        std::abs(triangle_margin(uniform_distribution(),
                                 CorrelationMode::ANTI) -
                 0.25) < 1e-15);
  const FeasibilityResult fr =
      feasibility(0.375, 0.125, 0.125, CorrelationMode::ANTI);
  check("peak targets infeasible", !fr.feasible);
  const double corr = analyzer_distance_correction(1.0, 2.0);
  check("analyzer distance near 1e-28", corr > 5e-29 && corr < 5e-28);
  text += "selftest passed\n";
  emit_text(text, output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell-type inequality toolkit for two-body decays"};
  app.require_subcommand(1);

  EvalOpts eval_opts;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate one inequality");
  eval_cmd->add_option("--inequality", eval_opts.inequality,
                       "inequality id (e.g. wigner-nqm)")
      ->required();
  eval_cmd->add_option("--angles", eval_opts.angles,
                       "analyzer angles theta_a,theta_b,theta_c")
      ->delimiter(',')
      ->expected(3);
  eval_cmd->add_option("--correlators", eval_opts.correlators,
                       "correlators for bell-classic or chsh-classic")
      ->delimiter(',')
      ->expected(3, 4);
  eval_cmd->add_option("--probs", eval_opts.probs,
                       "probabilities w1,w2,w3 for wigner-photon-s")
      ->delimiter(',')
      ->expected(3);
  eval_cmd->add_flag("--degrees", eval_opts.degrees, "angles are in degrees");
  eval_cmd->add_option("--output", eval_opts.output, "write to file");
  add_channel_flags(eval_cmd, eval_opts.flags);
  eval_cmd->callback([&]() { run_eval(eval_opts); });

  ScanOpts scan_opts;
  CLI::App* scan_cmd =
      app.add_subcommand("scan", "grid scan over theta_a and theta_c");
  scan_cmd->add_option("--inequality", scan_opts.inequality, "inequality id")
      ->required();
  scan_cmd->add_option("--grid", scan_opts.grid, "points per angle")
      ->capture_default_str();
  scan_cmd->add_option("--range", scan_opts.range, "angle range lo,hi")
      ->delimiter(',')
      ->expected(2);
  scan_cmd->add_flag("--degrees", scan_opts.degrees, "range is in degrees");
  scan_cmd->add_option("--format", scan_opts.format, "csv or json")
      ->capture_default_str();
  scan_cmd->add_option("--output", scan_opts.output, "write to file");
  add_channel_flags(scan_cmd, scan_opts.flags);
  scan_cmd->callback([&]() { run_scan(scan_opts); });

  MaxOpts max_opts;
  CLI::App* max_cmd =
      app.add_subcommand("max-violation", "maximize the inequality margin");
  max_cmd->add_option("--inequality", max_opts.inequality, "inequality id")
      ->required();
  max_cmd->add_option("--tol", max_opts.tol, "margin convergence tolerance")
      ->capture_default_str();
  max_cmd->add_flag("--ab-threshold", max_opts.ab_threshold,
                    "also bisect the |A|/|B| violation threshold");
  max_cmd->add_option("--output", max_opts.output, "write to file");
  add_channel_flags(max_cmd, max_opts.flags);
  max_cmd->callback([&]() { run_max(max_opts); });

  LhvOpts lhv_opts;
  CLI::App* lhv_cmd = app.add_subcommand(
      "lhv-check", "random-distribution margins and target feasibility");
  lhv_cmd->add_option("--mode", lhv_opts.mode, "anti or corr")
      ->capture_default_str();
  lhv_cmd->add_option("--sweep", lhv_opts.sweep, "number of random draws")
      ->capture_default_str();
  lhv_cmd->add_option("--seed", lhv_opts.seed, "generator seed")
      ->capture_default_str();
  lhv_cmd->add_option("--targets", lhv_opts.targets,
                      "target pair probabilities t1,t2,t3")
      ->delimiter(',')
      ->expected(3);
  lhv_cmd->add_option("--output", lhv_opts.output, "write to file");
  lhv_cmd->callback([&]() { run_lhv(lhv_opts); });

  SweepOpts sweep_opts;
  CLI::App* sweep_cmd = app.add_subcommand(
      "correction-sweep", "momentum-perturbation ladder and scaling fit");
  sweep_cmd->add_option("--scenario", sweep_opts.scenario,
                        "brownian or recoil")
      ->capture_default_str();
  sweep_cmd->add_option("--ell", sweep_opts.ell, "perturbation direction x,y,z")
      ->delimiter(',')
      ->expected(3);
  sweep_cmd->add_option("--quad", sweep_opts.quad, "quadrature n_cos,n_phi")
      ->delimiter(',')
      ->expected(2);
  sweep_cmd->add_option("--ladder", sweep_opts.ladder, "p/M range lo,hi")
      ->delimiter(',')
      ->expected(2);
  sweep_cmd->add_option("--ladder-n", sweep_opts.ladder_n, "ladder points")
      ->capture_default_str();
  sweep_cmd->add_option("-M,--mass", sweep_opts.M, "parent mass")
      ->capture_default_str();
  sweep_cmd->add_option("--m1", sweep_opts.m1, "antifermion mass")
      ->capture_default_str();
  sweep_cmd->add_option("--m2", sweep_opts.m2, "fermion mass")
      ->capture_default_str();
  sweep_cmd->add_option("-g,--coupling", sweep_opts.g, "coupling")
      ->capture_default_str();
  sweep_cmd->add_option("--angles", sweep_opts.angles,
                        "analyzer angles theta_a,theta_b,theta_c")
      ->delimiter(',')
      ->expected(3);
  sweep_cmd->add_flag("--degrees", sweep_opts.degrees,
                      "angles are in degrees");
  sweep_cmd->add_option("--format", sweep_opts.format, "csv or json")
      ->capture_default_str();
  sweep_cmd->add_option("--output", sweep_opts.output, "write to file");
  sweep_cmd->callback([&]() { run_sweep(sweep_opts); });

  std::string weights_output;
  CLI::App* weights_cmd =
      app.add_subcommand("weights", "photon correlation weights");
  weights_cmd->add_option("--output", weights_output, "write to file");
  weights_cmd->callback([&]() { run_weights(weights_output); });

  std::string selftest_output;
  CLI::App* selftest_cmd =
      app.add_subcommand("selftest", "quick internal consistency battery");
  selftest_cmd->add_option("--output", selftest_output, "write to file");
  selftest_cmd->callback([&]() { run_selftest(selftest_output); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const wigner::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.code() == ErrorCode::UsageError ? 1 : 2;
  }
  return 0;
}
