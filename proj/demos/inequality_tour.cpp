// Walks the main inequalities at their peak-violation geometry and prints
// the margins, then checks the same points against the LHV oracle.

#include <cstdio>

#include "wigner/inequalities.hpp"
#include "wigner/lhv.hpp"

int main() {
  using namespace wigner;

  ChannelConfig ps;  // defaults: ps-ff, M=1, massless pair, g=1
  const AxisTriple peak{2.0 * pi / 3.0, 0.0, pi / 3.0};

  const InequalityReport nqm = eval_wigner(InequalityId::WIGNER_NQM, peak, ps);
  std::printf("wigner-nqm at (2pi/3, 0, pi/3): lhs=%.6f rhs=%.6f margin=%.6f\n",
              nqm.lhs, nqm.rhs, nqm.margin);

  const InequalityReport wps = eval_wigner(InequalityId::WIGNER_PS, peak, ps);
  std::printf("wigner-ps   same axes:          lhs=%.6f rhs=%.6f margin=%.6f\n",
              wps.lhs, wps.rhs, wps.margin);

  ChannelConfig pi0;
  pi0.channel = Channel::PI0_GG;
  const MaxViolationResult photon =
      maximize_violation(InequalityId::TRIG_PI0, pi0, 1e-10);
  std::printf("trig-pi0 peak: theta_ab=%.6f margin=%.6f\n", photon.theta_ab,
              photon.margin);

  // The quantum pair probabilities at the fermion peak have no
  // counting-model realization.
  const FeasibilityResult fr =
      feasibility(0.375, 0.125, 0.125, CorrelationMode::ANTI);
  std::printf("LHV feasibility of (3/8, 1/8, 1/8): %s (certificate %.4f, %.4f)\n",
              fr.feasible ? "yes" : "no", fr.certificate[0], fr.certificate[1]);

  const FeasibilityResult ok =
      feasibility(0.25, 0.25, 0.25, CorrelationMode::ANTI);
  std::printf("LHV feasibility of (1/4, 1/4, 1/4): %s\n",
              ok.feasible ? "yes" : "no");
  return 0;
}
