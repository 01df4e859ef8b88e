#include "floqlat/staticlat/nogo.hpp"

#include <cmath>
#include <stdexcept>

namespace floqlat {

double wilson_dirac_2d_energy(MomentumPoint k, double mass, double r) {
  const double sp = std::sin(k.k_plus);
  const double sm = std::sin(k.k_minus);
  const double wilson = mass + r * (2.0 - std::cos(k.k_plus) - std::cos(k.k_minus));
  return std::sqrt(r * r * (sp * sp + sm * sm) + wilson * wilson);
}

NoGoReport wd2p1_nogo(double m, double period) {
  if (!(std::abs(m) <= 1.0)) throw std::domain_error("wd2p1_nogo: |m| exceeds 1");
  if (!(period > 0.0)) throw std::domain_error("wd2p1_nogo: period must be positive");

  NoGoReport report;
  report.m = m;
  report.period = period;
  // At k+ = pi: e^2 = M^2 + 6MR + 10R^2 - 2R(M + 3R) cos k-.
  // k- independence: M = -3R. Then e^2 = 9R^2 - 18R^2 + 10R^2 = R^2 = 1/T^2.
  report.r_pos = 1.0 / period;
  report.mass_pos = -3.0 * report.r_pos;
  report.r_neg = -1.0 / period;
  report.mass_neg = -3.0 * report.r_neg;
  // At k = 0 the energy is |M| = 3/T, while the target is |m|/T.
  report.required_abs_m = std::abs(report.mass_pos) * period;
  report.compatible = std::abs(std::abs(m) - report.required_abs_m) <= 1e-12;
  if (!report.compatible) report.violated = "M = +-m/T (k = 0 energy)";
  return report;
}

}  // namespace floqlat
