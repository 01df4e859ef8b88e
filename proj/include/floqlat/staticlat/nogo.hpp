#pragma once

#include <string>

#include "floqlat/floquet/model.hpp"

namespace floqlat {

/// Bulk energy of the two-dimensional Wilson-Dirac Hamiltonian
///   sqrt(R^2 (sin^2 k+ + sin^2 k-) + (M + R (2 - cos k+ - cos k-))^2).
double wilson_dirac_2d_energy(MomentumPoint k, double mass, double r);

/// Outcome of matching the 2D Wilson-Dirac Hamiltonian onto the static
/// target spectrum.
///
/// Flatness along k+ = pi forces M = -3R, after which the boundary energy is
/// |R|, so saturation at 1/T gives R = +-1/T and M = -+3/T. Matching the k = 0
/// energy |m|/T then needs |m| = 3.
struct NoGoReport {
  double m = 0.0;
  double period = 1.0;
  /// The two (M, R) solutions of the first two constraints, in 1/T.
  double mass_pos = 0.0, r_pos = 0.0;
  double mass_neg = 0.0, r_neg = 0.0;
  /// |m| demanded by the k = 0 constraint given the boundary solution.
  double required_abs_m = 3.0;
  bool compatible = false;
  std::string violated;
};

/// Throws std::domain_error for |m| > 1.
NoGoReport wd2p1_nogo(double m, double period);

}  // namespace floqlat
