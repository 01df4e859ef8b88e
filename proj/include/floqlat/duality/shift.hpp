#pragma once

#include <vector>

#include "floqlat/floquet/spectrum.hpp"

namespace floqlat {

/// Branch of a quasienergy: eps >= 0 is Plus (eps = 0 included), eps < 0 Minus.
enum class Branch { Plus, Minus };

/// Floquet quasienergies relabeled onto static energies:
///   eps'_+ = eps_+/2 - pi/(2T),  eps'_- = eps_-/2 + pi/(2T),  eps_s = sin(eps' T)/T.
/// The gap center pi/T goes to eps_s = 0 and quasienergy 0 to -+1/T.
struct ShiftedSpectrum {
  SpectrumTable source;
  double period = 1.0;
  std::vector<std::vector<Branch>> branches;
  std::vector<std::vector<double>> eps_prime;
  std::vector<std::vector<double>> eps_s;

  /// eps_s per point, sorted, as a table on the source grid.
  SpectrumTable target_table() const;
};

/// Throws std::invalid_argument for a value outside (-pi/T, pi/T].
ShiftedSpectrum pi_shift(const SpectrumTable& spectrum, double period);

/// Inverse relabeling eps = 2 eps' +- pi/T per branch, point by point in the
/// source order.
std::vector<std::vector<double>> unshift(const ShiftedSpectrum& shifted);

/// Staggered-scheme frequencies k0 = (2/T) asin(eps_s T), sorted per point.
SpectrumTable roundtrip_frequencies(const ShiftedSpectrum& shifted);

/// Largest deviation, on the 2pi/T circle, between the staggered frequency
/// of every shifted value and (a) 2 eps', (b) eps -+ pi/T for its branch.
struct RoundtripDeviation {
  double vs_two_eps_prime = 0.0;
  double vs_source = 0.0;
};
RoundtripDeviation roundtrip_deviation(const ShiftedSpectrum& shifted);

}  // namespace floqlat
