#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "floqlat/floquet/spectrum.hpp"

namespace floqlat {

/// Flavor-collapsed counts of edge-localized in-gap states.
struct EdgeCensus {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t total() const { return left + right; }
};

struct ComparisonReport {
  double max_abs_dev = 0.0;
  double mean_abs_dev = 0.0;
  std::size_t pairs_matched = 0;
  std::size_t degeneracy_factor = 1;
  /// Number of eigenvalues of `b` consumed; equals pairs_matched * degeneracy_factor.
  std::size_t total_compared = 0;
  /// Momentum points where |value| T sits at 1 and absolute values were compared.
  std::size_t saturated_points = 0;
  double tolerance = 0.0;
  bool pass = false;
  std::optional<EdgeCensus> edge_census;

  std::string verdict() const { return pass ? "pass" : "fail"; }
};

/// Pairing tolerance for collapsing degenerate levels of `b`.
inline constexpr double kDegeneracyTolerance = 1e-9;

/// Compares `a` against `b` collapsed by `degeneracy` on the same momentum grid.
///
/// Per point, b is sorted and cut into runs of `degeneracy` consecutive values
/// whose spread must stay within kDegeneracyTolerance; each run is averaged.
/// Where either side has a value with |value| T within 1e-9 of 1 (the
/// ambiguous endpoint of the shift), sorted absolute values are compared.
/// Throws std::invalid_argument on a grid or size mismatch and
/// std::domain_error when a run fails to pair.
ComparisonReport compare_spectra(const SpectrumTable& a, const SpectrumTable& b,
                                 std::size_t degeneracy, double tol);

/// Every level of `t` repeated `copies` times, per point. Lets a flavor-free
/// spectrum stand against one whose levels are not exactly degenerate, with
/// compare_spectra(replicate_levels(a, 2), b, 1, tol).
SpectrumTable replicate_levels(const SpectrumTable& t, std::size_t copies);

}  // namespace floqlat
