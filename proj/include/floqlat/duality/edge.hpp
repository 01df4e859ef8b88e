#pragma once

#include <cstddef>
#include <vector>

#include "floqlat/duality/compare.hpp"
#include "floqlat/floquet/model.hpp"
#include "floqlat/floquet/spectrum.hpp"

namespace floqlat {

enum class EdgeSide { Left, Right };

/// One in-gap state after localization within its near-degenerate cluster.
struct EdgeState {
  double momentum = 0.0;
  /// Energy (static) or quasienergy (Floquet) in 1/T, averaged over the cluster
  /// members with the state's weights.
  double value = 0.0;
  EdgeSide side = EdgeSide::Left;
  double center = 0.0;
  /// Weight in the outermost ceil(N/4) cells on `side`.
  double edge_weight = 0.0;
  /// Density decay length in cells from a log-linear fit over the outer
  /// ceil(N/2) cells; NaN when fewer than two cells carry weight.
  double decay_length = 0.0;
  bool localized = false;
  std::vector<double> density;
};

struct EdgeReport {
  /// True when the bulk gap 2|m|/T is below kGaplessThreshold; the census is
  /// then undefined and `states` is empty.
  bool gapless = false;
  /// In-gap window: static |eps| T < |m|, Floquet |cos(eps T / 2)| < |m|.
  double half_gap = 0.0;
  std::vector<EdgeState> states;
  /// Flavor-collapsed census per momentum, in strip order.
  std::vector<EdgeCensus> per_momentum;
  /// Largest per-momentum census.
  EdgeCensus census;
};

/// Gap (in 1/T) under which the bulk counts as gapless.
inline constexpr double kGaplessThreshold = 1e-3;

/// In-gap levels closer than this (in 1/T, around the circle for Floquet) are
/// mixed before localizing.
inline constexpr double kClusterTolerance = 1e-3;

/// Locates edge states of a strip that carries eigenvectors. In-gap states of
/// each near-degenerate cluster are rotated into eigenstates of the projected
/// cell position, then classified by center of mass. A state counts as
/// edge-localized when edge_weight > 0.5. Throws std::invalid_argument without
/// eigenvectors.
EdgeReport edge_report(const StripSpectrum& strip, const ModelParams& p);

}  // namespace floqlat
