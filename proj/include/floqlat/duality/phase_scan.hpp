#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "floqlat/floquet/model.hpp"

namespace floqlat {

struct PhaseScanRow {
  double jt = 0.0;
  /// 2 min_k zeta = 2|m|/T.
  double bulk_gap = 0.0;
  bool gapless = false;
  /// Flavor-collapsed edge census of the open-x- strips (0 when gapless).
  std::size_t floquet_edges = 0;
  std::size_t static_edges = 0;
};

/// Bulk gap and edge census for every JT of the grid, using the transverse
/// size and variant of `base` and `k_points` momenta of the strip.
/// Throws std::invalid_argument for a JT outside (0, 2pi).
std::vector<PhaseScanRow> phase_scan(std::span<const double> jt_grid, const ModelParams& base,
                                     std::size_t k_points = 24);

}  // namespace floqlat
