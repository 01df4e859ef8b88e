#include "floqlat/duality/phase_scan.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

#include "floqlat/duality/edge.hpp"
#include "floqlat/floquet/floquet.hpp"
#include "floqlat/staticlat/static_model.hpp"

namespace floqlat {

std::vector<PhaseScanRow> phase_scan(std::span<const double> jt_grid, const ModelParams& base,
                                     std::size_t k_points) {
  for (double jt : jt_grid)
    if (!(jt > 0.0 && jt < 2.0 * std::numbers::pi))
      throw std::invalid_argument("phase_scan: JT " + std::to_string(jt) + " outside (0, 2pi)");
  const std::vector<double> grid = brillouin_line(k_points);
  std::vector<PhaseScanRow> rows;
  for (double jt : jt_grid) {
    ModelParams p = base;
    p.jt = jt;
    PhaseScanRow row;
    row.jt = jt;
    row.bulk_gap = 2.0 * zeta({0.0, 0.0}, p);
    row.gapless = row.bulk_gap < kGaplessThreshold / p.period;
    if (!row.gapless) {
      row.floquet_edges =
          edge_report(strip_quasienergies(grid, p, OpenDirection::XMinus, true), p).census.total();
      row.static_edges =
          edge_report(static_strip_spectrum(grid, p, OpenDirection::XMinus, true), p)
              .census.total();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace floqlat
