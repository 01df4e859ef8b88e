#include "floqlat/duality/compare.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace floqlat {
namespace {

constexpr double kGridTolerance = 1e-12;
constexpr double kSaturationTolerance = 1e-9;

bool saturated(const std::vector<double>& row, double period) {
  return std::any_of(row.begin(), row.end(), [&](double v) {
    return std::abs(std::abs(v) * period - 1.0) <= kSaturationTolerance;
  });
}

}  // namespace

ComparisonReport compare_spectra(const SpectrumTable& a, const SpectrumTable& b,
                                 std::size_t degeneracy, double tol) {
  if (degeneracy == 0) throw std::invalid_argument("compare_spectra: degeneracy must be >= 1");
  if (a.points.size() != b.points.size() || a.values.size() != a.points.size() ||
      b.values.size() != b.points.size())
    throw std::invalid_argument("compare_spectra: momentum grids differ in size");

  ComparisonReport report;
  report.degeneracy_factor = degeneracy;
  report.tolerance = tol;
  const double period = a.params.period;
  double sum = 0.0;

  for (std::size_t i = 0; i < a.points.size(); ++i) {
    const auto& pa = a.points[i];
    const auto& pb = b.points[i];
    if (std::abs(pa.k_plus - pb.k_plus) > kGridTolerance ||
        std::abs(pa.k_minus - pb.k_minus) > kGridTolerance)
      throw std::invalid_argument("compare_spectra: momentum grids differ at point " +
                                  std::to_string(i));
    if (b.values[i].size() != degeneracy * a.values[i].size())
      throw std::invalid_argument("compare_spectra: expected " +
                                  std::to_string(degeneracy * a.values[i].size()) +
                                  " values of b at point " + std::to_string(i) + ", got " +
                                  std::to_string(b.values[i].size()));

    std::vector<double> sorted_b = b.values[i];
    std::sort(sorted_b.begin(), sorted_b.end());
    std::vector<double> collapsed;
    for (std::size_t j = 0; j < sorted_b.size(); j += degeneracy) {
      const double spread = sorted_b[j + degeneracy - 1] - sorted_b[j];
      if (spread > kDegeneracyTolerance)
        throw std::domain_error("compare_spectra: degenerate run split by " +
                                std::to_string(spread) + " at point " + std::to_string(i));
      double mean = 0.0;
      for (std::size_t r = 0; r < degeneracy; ++r) mean += sorted_b[j + r];
      collapsed.push_back(mean / static_cast<double>(degeneracy));
    }

    std::vector<double> lhs = a.values[i];
    if (saturated(lhs, period) || saturated(collapsed, period)) {
      ++report.saturated_points;
      for (auto& v : lhs) v = std::abs(v);
      for (auto& v : collapsed) v = std::abs(v);
    }
    std::sort(lhs.begin(), lhs.end());
    std::sort(collapsed.begin(), collapsed.end());
    for (std::size_t j = 0; j < lhs.size(); ++j) {
      const double d = std::abs(lhs[j] - collapsed[j]);
      report.max_abs_dev = std::max(report.max_abs_dev, d);
      sum += d;
    }
    report.pairs_matched += lhs.size();
    report.total_compared += sorted_b.size();
  }
  if (report.pairs_matched > 0) report.mean_abs_dev = sum / static_cast<double>(report.pairs_matched);
  report.pass = report.max_abs_dev <= tol;
  return report;
}

SpectrumTable replicate_levels(const SpectrumTable& t, std::size_t copies) {
  SpectrumTable out = t;
  for (auto& row : out.values) {
    std::vector<double> rep;
    rep.reserve(row.size() * copies);
    for (double v : row) rep.insert(rep.end(), copies, v);
    row = std::move(rep);
  }
  return out;
}

}  // namespace floqlat
