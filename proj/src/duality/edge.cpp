#include "floqlat/duality/edge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "floqlat/numerics/eigen.hpp"

namespace floqlat {
namespace {

bool is_floquet(const StripSpectrum& s) { return s.model.rfind("floquet", 0) == 0; }

bool in_gap(double value, bool floquet, double abs_m, double period) {
  if (floquet) return std::abs(std::cos(value * period / 2.0)) < abs_m;
  return std::abs(value) * period < abs_m;
}

double level_distance(double a, double b, bool floquet, double period) {
  return floquet ? std::abs(wrap_quasienergy(a - b, period)) : std::abs(a - b);
}

double fit_decay_length(const std::vector<double>& rho, EdgeSide side) {
  const std::size_t n = rho.size();
  const std::size_t span = (n + 1) / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t used = 0;
  for (std::size_t d = 0; d < span; ++d) {
    const double r = side == EdgeSide::Left ? rho[d] : rho[n - 1 - d];
    if (!(r > std::numeric_limits<double>::min())) continue;
    const double x = static_cast<double>(d);
    const double y = std::log(r);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++used;
  }
  if (used < 2) return std::numeric_limits<double>::quiet_NaN();
  const double c = static_cast<double>(used);
  const double slope = (c * sxy - sx * sy) / (c * sxx - sx * sx);
  return -1.0 / slope;
}

EdgeState make_state(double k, double value, std::vector<double> rho) {
  EdgeState s;
  s.momentum = k;
  s.value = value;
  const std::size_t n = rho.size();
  for (std::size_t c = 0; c < n; ++c) s.center += static_cast<double>(c) * rho[c];
  s.side = s.center < static_cast<double>(n - 1) / 2.0 ? EdgeSide::Left : EdgeSide::Right;
  const std::size_t outer = (n + 3) / 4;
  for (std::size_t d = 0; d < outer; ++d)
    s.edge_weight += s.side == EdgeSide::Left ? rho[d] : rho[n - 1 - d];
  s.localized = s.edge_weight > 0.5;
  s.decay_length = fit_decay_length(rho, s.side);
  s.density = std::move(rho);
  return s;
}

}  // namespace

EdgeReport edge_report(const StripSpectrum& strip, const ModelParams& p) {
  if (!strip.has_vectors()) throw std::invalid_argument("edge_report: strip has no eigenvectors");
  EdgeReport report;
  const double abs_m = std::abs(p.m());
  const double period = p.period;
  report.half_gap = abs_m / period;
  if (2.0 * abs_m < kGaplessThreshold) {
    report.gapless = true;
    return report;
  }
  const bool floquet = is_floquet(strip);
  const CellLayout& layout = strip.layout;
  const std::size_t flavors = std::max<std::size_t>(strip.flavors, 1);

  for (std::size_t ik = 0; ik < strip.momenta.size(); ++ik) {
    const auto& vals = strip.values[ik];
    const ComplexMatrix& vecs = strip.vectors[ik];
    std::vector<std::size_t> gap_idx;
    for (std::size_t j = 0; j < vals.size(); ++j)
      if (in_gap(vals[j], floquet, abs_m, period)) gap_idx.push_back(j);

    // Clusters of near-degenerate in-gap levels. For Floquet the sorted list
    // wraps, so the last cluster may join the first across +-pi/T.
    std::vector<std::vector<std::size_t>> clusters;
    for (std::size_t j : gap_idx) {
      if (!clusters.empty() &&
          level_distance(vals[clusters.back().back()], vals[j], floquet, period) <
              kClusterTolerance)
        clusters.back().push_back(j);
      else
        clusters.push_back({j});
    }
    if (floquet && clusters.size() > 1 &&
        level_distance(vals[clusters.back().back()], vals[clusters.front().front()], floquet,
                       period) < kClusterTolerance) {
      auto& last = clusters.back();
      last.insert(last.end(), clusters.front().begin(), clusters.front().end());
      clusters.erase(clusters.begin());
    }

    std::size_t left = 0, right = 0;
    for (const auto& cl : clusters) {
      const std::size_t dim = vecs.rows();
      const std::size_t r = cl.size();
      // Projected position operator X_ab = <v_a| x |v_b>.
      ComplexMatrix x(r, r);
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
          Complex acc{};
          for (std::size_t i = 0; i < dim; ++i)
            acc += std::conj(vecs(i, cl[a])) * static_cast<double>(layout.cell_of(i)) *
                   vecs(i, cl[b]);
          x(a, b) = acc;
        }
      const EigenDecomposition loc = hermitian_eig(x, 1e-10);
      const double ref = vals[cl.front()];
      for (std::size_t c = 0; c < r; ++c) {
        std::vector<Complex> state(dim);
        double value = 0.0;
        for (std::size_t a = 0; a < r; ++a) {
          const Complex w = loc.vectors(a, c);
          for (std::size_t i = 0; i < dim; ++i) state[i] += w * vecs(i, cl[a]);
          const double offset = floquet ? wrap_quasienergy(vals[cl[a]] - ref, period)
                                        : vals[cl[a]] - ref;
          value += std::norm(w) * offset;
        }
        value = floquet ? wrap_quasienergy(ref + value, period) : ref + value;
        EdgeState s = make_state(strip.momenta[ik], value, layout.density(state));
        if (s.localized) (s.side == EdgeSide::Left ? left : right) += 1;
        report.states.push_back(std::move(s));
      }
    }
    const EdgeCensus census{left / flavors, right / flavors};
    if (census.total() > report.census.total()) report.census = census;
    report.per_momentum.push_back(census);
  }
  return report;
}

}  // namespace floqlat
