#include "floqlat/staticlat/stagger.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "floqlat/floquet/model.hpp"

namespace floqlat {

ComplexMatrix stagger_bloch(StaggerKind kind, double k) {
  const Complex e = std::polar(1.0, k);
  const double sign = kind == StaggerKind::SinType ? -1.0 : 1.0;
  const Complex off = 0.5 * (1.0 + sign * e);
  return {{0.0, off}, {std::conj(off), 0.0}};
}

ComplexMatrix stagger_position(StaggerKind kind, std::size_t n_cells, Boundary boundary) {
  if (n_cells < 2) throw std::invalid_argument("stagger_position: need at least 2 cells");
  const std::size_t n = 2 * n_cells;
  ComplexMatrix h(n, n);
  auto hop = [&](std::size_t i) {
    if (kind == StaggerKind::CosType) return 0.5;
    return i % 2 == 0 ? 0.5 : -0.5;
  };
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h(i, i + 1) = hop(i);
    h(i + 1, i) = hop(i);
  }
  if (boundary == Boundary::Periodic) {
    h(n - 1, 0) = hop(n - 1);
    h(0, n - 1) = hop(n - 1);
  }
  return h;
}

ComplexMatrix time_derivative_bloch(TimeScheme scheme, double k0, double period) {
  if (scheme == TimeScheme::Naive) return {{std::sin(k0 * period) / period}};
  ComplexMatrix d = stagger_bloch(StaggerKind::SinType, k0 * period);
  d *= 1.0 / period;
  return d;
}

ComplexMatrix staggered_time_derivative(std::size_t n_cells, double period, Boundary boundary) {
  ComplexMatrix d = stagger_position(StaggerKind::SinType, n_cells, boundary);
  d *= 1.0 / period;
  return d;
}

std::vector<double> discrete_time_frequencies(double eps_s, double period, TimeScheme scheme) {
  const double x = eps_s * period;
  if (!(std::abs(x) <= 1.0))
    throw std::domain_error("discrete_time_frequencies: |eps_s T| = " + std::to_string(std::abs(x)) +
                            " exceeds 1");
  const double principal = std::asin(x);
  if (scheme == TimeScheme::Staggered)
    return {wrap_quasienergy(2.0 * principal / period, period)};
  return {wrap_quasienergy(principal / period, period),
          wrap_quasienergy((std::numbers::pi - principal) / period, period)};
}

}  // namespace floqlat
