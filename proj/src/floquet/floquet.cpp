#include "floqlat/floquet/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "floqlat/numerics/eigen.hpp"
#include "floqlat/numerics/parallel.hpp"

namespace floqlat {
namespace {

constexpr std::array<std::array<int, 2>, 4> kDisplacements{{{0, 0}, {0, -1}, {-1, -1}, {-1, 0}}};

constexpr double kCosineSlack = 1e-12;

Complex bloch_phase(int step, MomentumPoint k) {
  const auto d = step_displacement(step);
  return std::polar(1.0, k.k_plus * d[0] + k.k_minus * d[1]);
}

// exp(-i H_n T/4) for H_n = J [[0, phase], [conj(phase), 0]].
ComplexMatrix step_unitary(Complex phase, double jt) {
  const double c = std::cos(jt / 4.0);
  const Complex s{0.0, -std::sin(jt / 4.0)};
  return {{c, s * phase}, {s * std::conj(phase), c}};
}

}  // namespace

std::array<int, 2> step_displacement(int step) {
  if (step < 1 || step > 4)
    throw std::out_of_range("drive step must be in 1..4, got " + std::to_string(step));
  return kDisplacements[static_cast<std::size_t>(step - 1)];
}

ComplexMatrix step_bloch_hamiltonian(int step, MomentumPoint k, const ModelParams& p) {
  const Complex phase = bloch_phase(step, k);
  const double j = p.hopping();
  return {{0.0, j * phase}, {j * std::conj(phase), 0.0}};
}

ComplexMatrix floquet_bloch(MomentumPoint k, const ModelParams& p) {
  ComplexMatrix u = ComplexMatrix::identity(2);
  for (int step = 1; step <= 4; ++step) u = step_unitary(bloch_phase(step, k), p.jt) * u;
  return u;
}

double floquet_cosine(MomentumPoint k, double jt) {
  const double c = std::cos(jt);
  const double cp = std::cos(k.k_plus);
  const double cm = std::cos(k.k_minus);
  return 0.25 * (3.0 + c - (1.0 - c) * (cp + cm + cp * cm));
}

QuasienergyPair quasienergy_analytic(MomentumPoint k, const ModelParams& p) {
  double rhs = floquet_cosine(k, p.jt);
  if (rhs > 1.0 + kCosineSlack || rhs < -1.0 - kCosineSlack)
    throw std::domain_error("quasienergy_analytic: cos(eps T) = " + std::to_string(rhs) +
                            " outside [-1, 1]");
  rhs = std::clamp(rhs, -1.0, 1.0);
  const double plus = std::acos(rhs) / p.period;
  return {plus, wrap_quasienergy(-plus, p.period)};
}

QuasienergyPair quasienergy_numeric(MomentumPoint k, const ModelParams& p) {
  const auto eig = unitary_eigenphases(floquet_bloch(k, p));
  const double a = wrap_quasienergy(-eig.values[0] / p.period, p.period);
  const double b = wrap_quasienergy(-eig.values[1] / p.period, p.period);
  return {std::max(a, b), std::min(a, b)};
}

ComplexMatrix floquet_strip(double k, const ModelParams& p, OpenDirection open) {
  p.validate();
  const std::size_t cells = p.transverse_cells(open);
  const double c = std::cos(p.jt / 4.0);
  const Complex s{0.0, -std::sin(p.jt / 4.0)};
  // Component 0 of a displacement is along x+, component 1 along x-.
  const std::size_t across = open == OpenDirection::XMinus ? 1 : 0;

  ComplexMatrix u = ComplexMatrix::identity(2 * cells);
  for (int step = 1; step <= 4; ++step) {
    const auto d = step_displacement(step);
    const long long shift = d[across];
    const Complex phase = std::polar(1.0, k * d[1 - across]);
    ComplexMatrix un = ComplexMatrix::identity(2 * cells);
    for (std::size_t cell = 0; cell < cells; ++cell) {
      const long long target = static_cast<long long>(cell) + shift;
      if (target < 0 || target >= static_cast<long long>(cells)) continue;
      const std::size_t a = 2 * cell;
      const std::size_t b = 2 * static_cast<std::size_t>(target) + 1;
      un(a, a) = c;
      un(b, b) = c;
      un(a, b) = s * phase;
      un(b, a) = s * std::conj(phase);
    }
    u = un * u;
  }
  return u;
}

StripSpectrum strip_quasienergies(std::span<const double> grid, const ModelParams& p,
                                  OpenDirection open, bool with_vectors) {
  if (grid.empty()) throw std::invalid_argument("strip_quasienergies: empty momentum grid");
  p.validate();

  struct Slice {
    std::vector<double> values;
    ComplexMatrix vectors;
  };
  auto slices = parallel_map(grid.size(), [&](std::size_t i) {
    auto eig = unitary_eigenphases(floquet_strip(grid[i], p, open));
    const std::size_t n = eig.values.size();
    std::vector<double> eps(n);
    for (std::size_t j = 0; j < n; ++j)
      eps[j] = wrap_quasienergy(-eig.values[j] / p.period, p.period);
    // Ascending quasienergy: phases sorted ascending map to descending eps,
    // apart from the pi/T wrap point, so sort explicitly.
    std::vector<std::size_t> order(n);
    for (std::size_t j = 0; j < n; ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return eps[a] < eps[b]; });
    Slice slice;
    slice.values.resize(n);
    if (with_vectors) slice.vectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      slice.values[j] = eps[order[j]];
      if (with_vectors)
        for (std::size_t r = 0; r < n; ++r) slice.vectors(r, j) = eig.vectors(r, order[j]);
    }
    return slice;
  });

  StripSpectrum out;
  out.model = "floquet";
  out.params = p;
  out.open = open;
  out.momenta.assign(grid.begin(), grid.end());
  out.layout = CellLayout{1, p.transverse_cells(open), 2};
  out.flavors = 1;
  for (auto& s : slices) {
    out.values.push_back(std::move(s.values));
    if (with_vectors) out.vectors.push_back(std::move(s.vectors));
  }
  return out;
}

SpectrumTable pbc_quasienergies(std::size_t n, const ModelParams& p, QuasienergyMethod method) {
  if (n < 1) throw std::invalid_argument("pbc_quasienergies: grid must be non-empty");
  const auto line = brillouin_line(n);
  SpectrumTable table;
  table.model = "floquet";
  table.params = p;
  table.axis = GridAxis::Plane;
  for (double kp : line)
    for (double km : line) table.points.push_back({kp, km});
  table.values = parallel_map(table.points.size(), [&](std::size_t i) {
    const auto q = method == QuasienergyMethod::Analytic ? quasienergy_analytic(table.points[i], p)
                                                         : quasienergy_numeric(table.points[i], p);
    return std::vector<double>{q.minus, q.plus};
  });
  return table;
}

}  // namespace floqlat
