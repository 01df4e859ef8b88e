#include "floqlat/staticlat/static_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "floqlat/numerics/eigen.hpp"
#include "floqlat/numerics/parallel.hpp"
#include "floqlat/staticlat/chain.hpp"
#include "floqlat/staticlat/stagger.hpp"

namespace floqlat {
namespace {

constexpr double kRadicandError = -1e-12;

ChainSpec open_chain(const ModelParams& p) {
  return {variant_params(p.variant, p.m()), p.n_minus, Boundary::Open};
}

std::string model_name(const ModelParams& p) { return "static-" + to_string(p.variant); }

}  // namespace

double zeta(MomentumPoint k, const ModelParams& p) {
  const double m2 = p.m() * p.m();
  const double cp = std::cos(k.k_plus);
  const double cm = std::cos(k.k_minus);
  const double radicand = 0.25 * (3.0 + m2) - 0.25 * (1.0 - m2) * (cp + cm + cp * cm);
  if (radicand < kRadicandError)
    throw std::domain_error("zeta: negative radicand " + std::to_string(radicand));
  return std::sqrt(std::max(0.0, radicand)) / p.period;
}

ComplexMatrix hs_bloch(MomentumPoint k, const ModelParams& p) {
  const auto chain = chain_bloch(variant_params(p.variant, p.m()), k.k_minus);
  ComplexMatrix h = kron(stagger_bloch(StaggerKind::SinType, k.k_plus), ComplexMatrix::identity(2)) +
                    kron(stagger_bloch(StaggerKind::CosType, k.k_plus), chain);
  h *= 1.0 / p.period;
  return h;
}

ComplexMatrix hs_strip(OpenDirection open, double k, const ModelParams& p) {
  p.validate();
  ComplexMatrix h;
  if (open == OpenDirection::XMinus) {
    const ComplexMatrix chain = chain_build(open_chain(p));
    h = kron(stagger_bloch(StaggerKind::SinType, k), ComplexMatrix::identity(chain.rows())) +
        kron(stagger_bloch(StaggerKind::CosType, k), chain);
  } else {
    const auto chain = chain_bloch(variant_params(p.variant, p.m()), k);
    h = kron(stagger_position(StaggerKind::SinType, p.n_plus, Boundary::Open),
             ComplexMatrix::identity(2)) +
        kron(stagger_position(StaggerKind::CosType, p.n_plus, Boundary::Open), chain);
  }
  h *= 1.0 / p.period;
  return h;
}

StripSpectrum static_strip_spectrum(std::span<const double> grid, const ModelParams& p,
                                    OpenDirection open, bool with_vectors) {
  if (grid.empty()) throw std::invalid_argument("static_strip_spectrum: empty momentum grid");
  auto eigs = parallel_map(grid.size(), [&](std::size_t i) { return hermitian_eig(hs_strip(open, grid[i], p)); });

  StripSpectrum out;
  out.model = model_name(p);
  out.params = p;
  out.open = open;
  out.momenta.assign(grid.begin(), grid.end());
  out.flavors = 2;
  out.layout = open == OpenDirection::XMinus ? CellLayout{2, p.n_minus, 2} : CellLayout{1, p.n_plus, 4};
  for (auto& e : eigs) {
    out.values.push_back(std::move(e.values));
    if (with_vectors) out.vectors.push_back(std::move(e.vectors));
  }
  return out;
}

SpectrumTable static_pbc_spectrum(std::size_t n, const ModelParams& p) {
  const auto line = brillouin_line(n);
  SpectrumTable table;
  table.model = model_name(p);
  table.params = p;
  table.axis = GridAxis::Plane;
  for (double kp : line)
    for (double km : line) table.points.push_back({kp, km});
  table.values = parallel_map(table.points.size(),
                              [&](std::size_t i) { return hermitian_eig(hs_bloch(table.points[i], p)).values; });
  return table;
}

std::vector<double> strip_closed_form(double k, const ModelParams& p) {
  const auto chain = hermitian_eig(chain_build(open_chain(p)));
  const double s = std::sin(k / 2.0);
  const double c = std::cos(k / 2.0);
  std::vector<double> out;
  out.reserve(chain.values.size());
  // Chain levels come in +-lambda pairs (chiral chain); the lower half of the
  // sorted levels supplies the negative branch.
  const std::size_t half = chain.values.size() / 2;
  for (std::size_t j = 0; j < chain.values.size(); ++j) {
    const double lambda = chain.values[j];
    const double e = std::sqrt(s * s + c * c * lambda * lambda) / p.period;
    out.push_back(j < half ? -e : e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace floqlat
