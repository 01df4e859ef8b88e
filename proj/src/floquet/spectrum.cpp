#include "floqlat/floquet/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace floqlat {

void SpectrumTable::validate() const {
  if (points.size() != values.size())
    throw std::invalid_argument("SpectrumTable: point and value counts differ");
  for (const auto& row : values) {
    if (row.size() != bands()) throw std::invalid_argument("SpectrumTable: ragged value lists");
    if (!std::is_sorted(row.begin(), row.end()))
      throw std::invalid_argument("SpectrumTable: values not sorted");
  }
}

std::vector<double> CellLayout::density(std::span<const Complex> state) const {
  std::vector<double> rho(cells, 0.0);
  for (std::size_t i = 0; i < state.size(); ++i) rho[cell_of(i)] += std::norm(state[i]);
  return rho;
}

SpectrumTable StripSpectrum::table() const {
  SpectrumTable t;
  t.model = model;
  t.params = params;
  t.axis = open == OpenDirection::XMinus ? GridAxis::KPlusLine : GridAxis::KMinusLine;
  t.values = values;
  t.points.reserve(momenta.size());
  for (double k : momenta) {
    t.points.push_back(open == OpenDirection::XMinus ? MomentumPoint{k, 0.0}
                                                     : MomentumPoint{0.0, k});
  }
  return t;
}

}  // namespace floqlat
