#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "floqlat/floquet/model.hpp"
#include "floqlat/numerics/complex_matrix.hpp"

namespace floqlat {

enum class GridAxis { Plane, KPlusLine, KMinusLine };

/// Per-momentum ascending eigenvalue lists. Values are in units of 1/T with T
/// taken from `params`.
struct SpectrumTable {
  std::string model;
  ModelParams params;
  GridAxis axis = GridAxis::Plane;
  std::vector<MomentumPoint> points;
  std::vector<std::vector<double>> values;
  std::string unit = "1/T";

  std::size_t bands() const { return values.empty() ? 0 : values.front().size(); }
  /// Throws std::invalid_argument unless every list has the same length and is sorted.
  void validate() const;
};

/// How the components of a strip eigenvector map onto transverse cells:
/// index = (outer * cells + cell) * inner + internal.
struct CellLayout {
  std::size_t outer = 1;
  std::size_t cells = 0;
  std::size_t inner = 2;

  std::size_t cell_of(std::size_t index) const { return (index / inner) % cells; }
  /// Probability per transverse cell.
  std::vector<double> density(std::span<const Complex> state) const;
};

/// Spectrum of a strip, indexed by the conserved momentum and the transverse
/// state index. `vectors[i]` (when present) holds the eigenvector of
/// values[i][j] in column j.
struct StripSpectrum {
  std::string model;
  ModelParams params;
  OpenDirection open = OpenDirection::XMinus;
  std::vector<double> momenta;
  std::vector<std::vector<double>> values;
  std::vector<ComplexMatrix> vectors;
  CellLayout layout;
  /// Exact degeneracy of every level (1 for the Floquet strip, 2 for the static one).
  std::size_t flavors = 1;

  bool has_vectors() const { return !vectors.empty(); }
  SpectrumTable table() const;
};

}  // namespace floqlat
