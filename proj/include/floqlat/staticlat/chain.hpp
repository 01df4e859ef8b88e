#pragma once

#include <cstddef>
#include <utility>
#include <variant>

#include "floqlat/floquet/model.hpp"
#include "floqlat/numerics/complex_matrix.hpp"
#include "floqlat/staticlat/stagger.hpp"

namespace floqlat {

/// H_D(k) = R sin k sigma_1 + [m0 + R(1 - cos k)] sigma_2.
struct WilsonDiracParams {
  double m0 = 0.0;
  double r = 0.0;
};

/// H_SSH(k) = [[0, v + w e^{ik}], [v + w e^{-ik}, 0]].
struct SshParams {
  double v = 0.0;
  double w = 0.0;
};

using ChainParams = std::variant<WilsonDiracParams, SshParams>;

/// One-dimensional two-band chain along x- with `cells` unit cells.
struct ChainSpec {
  ChainParams params;
  std::size_t cells = 2;
  Boundary boundary = Boundary::Open;
};

ComplexMatrix chain_bloch(const ChainParams& params, double k);

/// Position-space chain, dimension 2 * cells, index 2 * cell + orbital.
///   Wilson-Dirac: i R sigma_1 nabla + sigma_2 (m0 - (R/2) Laplacian)
///   SSH: intra-cell v, inter-cell w
/// The periodic version block-diagonalizes into chain_bloch under
/// B(k)_{ab} = sum_X H_{(0,a),(X,b)} e^{-ikX}. Throws std::invalid_argument
/// for fewer than 2 cells.
ComplexMatrix chain_build(const ChainSpec& chain);

/// Chain parameters standing in for the Floquet drive at mass m = cos(JT/2):
///   A -> Wilson-Dirac with m0 = m, R = (1 - m)/2
///   B -> SSH with v = (1 + m)/2, w = (m - 1)/2
/// Both give Bloch levels +-sqrt((1 + m^2)/2 - (1 - m^2)/2 cos k). With
/// w = (1 - m)/2 the SSH levels would sit at k + pi instead.
/// Throws std::domain_error for |m| > 1.
ChainParams variant_params(Variant variant, double m);

/// Whether the open chain hosts zero-energy end modes: m0/R < 0 for
/// Wilson-Dirac, |w| > |v| for SSH.
bool chain_has_end_modes(const ChainParams& params);

/// +-sqrt((1 + m^2)/2 - (1 - m^2)/2 cos k), the common Bloch dispersion of
/// both variants. Returns {positive, negative}. Throws std::domain_error for |m| > 1.
std::pair<double, double> chain_dispersion(double k_minus, double m);

}  // namespace floqlat
