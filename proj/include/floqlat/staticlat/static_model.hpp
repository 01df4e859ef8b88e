#pragma once

#include <cstddef>
#include <span>

#include "floqlat/floquet/model.hpp"
#include "floqlat/floquet/spectrum.hpp"
#include "floqlat/numerics/complex_matrix.hpp"

namespace floqlat {

/// Bulk energy of the static model,
///   (1/T) sqrt((3 + m^2)/4 - (1 - m^2)/4 (cos k+ + cos k- + cos k+ cos k-)).
/// A radicand slightly below zero (round-off at the band touching) is clipped;
/// one below -1e-12 throws std::domain_error.
double zeta(MomentumPoint k, const ModelParams& p);

/// H_s(k) = [h1(k+) x 1 + h2(k+) x H_chain(k-)] / T, 4x4, chain from p.variant.
/// Eigenvalues are -zeta, -zeta, +zeta, +zeta.
ComplexMatrix hs_bloch(MomentumPoint k, const ModelParams& p);

/// Static strip Hamiltonian at conserved momentum k.
///   open x-: [h1(k) x 1 + h2(k) x chain(open, N-)] / T,     index (a * N- + cell) * 2 + orbital
///   open x+: [h1(open, N+) x 1 + h2(open, N+) x chain(k)] / T, index (site * 2) + orbital
ComplexMatrix hs_strip(OpenDirection open, double k, const ModelParams& p);

/// Diagonalized static strip over a momentum grid. Flavors = 2.
StripSpectrum static_strip_spectrum(std::span<const double> grid, const ModelParams& p,
                                    OpenDirection open, bool with_vectors = false);

/// Diagonalized hs_bloch over the n x n periodic grid, k+ major (4 values per point).
SpectrumTable static_pbc_spectrum(std::size_t n, const ModelParams& p);

/// The flavor-collapsed closed form of the open-x- strip:
/// +-(1/T) sqrt(sin^2(k/2) + cos^2(k/2) lambda_j^2) for the open-chain levels lambda_j, sorted.
std::vector<double> strip_closed_form(double k, const ModelParams& p);

}  // namespace floqlat
