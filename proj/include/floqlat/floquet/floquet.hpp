#pragma once

#include <array>
#include <span>

#include "floqlat/floquet/model.hpp"
#include "floqlat/floquet/spectrum.hpp"
#include "floqlat/numerics/complex_matrix.hpp"

namespace floqlat {

// Four-step driven model. During quarter-period n every A site hops to the B
// site of the unit cell displaced by d_n (periodic gauge, integer
// displacements in (x+, x-) units):
//   d1 = (0, 0), d2 = (0, -1), d3 = (-1, -1), d4 = (-1, 0).

/// Unit-cell displacement of the bond active during step n (1..4), as {d+, d-}.
std::array<int, 2> step_displacement(int step);

/// H_n(k) = J [e^{i k.d_n} sigma_+ + h.c.], with J = jt / T.
/// Throws std::out_of_range for a step outside 1..4.
ComplexMatrix step_bloch_hamiltonian(int step, MomentumPoint k, const ModelParams& p);

/// U(T) = U4 U3 U2 U1 with U_n = exp(-i H_n T/4) in closed form.
ComplexMatrix floquet_bloch(MomentumPoint k, const ModelParams& p);

/// cos(eps T) from the closed-form dispersion:
///   [3 + cos JT - (1 - cos JT)(cos k+ + cos k- + cos k+ cos k-)] / 4.
double floquet_cosine(MomentumPoint k, double jt);

/// Quasienergy pair: `plus` is the upper branch, `minus` the lower one.
struct QuasienergyPair {
  double plus = 0.0;
  double minus = 0.0;
};

/// Closed-form quasienergies; plus in [0, pi/T], minus = -plus reduced into
/// (-pi/T, pi/T] (so both equal pi/T where the gap closes at JT = pi, k = 0).
QuasienergyPair quasienergy_analytic(MomentumPoint k, const ModelParams& p);

/// Quasienergies eps = -theta/T from the eigenphases of floquet_bloch.
QuasienergyPair quasienergy_numeric(MomentumPoint k, const ModelParams& p);

/// Floquet operator of a strip with `open` open (transverse cells from p) at
/// conserved momentum k along the periodic direction. Bonds that would leave
/// the strip are dropped, leaving their sites inert for that quarter period.
/// Basis index 2*cell + sublattice (A = 0, B = 1).
ComplexMatrix floquet_strip(double k, const ModelParams& p, OpenDirection open);

/// Sorted quasienergies in (-pi/T, pi/T] of floquet_strip for every k in the
/// grid, with eigenvectors when requested. Throws on an empty grid.
StripSpectrum strip_quasienergies(std::span<const double> grid, const ModelParams& p,
                                  OpenDirection open, bool with_vectors = false);

enum class QuasienergyMethod { Analytic, Numeric };

/// Bulk quasienergies on the n x n periodic grid (brillouin_line(n) per axis),
/// k+ major.
SpectrumTable pbc_quasienergies(std::size_t n, const ModelParams& p, QuasienergyMethod method);

}  // namespace floqlat
