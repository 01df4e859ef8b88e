#pragma once

#include <cstddef>
#include <vector>

#include "floqlat/numerics/complex_matrix.hpp"

namespace floqlat {

enum class Boundary { Periodic, Open };

/// Staggered two-site-cell hopping operators along x+.
///   SinType (h1):  (1/2) [[0, 1 - e^{ik}], [1 - e^{-ik}, 0]],  h1^2 = sin^2(k/2)
///   CosType (h2):  (1/2) [[0, 1 + e^{ik}], [1 + e^{-ik}, 0]],  h2^2 = cos^2(k/2)
/// and h1 h2 + h2 h1 = 0.
enum class StaggerKind { SinType, CosType };

ComplexMatrix stagger_bloch(StaggerKind kind, double k);

/// Position form on 2 * n_cells sites, 0-based site index i:
///   SinType: h_{i,i+1} = h_{i+1,i} = (-1)^i / 2
///   CosType: h_{i,i+1} = h_{i+1,i} = 1/2
/// With periodic boundary the cell Fourier block
///   B(k)_{ab} = sum_X H_{(0,a),(X,b)} e^{-ikX}
/// equals stagger_bloch(kind, k) exactly; with open boundary the wraparound
/// bond is absent. Throws std::invalid_argument for n_cells < 2.
ComplexMatrix stagger_position(StaggerKind kind, std::size_t n_cells, Boundary boundary);

/// Discretizations of the time derivative on a lattice of spacing T.
enum class TimeScheme { Naive, Staggered };

/// Frequency-space derivative: naive is the 1x1 [sin(k0 T)/T]; staggered is
/// the two-component d(k0) = (1/2T) [[0, 1 - e^{ik0T}], [1 - e^{-ik0T}, 0]]
/// with eigenvalues +-|sin(k0 T/2)|/T.
ComplexMatrix time_derivative_bloch(TimeScheme scheme, double k0, double period);

/// Staggered derivative on 2 * n_cells time sites: the SinType position form over T.
ComplexMatrix staggered_time_derivative(std::size_t n_cells, double period, Boundary boundary);

/// Frequencies k0 in (-pi/T, pi/T] solving the discrete-time equation of
/// motion for a static energy eps_s.
///   Staggered: {(2/T) asin(eps_s T)}
///   Naive:     {asin(eps_s T)/T, pi/T - asin(eps_s T)/T}  (solution, doubler)
/// Throws std::domain_error when |eps_s T| > 1.
std::vector<double> discrete_time_frequencies(double eps_s, double period, TimeScheme scheme);

}  // namespace floqlat
