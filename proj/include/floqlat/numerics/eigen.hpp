#pragma once

#include <vector>

#include "floqlat/numerics/complex_matrix.hpp"

namespace floqlat {

/// Eigenvalues (or eigenphases) with the matching orthonormal eigenvectors.
///
/// `vectors` holds eigenvector j in column j. Each column is phase-fixed so its
/// first component of modulus above 1e-10 is real and positive, which makes the
/// output deterministic. `residual` is max_j |M v_j - lambda_j v_j| measured
/// against the input matrix.
struct EigenDecomposition {
  std::vector<double> values;
  ComplexMatrix vectors;
  double residual = 0.0;
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
/// Values come back ascending. Throws std::invalid_argument for non-square
/// input and std::domain_error when max|M - M^dagger| exceeds `hermitian_tol`
/// or the sweeps fail to converge.
EigenDecomposition hermitian_eig(const ComplexMatrix& m,
                                 double hermitian_tol = kHermitianTolerance);

/// Eigenphases theta in (-pi, pi] of a unitary matrix, ascending, with
/// U v = e^{i theta} v.
///
/// Works through the commuting Hermitian parts (U + U^dagger)/2 and
/// (U - U^dagger)/(2i): the first is diagonalized, and each cluster of its
/// eigenvalues closer than `cluster_tol` is resolved by diagonalizing the
/// second inside the cluster subspace.
EigenDecomposition unitary_eigenphases(const ComplexMatrix& u,
                                       double unitary_tol = kUnitaryTolerance,
                                       double cluster_tol = 1e-8);

/// exp(-i H t) for Hermitian H, through its eigendecomposition.
ComplexMatrix evolve(const ComplexMatrix& h, double t);

}  // namespace floqlat
