#include "floqlat/numerics/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace floqlat {
namespace {

constexpr double kOffDiagonalThreshold = 1e-13;
constexpr int kMaxSweeps = 100;
constexpr double kPhaseFixThreshold = 1e-10;
constexpr double kNegligible = 1e-280;

double frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& x : a.data()) s += std::norm(x);
  return std::sqrt(s);
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Columns reordered by ascending value (stable), then phase-fixed.
void sort_and_fix(std::vector<double>& values, ComplexMatrix& vectors) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> sorted(n);
  ComplexMatrix out(vectors.rows(), n);
  for (std::size_t j = 0; j < n; ++j) {
    sorted[j] = values[order[j]];
    Complex phase{1.0, 0.0};
    for (std::size_t r = 0; r < vectors.rows(); ++r) {
      const Complex c = vectors(r, order[j]);
      if (std::abs(c) > kPhaseFixThreshold) {
        phase = std::conj(c) / std::abs(c);
        break;
      }
    }
    for (std::size_t r = 0; r < vectors.rows(); ++r) out(r, j) = vectors(r, order[j]) * phase;
  }
  values = std::move(sorted);
  vectors = std::move(out);
}

double residual_of(const ComplexMatrix& m, const std::vector<Complex>& eigenvalues,
                   const ComplexMatrix& vectors) {
  double worst = 0.0;
  for (std::size_t j = 0; j < vectors.cols(); ++j) {
    const auto v = vectors.column(j);
    const auto mv = m * std::span<const Complex>(v);
    double s = 0.0;
    for (std::size_t r = 0; r < v.size(); ++r) s += std::norm(mv[r] - eigenvalues[j] * v[r]);
    worst = std::max(worst, std::sqrt(s));
  }
  return worst;
}

// In-place cyclic Jacobi on an exactly Hermitian copy; returns diagonal values.
// `vt` accumulates the conjugated eigenvectors as rows so every update runs along
// contiguous memory; rows p, q of `a` are rotated and mirrored into columns.
std::vector<double> jacobi(ComplexMatrix& a, ComplexMatrix& vt) {
  const std::size_t n = a.rows();
  const double scale = std::max(1.0, frobenius(a));
  Complex* ad = a.data().data();
  Complex* vd = vt.data().data();
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= kOffDiagonalThreshold * scale) {
      std::vector<double> values(n);
      for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real();
      return values;
    }
    if (sweep == kMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g < kNegligible) {
          // Dividing by a subnormal modulus would give |e| != 1.
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        Complex e = apq / g;  // e^{i phi}
        e /= std::abs(e);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // A' = J^dagger A J with J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on (p, q).
        Complex* rp = ad + p * n;
        Complex* rq = ad + q * n;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Complex apk = rp[k];
          const Complex aqk = rq[k];
          rp[k] = c * apk - s * e * aqk;
          rq[k] = s * apk + c * e * aqk;
          ad[k * n + p] = std::conj(rp[k]);
          ad[k * n + q] = std::conj(rq[k]);
        }
        a(p, p) = app - t * g;
        a(q, q) = aqq + t * g;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        Complex* vp = vd + p * n;
        Complex* vq = vd + q * n;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = vp[k];
          const Complex vkq = vq[k];
          vp[k] = c * vkp - s * e * vkq;
          vq[k] = s * vkp + c * e * vkq;
        }
      }
    }
  }
  throw std::domain_error("hermitian_eig: Jacobi sweeps did not converge");
}

// Raw (unsorted) diagonalization: values plus vectors.
std::pair<std::vector<double>, ComplexMatrix> diagonalize(const ComplexMatrix& m) {
  ComplexMatrix a = m;
  // Exact Hermitian symmetrization removes the tolerated asymmetry.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  ComplexMatrix vt = ComplexMatrix::identity(a.rows());
  auto values = jacobi(a, vt);
  // Rows of vt hold conj of the eigenvector columns.
  return {std::move(values), vt.adjoint()};
}

ComplexMatrix select_columns(const ComplexMatrix& m, std::size_t begin, std::size_t end) {
  ComplexMatrix out(m.rows(), end - begin);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = begin; c < end; ++c) out(r, c - begin) = m(r, c);
  return out;
}

void write_columns(ComplexMatrix& m, std::size_t begin, const ComplexMatrix& block) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c) m(r, begin + c) = block(r, c);
}

// Rotates the columns of `basis` so they diagonalize `op` restricted to their span.
// Returns the sorted restricted eigenvalues.
std::vector<double> rotate_within(ComplexMatrix& basis, const ComplexMatrix& op) {
  const ComplexMatrix restricted = basis.adjoint() * op * basis;
  auto [values, w] = diagonalize(restricted);
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  ComplexMatrix w_sorted(w.rows(), w.cols());
  std::vector<double> sorted(values.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    sorted[j] = values[order[j]];
    for (std::size_t r = 0; r < w.rows(); ++r) w_sorted(r, j) = w(r, order[j]);
  }
  basis = basis * w_sorted;
  return sorted;
}

template <typename Fn>
void for_each_cluster(const std::vector<double>& sorted, double tol, Fn&& fn) {
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i == sorted.size() || sorted[i] - sorted[i - 1] > tol) {
      if (i - begin > 1) fn(begin, i);
      begin = i;
    }
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m, double hermitian_tol) {
  if (!m.square()) throw std::invalid_argument("hermitian_eig: matrix is not square");
  const double herr = hermiticity_error(m);
  if (herr > hermitian_tol)
    throw std::domain_error("hermitian_eig: matrix is not Hermitian (max|M - M^dagger| = " +
                            std::to_string(herr) + ")");
  auto [values, vectors] = diagonalize(m);
  sort_and_fix(values, vectors);
  EigenDecomposition out;
  out.residual = residual_of(m, std::vector<Complex>(values.begin(), values.end()), vectors);
  out.values = std::move(values);
  out.vectors = std::move(vectors);
  return out;
}

EigenDecomposition unitary_eigenphases(const ComplexMatrix& u, double unitary_tol,
                                       double cluster_tol) {
  if (!u.square()) throw std::invalid_argument("unitary_eigenphases: matrix is not square");
  const double uerr = unitarity_error(u);
  if (uerr > unitary_tol)
    throw std::domain_error("unitary_eigenphases: matrix is not unitary (max|U^dagger U - I| = " +
                            std::to_string(uerr) + ")");

  const ComplexMatrix ud = u.adjoint();
  const ComplexMatrix re_part = Complex{0.5, 0.0} * (u + ud);
  const ComplexMatrix im_part = Complex{0.0, -0.5} * (u - ud);

  auto [cosines, vectors] = diagonalize(re_part);
  {
    // Sort by cosine so clusters are contiguous.
    std::vector<double> c = cosines;
    ComplexMatrix v = vectors;
    std::vector<std::size_t> order(c.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return c[a] < c[b]; });
    for (std::size_t j = 0; j < order.size(); ++j) {
      cosines[j] = c[order[j]];
      for (std::size_t r = 0; r < v.rows(); ++r) vectors(r, j) = v(r, order[j]);
    }
  }

  for_each_cluster(cosines, cluster_tol, [&](std::size_t begin, std::size_t end) {
    ComplexMatrix block = select_columns(vectors, begin, end);
    const auto sines = rotate_within(block, im_part);
    // Equal sines inside an equal-cosine cluster: settle the cosine ordering again.
    for_each_cluster(sines, 1e-10, [&](std::size_t b2, std::size_t e2) {
      ComplexMatrix sub = select_columns(block, b2, e2);
      rotate_within(sub, re_part);
      write_columns(block, b2, sub);
    });
    write_columns(vectors, begin, block);
  });

  const std::size_t n = u.rows();
  std::vector<double> phases(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto v = vectors.column(j);
    const auto uv = u * std::span<const Complex>(v);
    Complex rq{0.0, 0.0};
    for (std::size_t r = 0; r < n; ++r) rq += std::conj(v[r]) * uv[r];
    double theta = std::arg(rq);
    if (theta <= -std::numbers::pi) theta = std::numbers::pi;
    phases[j] = theta;
  }
  sort_and_fix(phases, vectors);

  std::vector<Complex> eig(n);
  for (std::size_t j = 0; j < n; ++j) eig[j] = std::polar(1.0, phases[j]);
  EigenDecomposition out;
  out.residual = residual_of(u, eig, vectors);
  out.values = std::move(phases);
  out.vectors = std::move(vectors);
  return out;
}

ComplexMatrix evolve(const ComplexMatrix& h, double t) {
  const auto eig = hermitian_eig(h);
  std::vector<Complex> phases(eig.values.size());
  for (std::size_t j = 0; j < phases.size(); ++j) phases[j] = std::polar(1.0, -eig.values[j] * t);
  return eig.vectors * ComplexMatrix::diagonal(phases) * eig.vectors.adjoint();
}

}  // namespace floqlat
