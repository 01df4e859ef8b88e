#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace floqlat {

using Complex = std::complex<double>;

/// Dense complex matrix stored row-major.
///
/// Every operator in the library (step Hamiltonians, Floquet operators,
/// staggered derivatives, chain Hamiltonians and their tensor products) is a
/// value of this type. Dimensions never exceed a few hundred, so there is no
/// sparse path.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Row-major nested initializer, e.g. {{0, 1}, {1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> data() const { return data_; }
  std::span<Complex> data() { return data_; }

  /// Column c copied into a vector.
  std::vector<Complex> column(std::size_t c) const;

  ComplexMatrix adjoint() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
std::vector<Complex> operator*(const ComplexMatrix& a, std::span<const Complex> v);

/// Kronecker product, dimension (rA*rB) x (cA*cB).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |A - A^dagger|, entrywise.
double hermiticity_error(const ComplexMatrix& a);
/// max |U^dagger U - I|, entrywise.
double unitarity_error(const ComplexMatrix& u);

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kUnitaryTolerance = 1e-10;

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
ComplexMatrix plus();   // (x + i y) / 2
ComplexMatrix minus();  // (x - i y) / 2
}  // namespace pauli

}  // namespace floqlat
