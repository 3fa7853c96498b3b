#pragma once

// Dense complex linear algebra for the small matrices used throughout:
// 7x7 Lax/RH objects and the N x N (or 2N x 2N) soliton Gram matrix.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "tccss/types.hpp"

namespace tccss {

/// Row-major dense complex matrix. Entries are finite on construction.
class ComplexMatrix {
public:
  /// rows x cols matrix of zeros.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Adopts `entries` (row-major); throws SizingError / NonFiniteError.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  /// max |a_ij|
  double max_abs() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex s);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// a*b - b*a
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix-vector product for 7x7 operands.
Vec7 apply(const ComplexMatrix& a, const Vec7& v);
/// Row-vector times matrix for 7x7 operands.
Vec7 apply_left(const Vec7& row, const ComplexMatrix& a);

/// Packed LU factors of a square matrix with row permutation (partial pivoting).
struct LuFactors {
  ComplexMatrix lu;                // unit-lower L below the diagonal, U on and above
  std::vector<std::size_t> perm;   // row i of PA is row perm[i] of A
  int sign = 1;                    // permutation parity
  double scale = 0.0;              // ||A||_max, reference for the singularity test
  bool singular = false;
  std::size_t singular_pivot = 0;  // first pivot that failed the relative test
};

/// Relative pivot threshold: |pivot| < kSingularPivot * ||A||_max is singular.
inline constexpr double kSingularPivot = 1e-14;

/// Factors without throwing; `singular` is set if a pivot fails the test.
LuFactors lu_factor(const ComplexMatrix& a);

/// Solves A X = B by LU with partial pivoting. Throws SingularMatrixError.
ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix lu_solve(const LuFactors& f, const ComplexMatrix& b);
std::vector<Complex> lu_solve(const LuFactors& f, std::span<const Complex> b);

/// Determinant as signed product of LU pivots (near-singular input returns ~0).
Complex det(const ComplexMatrix& a);

/// Pivot moduli of Gaussian elimination with complete pivoting, in
/// elimination order (non-increasing for well-behaved input). Used as a
/// cheap rank probe.
std::vector<double> complete_pivot_moduli(const ComplexMatrix& a);

}  // namespace tccss
