#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "dualnorm/exponent.hpp"

namespace dualnorm {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Entries supplied at construction must be
/// finite; arithmetic results are not re-validated.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix zero(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }
  static CMatrix diagonal(std::span<const double> values);
  static CMatrix diagonal(std::span<const Complex> values);
  static CMatrix diagonal(std::initializer_list<double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Complex> entries() const { return entries_; }
  std::span<Complex> entries() { return entries_; }

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex scalar);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator-(CMatrix a) { return a *= Complex(-1.0); }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  /// Exact entrywise equality (bit-level for finite values).
  friend bool operator==(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Thin SVD A = u · diag(sigma) · vstar with k = min(rows, cols); sigma is
/// sorted non-increasing. For square input u and vstar are unitary.
struct SvdResult {
  CMatrix u;
  std::vector<double> sigma;
  CMatrix vstar;
};

/// A = u · absval with u unitary and absval = (A*A)^{1/2}. For rank-deficient
/// A, u is the unitary completion of the partial isometry.
struct PolarResult {
  CMatrix u;
  CMatrix absval;
};

/// Spectral decomposition A = vectors · diag(values) · vectors* of a Hermitian
/// matrix; values ascending.
struct HermitianEigen {
  std::vector<double> values;
  CMatrix vectors;
};

CMatrix adjoint(const CMatrix& a);
Complex trace(const CMatrix& a);
double hs_norm(const CMatrix& a);
/// Largest |a_ij - conj(a_ji)|.
double hermitian_defect(const CMatrix& a);

/// One-sided (Hestenes) Jacobi. Throws FactorizationError past the sweep cap.
SvdResult svd(const CMatrix& a);
std::vector<double> singular_values(const CMatrix& a);

/// Cyclic complex Jacobi. Throws DomainError for non-Hermitian input.
HermitianEigen hermitian_eigen(const CMatrix& a);

PolarResult polar(const CMatrix& a);
CMatrix matabs(const CMatrix& a);

/// a^w for Hermitian PSD a through the spectral calculus λ ↦ exp(w ln λ).
/// Eigenvalues at or below 1e-12·(largest eigenvalue) map to 0.
CMatrix psd_power(const CMatrix& a, Complex w);

double schatten_norm(const CMatrix& a, ExponentP p);
double operator_norm(const CMatrix& a);

/// Tr((AB)^s) for Hermitian PSD a, b, evaluated through the PSD matrix
/// a^{1/2} b a^{1/2}, which has the same spectrum as AB.
double trace_pow_product(const CMatrix& a, const CMatrix& b, double s);

/// Largest |entry| of a - b; shapes must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

}  // namespace dualnorm
