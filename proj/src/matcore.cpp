#include "dualnorm/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dualnorm/errors.hpp"

namespace dualnorm {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) +
                                "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
  }
}

void require_square(const CMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw std::invalid_argument(std::string(op) + ": matrix must be square");
  }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw std::invalid_argument("CMatrix: expected " + std::to_string(rows * cols) +
                                " entries, got " + std::to_string(entries_.size()));
  }
  for (const Complex& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("CMatrix: non-finite entry");
    }
  }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("CMatrix: ragged initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> values) {
  CMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> values) {
  CMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

CMatrix CMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex scalar) {
  for (Complex& z : entries_) z *= scalar;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product: inner dimensions differ");
  }
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

bool operator==(const CMatrix& a, const CMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

CMatrix adjoint(const CMatrix& a) {
  CMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

Complex trace(const CMatrix& a) {
  require_square(a, "trace");
  Complex t(0.0, 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double hs_norm(const CMatrix& a) {
  // Scaled sum of squares, as in LAPACK's xLASSQ.
  double scale = 0.0;
  double ssq = 1.0;
  auto update = [&](double x) {
    if (x == 0.0) return;
    const double ax = std::abs(x);
    if (scale < ax) {
      ssq = 1.0 + ssq * (scale / ax) * (scale / ax);
      scale = ax;
    } else {
      ssq += (ax / scale) * (ax / scale);
    }
  };
  for (const Complex& z : a.entries()) {
    update(z.real());
    update(z.imag());
  }
  return scale * std::sqrt(ssq);
}

double hermitian_defect(const CMatrix& a) {
  require_square(a, "hermitian_defect");
  double d = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - std::conj(a(j, i))));
  return d;
}

std::vector<double> singular_values(const CMatrix& a) { return svd(a).sigma; }

PolarResult polar(const CMatrix& a) {
  require_square(a, "polar");
  const SvdResult s = svd(a);
  const CMatrix v = adjoint(s.vstar);
  CMatrix sv = v;
  for (std::size_t i = 0; i < sv.rows(); ++i)
    for (std::size_t j = 0; j < sv.cols(); ++j) sv(i, j) *= s.sigma[j];
  return PolarResult{s.u * s.vstar, sv * s.vstar};
}

CMatrix matabs(const CMatrix& a) {
  require_square(a, "matabs");
  return polar(a).absval;
}

CMatrix psd_power(const CMatrix& a, Complex w) {
  require_square(a, "psd_power");
  const double scale = std::max(1.0, hs_norm(a));
  const double tol_fact = 1e-12 * scale;
  if (hermitian_defect(a) > tol_fact) {
    throw DomainError("psd_power: input is not Hermitian");
  }
  const HermitianEigen eig = hermitian_eigen(a);
  const double top = eig.values.empty() ? 0.0 : std::max(0.0, eig.values.back());
  if (!eig.values.empty() && eig.values.front() < -tol_fact) {
    throw DomainError("psd_power: input is not positive semidefinite (min eigenvalue " +
                      std::to_string(eig.values.front()) + ")");
  }
  const double cutoff = 1e-12 * top;
  const std::size_t n = a.rows();
  std::vector<Complex> mapped(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = eig.values[k];
    mapped[k] = (lambda <= cutoff || lambda <= 0.0) ? Complex(0.0) : std::exp(w * std::log(lambda));
  }
  CMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc(0.0);
      for (std::size_t k = 0; k < n; ++k) {
        if (mapped[k] == Complex(0.0)) continue;
        acc += eig.vectors(i, k) * mapped[k] * std::conj(eig.vectors(j, k));
      }
      r(i, j) = acc;
    }
  }
  return r;
}

double schatten_norm(const CMatrix& a, ExponentP p) {
  const std::vector<double> sigma = singular_values(a);
  if (sigma.empty()) return 0.0;
  const double top = sigma.front();
  if (p.is_infinite() || top == 0.0) return top;
  const double pv = p.value();
  double acc = 0.0;
  for (double s : sigma) acc += std::pow(s / top, pv);
  return top * std::pow(acc, 1.0 / pv);
}

double operator_norm(const CMatrix& a) { return schatten_norm(a, ExponentP::infinity()); }

double trace_pow_product(const CMatrix& a, const CMatrix& b, double s) {
  require_square(a, "trace_pow_product");
  const CMatrix root = psd_power(a, 0.5);
  CMatrix m = root * b * root;
  // Symmetrize away rounding so the Hermitian solver sees an exact Hermitian input.
  m = 0.5 * (m + adjoint(m));
  const HermitianEigen eig = hermitian_eigen(m);
  const double top = eig.values.empty() ? 0.0 : std::max(0.0, eig.values.back());
  double acc = 0.0;
  for (double lambda : eig.values) {
    if (lambda > 1e-12 * top && lambda > 0.0) acc += std::pow(lambda, s);
  }
  return acc;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double d = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) d = std::max(d, std::abs(a.entries()[k] - b.entries()[k]));
  return d;
}

}  // namespace dualnorm
