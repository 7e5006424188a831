#pragma once

// Reference computations that share no code with the library: extended
// precision, characteristic polynomials and direct enumeration.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "dualnorm/matcore.hpp"

namespace oracle {

using LComplex = std::complex<long double>;
using LMat = std::vector<std::vector<LComplex>>;

inline LMat lift(const dualnorm::CMatrix& a) {
  LMat m(a.rows(), std::vector<LComplex>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = LComplex(a(i, j).real(), a(i, j).imag());
  return m;
}

inline LMat mul(const LMat& a, const LMat& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  LMat c(n, std::vector<LComplex>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

inline LMat adj(const LMat& a) {
  LMat c(a.empty() ? 0 : a[0].size(), std::vector<LComplex>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) c[j][i] = std::conj(a[i][j]);
  return c;
}

inline LComplex tr(const LMat& a) {
  LComplex t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

// Faddeev-LeVerrier: coefficients c[0..n] of det(xI - A), c[n] = 1.
inline std::vector<LComplex> char_poly(const LMat& a) {
  const std::size_t n = a.size();
  std::vector<LComplex> c(n + 1);
  c[n] = 1;
  LMat m(n, std::vector<LComplex>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    LMat am = mul(a, m);
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = am;
    c[n - k] = -tr(mul(a, m)) / static_cast<long double>(k);
  }
  return c;
}

inline LComplex poly_eval(const std::vector<LComplex>& c, LComplex x) {
  LComplex v = 0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
  return v;
}

// Durand-Kerner iteration for all roots of a monic polynomial.
inline std::vector<LComplex> roots(const std::vector<LComplex>& c) {
  const std::size_t n = c.size() - 1;
  long double bound = 1;
  for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, 1 + std::abs(c[k]));
  std::vector<LComplex> z(n);
  const LComplex seed(0.4L, 0.9L);
  LComplex w = 1;
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = w * bound;
    w *= seed;
  }
  for (int it = 0; it < 5000; ++it) {
    long double change = 0;
    for (std::size_t k = 0; k < n; ++k) {
      LComplex den = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) den *= (z[k] - z[j]);
      const LComplex step = poly_eval(c, z[k]) / den;
      z[k] -= step;
      change = std::max(change, std::abs(step) / std::max<long double>(1, std::abs(z[k])));
    }
    if (change < 1e-19L) break;
  }
  return z;
}

// Eigenvalues of a matrix known to have a real non-negative spectrum (A*A,
// or a product of two PSD matrices), descending.
inline std::vector<long double> real_spectrum(const LMat& a) {
  std::vector<long double> ev;
  for (const LComplex& z : roots(char_poly(a))) ev.push_back(std::max<long double>(0, z.real()));
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

inline std::vector<double> singular_values_ref(const dualnorm::CMatrix& a) {
  // The smaller Gram matrix: the larger one only adds zero eigenvalues,
  // which the root finder returns as noise.
  const LMat m = lift(a);
  const LMat g = a.rows() < a.cols() ? mul(m, adj(m)) : mul(adj(m), m);
  std::vector<double> s;
  for (long double l : real_spectrum(g)) s.push_back(static_cast<double>(std::sqrt(l)));
  return s;
}

// Tr((A*A)^k), k a positive integer: the Schatten 2k-norm to the power 2k.
inline long double trace_gram_power(const dualnorm::CMatrix& a, int k) {
  const LMat m = lift(a);
  const LMat g = mul(adj(m), m);
  LMat acc = g;
  for (int i = 1; i < k; ++i) acc = mul(acc, g);
  return tr(acc).real();
}

// Schatten norm from the characteristic-polynomial spectrum of A*A.
inline double schatten(const dualnorm::CMatrix& a, double p) {
  const std::vector<double> s = singular_values_ref(a);
  if (std::isinf(p)) return s.empty() ? 0.0 : s.front();
  long double acc = 0;
  for (double x : s) acc += std::pow(static_cast<long double>(x), static_cast<long double>(p));
  return static_cast<double>(std::pow(acc, 1.0L / p));
}

// Tr((AB)^s) from the spectrum of AB.
inline double trace_pow_product(const dualnorm::CMatrix& a, const dualnorm::CMatrix& b, double s) {
  long double acc = 0;
  for (long double l : real_spectrum(mul(lift(a), lift(b)))) acc += std::pow(l, static_cast<long double>(s));
  return static_cast<double>(acc);
}

// Mean over all sign vectors of norm(sum theta_j x_j)^r, enumerated by a
// Gray code so consecutive patterns differ in one sign.
// axpy(acc, x, c) must perform acc += c * x.
template <class Vec, class Norm, class Axpy>
double sign_average(const std::vector<Vec>& xs, double r, Norm norm, Axpy axpy, std::uint64_t* patterns = nullptr) {
  const std::size_t n = xs.size();
  if (n == 0) return 0.0;
  Vec sum = xs[0];
  for (std::size_t j = 1; j < n; ++j) axpy(sum, xs[j], 1.0);
  std::vector<int> sign(n, 1);
  long double acc = std::pow(static_cast<long double>(norm(sum)), static_cast<long double>(r));
  std::uint64_t count = 1;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t g = 1; g < total; ++g) {
    std::size_t bit = 0;
    while (!((g >> bit) & 1U)) ++bit;
    axpy(sum, xs[bit], -2.0 * sign[bit]);
    sign[bit] = -sign[bit];
    acc += std::pow(static_cast<long double>(norm(sum)), static_cast<long double>(r));
    ++count;
  }
  if (patterns) *patterns = count;
  return static_cast<double>(std::pow(acc / count, 1.0L / r));
}

}  // namespace oracle
