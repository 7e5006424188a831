#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dualnorm/errors.hpp"
#include "dualnorm/matcore.hpp"

namespace dualnorm {

namespace {

constexpr double kOrthTol = 1e-15;

// Column-oriented work array: col[j] holds column j of the matrix.
using Columns = std::vector<std::vector<Complex>>;

Columns to_columns(const CMatrix& a) {
  Columns c(a.cols(), std::vector<Complex>(a.rows()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c[j][i] = a(i, j);
  return c;
}

double sq_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return s;
}

Complex inner(const std::vector<Complex>& x, const std::vector<Complex>& y) {
  Complex s(0.0);
  for (std::size_t k = 0; k < x.size(); ++k) s += std::conj(x[k]) * y[k];
  return s;
}

// Rotates columns i, j of w (and of v alongside) so that they become orthogonal.
void rotate_pair(std::vector<Complex>& wi, std::vector<Complex>& wj, std::vector<Complex>& vi,
                 std::vector<Complex>& vj, double alpha, double beta, Complex gamma) {
  const double mag = std::abs(gamma);
  const Complex phase = std::conj(gamma / mag);
  const double zeta = (beta - alpha) / (2.0 * mag);
  const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = c * t;
  for (std::size_t k = 0; k < wi.size(); ++k) {
    const Complex a = wi[k];
    const Complex b = wj[k] * phase;
    wi[k] = c * a - s * b;
    wj[k] = s * a + c * b;
  }
  for (std::size_t k = 0; k < vi.size(); ++k) {
    const Complex a = vi[k];
    const Complex b = vj[k] * phase;
    vi[k] = c * a - s * b;
    vj[k] = s * a + c * b;
  }
}

// Tall (rows >= cols) case.
SvdResult svd_tall(const CMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Columns w = to_columns(a);
  Columns v(n, std::vector<Complex>(n, Complex(0.0)));
  for (std::size_t j = 0; j < n; ++j) v[j][j] = 1.0;

  const double total = hs_norm(a);
  const double floor = std::max(1e-300, 1e-30 * total * total);
  const std::size_t max_sweeps = 100 * std::max<std::size_t>(n, 1);
  bool converged = n < 2;
  for (std::size_t sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double alpha = sq_norm(w[i]);
        const double beta = sq_norm(w[j]);
        const Complex gamma = inner(w[i], w[j]);
        if (std::abs(gamma) <= kOrthTol * std::sqrt(alpha * beta) || std::abs(gamma) <= floor) continue;
        rotate_pair(w[i], w[j], v[i], v[j], alpha, beta, gamma);
        rotated = true;
      }
    }
    converged = !rotated;
  }
  if (!converged) {
    throw FactorizationError("svd: no convergence within " + std::to_string(max_sweeps) + " sweeps");
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(sq_norm(w[j]));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  const double top = n == 0 ? 0.0 : sigma[order[0]];
  const double negligible = static_cast<double>(std::max(m, n)) * 2.220446049250313e-16 * top;

  SvdResult r{CMatrix(m, n), std::vector<double>(n), CMatrix(n, n)};
  Columns ucols;
  std::vector<bool> needs_fill(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    r.sigma[k] = sigma[j];
    std::vector<Complex> u(m, Complex(0.0));
    if (sigma[j] > negligible && sigma[j] > 0.0) {
      for (std::size_t i = 0; i < m; ++i) u[i] = w[j][i] / sigma[j];
    } else {
      needs_fill[k] = true;
    }
    ucols.push_back(std::move(u));
    for (std::size_t i = 0; i < n; ++i) r.vstar(k, i) = std::conj(v[j][i]);
  }

  // Complete the columns attached to negligible singular values with an
  // orthonormal set, Gram-Schmidt against the standard basis.
  std::size_t basis = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (!needs_fill[k]) continue;
    for (; basis < m; ++basis) {
      std::vector<Complex> cand(m, Complex(0.0));
      cand[basis] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t o = 0; o < n; ++o) {
          if (o == k || (needs_fill[o] && o > k)) continue;
          const Complex proj = inner(ucols[o], cand);
          for (std::size_t i = 0; i < m; ++i) cand[i] -= proj * ucols[o][i];
        }
      }
      const double len = std::sqrt(sq_norm(cand));
      if (len > 0.5) {
        for (Complex& z : cand) z /= len;
        ucols[k] = std::move(cand);
        ++basis;
        break;
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < m; ++i) r.u(i, k) = ucols[k][i];
  return r;
}

}  // namespace

SvdResult svd(const CMatrix& a) {
  if (a.rows() >= a.cols()) return svd_tall(a);
  // Wide input: factor the adjoint and swap the roles of u and vstar.
  SvdResult t = svd_tall(adjoint(a));
  return SvdResult{adjoint(t.vstar), std::move(t.sigma), adjoint(t.u)};
}

}  // namespace dualnorm
