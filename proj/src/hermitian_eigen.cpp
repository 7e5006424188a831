#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dualnorm/errors.hpp"
#include "dualnorm/matcore.hpp"

namespace dualnorm {

HermitianEigen hermitian_eigen(const CMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("hermitian_eigen: matrix must be square");
  const std::size_t n = input.rows();
  const double scale = std::max(1.0, hs_norm(input));
  if (hermitian_defect(input) > 1e-12 * scale) {
    throw DomainError("hermitian_eigen: input is not Hermitian");
  }
  CMatrix a = 0.5 * (input + adjoint(input));
  CMatrix v = CMatrix::identity(n);
  const double eps = 2.220446049250313e-16;
  // Entries this small relative to the whole matrix no longer move any eigenvalue.
  const double floor = std::max(1e-300, 1e-20 * hs_norm(a));

  const std::size_t max_sweeps = 100 * std::max<std::size_t>(n, 1);
  bool converged = n < 2;
  for (std::size_t sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        if (mag <= floor || mag <= 0.5 * eps * std::sqrt(std::abs(app) * std::abs(aqq))) {
          continue;
        }
        // With D = diag(1, conj(e)) the pivot block becomes real symmetric;
        // J is then the classical real Jacobi rotation. Q = D J.
        const Complex e = apq / mag;
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex qpp = c;
        const Complex qpq = s;
        const Complex qqp = -s * std::conj(e);
        const Complex qqq = c * std::conj(e);

        // a <- a Q (columns p, q)
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * qpp + akq * qqp;
          a(k, q) = akp * qpq + akq * qqq;
        }
        // a <- Q^H a (rows p, q)
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(qpp) * apk + std::conj(qqp) * aqk;
          a(q, k) = std::conj(qpq) * apk + std::conj(qqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * qpp + vkq * qqp;
          v(k, q) = vkp * qpq + vkq * qqq;
        }
        rotated = true;
      }
    }
    converged = !rotated;
  }
  if (!converged) {
    throw FactorizationError("hermitian_eigen: no convergence within " + std::to_string(max_sweeps) +
                             " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  HermitianEigen r{std::vector<double>(n), CMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    r.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) r.vectors(i, k) = v(i, order[k]);
  }
  return r;
}

}  // namespace dualnorm
