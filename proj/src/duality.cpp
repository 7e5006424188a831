#include "dualnorm/duality.hpp"

#include <algorithm>
#include <cmath>

#include "dualnorm/errors.hpp"
#include "dualnorm/seed.hpp"

namespace dualnorm {

Complex pairing(const Field& h, const Field& f) {
  require_same_model(h, f);
  Complex acc(0.0);
  for (std::size_t i = 0; i < h.size(); ++i) {
    const CMatrix& a = h.block(i);
    const CMatrix& b = f.block(i);
    // Tr(AB) without forming the product.
    Complex t(0.0);
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t k = 0; k < a.cols(); ++k) t += a(r, k) * b(k, r);
    acc += static_cast<double>(h.model().dim(i)) * t;
  }
  return acc;
}

Field dual_extremizer(const Field& h, ExponentP p) {
  if (p.is_infinite()) throw DomainError("dual_extremizer needs a finite exponent");
  const double norm = lp_sch_norm(h, p);
  if (norm == 0.0) throw DomainError("dual_extremizer of the zero field");
  const double e = p.value() - 1.0;
  // With H = W S V*, |H|^{p-1} U* = V S^{p-1} W*.
  return field_map(h, [&](const CMatrix& b) {
    const SvdResult s = svd(b);
    CMatrix v = adjoint(s.vstar);
    for (std::size_t k = 0; k < s.sigma.size(); ++k) {
      const double scale = e == 0.0 ? 1.0 : std::pow(s.sigma[k] / norm, e);
      for (std::size_t i = 0; i < v.rows(); ++i) v(i, k) *= scale;
    }
    return v * adjoint(s.u);
  });
}

double dual_norm_via_search(const Field& h, ExponentP p, int trials, std::uint64_t seed, bool include_extremizer) {
  if (trials < 0 || (trials == 0 && !include_extremizer)) {
    throw DomainError("dual_norm_via_search needs at least one trial");
  }
  const ExponentP q = p.conjugate();
  double best = 0.0;
  if (include_extremizer && lp_sch_norm(h, p) > 0.0 && p.is_finite()) {
    best = std::abs(pairing(h, dual_extremizer(h, p)));
  }
  for (int k = 0; k < trials; ++k) {
    const Field g = random_field(h.model_ptr(), mix_seed(seed, "dual_search", static_cast<std::uint64_t>(k)));
    const double n = lp_sch_norm(g, q);
    best = std::max(best, std::abs(pairing(h, g)) / n);
  }
  return best;
}

CheckReport pairing_bound_check(const Field& h, const Field& f, ExponentP p, double tol_rel) {
  const double lhs = std::abs(pairing(h, f));
  const double rhs = lp_sch_norm(h, p) * lp_sch_norm(f, p.conjugate());
  return inequality_report("pairing_holder", p.value(), lhs, rhs, tol_rel, Digest().add(h).add(f).add(p).hex());
}

CheckReport extremizer_check(const Field& h, ExponentP p, double tol_rel) {
  const Field f = dual_extremizer(h, p);
  const double norm = lp_sch_norm(h, p);
  const Complex pr = pairing(h, f);
  const double fnorm = lp_sch_norm(f, p.conjugate());
  CheckReport r = equality_report("duality_extremizer", p.value(), pr.real(), norm, tol_rel,
                                  Digest().add(h).add(p).hex());
  const double dev = std::max(std::abs(pr - Complex(norm)), norm * std::abs(fnorm - 1.0));
  r.slack = 0.0 - dev;
  // Relative in ||H||: the saturation statement is scale-free.
  r.tol = tol_rel * norm;
  r.passed = r.slack >= -r.tol;
  return r;
}

CheckReport direct_sum_dual_pair_check(const Field& h1, const Field& h2, const Field& f1, const Field& f2,
                                       ExponentP p, const DirectSumSpec& spec, double tol_rel) {
  if (!p.is_finite() || p.value() <= 1.0 || !spec.r.is_finite() || spec.r.value() <= 1.0) {
    throw DomainError("direct-sum duality needs 1 < p, r < inf");
  }
  const ExponentP q = p.conjugate();
  const ExponentP s = spec.r.conjugate();
  const double coupling = std::pow(spec.w, spec.r.reciprocal() - s.reciprocal());
  const double lhs = std::abs(pairing(h1, f1) + coupling * pairing(h2, f2));
  const double rhs = direct_sum_norm(f1, f2, q, DirectSumSpec(s, 1.0 / spec.w), Family::sch) *
                     direct_sum_norm(h1, h2, p, spec, Family::sch);
  return inequality_report("direct_sum_duality", p.value(), lhs, rhs, tol_rel,
                           Digest().add(h1).add(h2).add(f1).add(f2).add(p).add(spec.r).add(spec.w).hex());
}

std::pair<Field, Field> direct_sum_saturator(const Field& h1, const Field& h2, ExponentP p, const DirectSumSpec& spec) {
  const double r = spec.r.value();
  const double s = spec.r.conjugate().value();
  const double a = lp_sch_norm(h1, p);
  const double b = lp_sch_norm(h2, p);
  const double n = direct_sum_combine(a, b, spec);
  if (n == 0.0) throw DomainError("direct_sum_saturator of the zero pair");
  auto part = [&](const Field& h, double norm, double weight) {
    if (norm == 0.0) return zero_field(h.model_ptr());
    return field_scale(dual_extremizer(h, p), weight * std::pow(norm / n, r - 1.0));
  };
  return {part(h1, a, 1.0), part(h2, b, std::pow(spec.w, 2.0 / s))};
}

CheckReport trace_cyclicity_check(const CMatrix& a, const CMatrix& b, double s, double tol_rel) {
  const double ab = trace_pow_product(a, b, s);
  const double ba = trace_pow_product(b, a, s);
  CheckReport r = equality_report("trace_cyclicity", s, ab, ba, tol_rel, Digest().add(a).add(b).add(s).hex());
  r.tol = tol_rel * std::max(std::abs(ab), std::abs(ba));
  r.passed = r.slack >= -r.tol;
  return r;
}

}  // namespace dualnorm
