#include "dualnorm/interpolation.hpp"

#include <algorithm>
#include <cmath>

#include "dualnorm/duality.hpp"
#include "dualnorm/errors.hpp"
#include "dualnorm/norms.hpp"

namespace dualnorm {

InterpSpec::InterpSpec(ExponentP p0, ExponentP p1, double theta)
    : p0_(p0), p1_(p1), theta_(theta), p_(ExponentP::infinity()) {
  if (!(theta > 0.0 && theta < 1.0)) throw DomainError("interpolation parameter must lie in (0, 1)");
  if (p0.is_infinite() && p1.is_infinite()) throw DomainError("interpolation endpoints cannot both be infinite");
  p_ = ExponentP::from_reciprocal((1.0 - theta) * p0.reciprocal() + theta * p1.reciprocal());
}

InterpSpec InterpSpec::dual() const { return InterpSpec(p0_.conjugate(), p1_.conjugate(), theta_); }

Complex InterpSpec::exponent_ratio(Complex z) const {
  const double p = p_.value();
  return p * (1.0 - z) * p0_.reciprocal() + p * z * p1_.reciprocal();
}

std::vector<double> default_t_grid() {
  std::vector<double> t;
  for (int k = -4; k <= 4; ++k) t.push_back(0.5 * k);
  return t;
}

namespace {

// |B*|^{w-1} B = W S^w V* for B = W S V*.
CMatrix spectral_witness_block(const CMatrix& b, Complex w) {
  const SvdResult s = svd(b);
  const double cutoff = s.sigma.empty() ? 0.0 : 1e-12 * s.sigma.front();
  CMatrix us = s.u;
  for (std::size_t k = 0; k < s.sigma.size(); ++k) {
    const double sg = s.sigma[k];
    const Complex m = (sg <= cutoff || sg == 0.0) ? Complex(0.0) : std::exp(w * std::log(sg));
    for (std::size_t i = 0; i < us.rows(); ++i) us(i, k) *= m;
  }
  return us * s.vstar;
}

Field witness(const Field& h, const InterpSpec& spec, Complex z) {
  const double n = lp_sch_norm(h, spec.p());
  if (n == 0.0) throw DomainError("interpolation witness of the zero field");
  const Complex w = spec.exponent_ratio(z);
  const double inv = 1.0 / n;
  return field_map(h, [&](const CMatrix& b) { return spectral_witness_block(inv * b, w); });
}

Field normalized(const Field& h, ExponentP p) {
  const double n = lp_sch_norm(h, p);
  if (n == 0.0) throw DomainError("cannot normalize the zero field");
  return field_scale(h, 1.0 / n);
}

}  // namespace

Field witness_f(const Field& h, const InterpSpec& spec, Complex z) { return witness(h, spec, z); }

Field witness_g(const Field& f, const InterpSpec& spec_dual, Complex z) { return witness(f, spec_dual, z); }

Complex three_lines_value(const Field& h, const Field& f_dual, const InterpSpec& spec, Complex z) {
  return pairing(witness_f(h, spec, z), witness_g(f_dual, spec.dual(), z));
}

ThreeLinesValues three_lines_values(const Field& h, const Field& f_dual, const InterpSpec& spec,
                                    const std::vector<double>& t_grid) {
  ThreeLinesValues v;
  for (double t : t_grid) {
    v.boundary_max = std::max(v.boundary_max, std::abs(three_lines_value(h, f_dual, spec, Complex(0.0, t))));
    v.boundary_max = std::max(v.boundary_max, std::abs(three_lines_value(h, f_dual, spec, Complex(1.0, t))));
  }
  // At z = theta both witnesses reduce to their (normalized) inputs.
  v.center = std::abs(pairing(normalized(h, spec.p()), normalized(f_dual, spec.p().conjugate())));
  return v;
}

CheckReport three_lines_check(const Field& h, const Field& f_dual, const InterpSpec& spec,
                              const std::vector<double>& t_grid, double tol_rel) {
  const ThreeLinesValues v = three_lines_values(h, f_dual, spec, t_grid);
  return inequality_report("three_lines", spec.p().value(), std::max(v.boundary_max, v.center), 1.0, tol_rel,
                           Digest().add(h).add(f_dual).add(spec.p0()).add(spec.p1()).add(spec.theta()).hex());
}

double boundary_norm_defect(const Field& h, const InterpSpec& spec, const std::vector<double>& t_grid) {
  double dev = 0.0;
  for (double t : t_grid) {
    dev = std::max(dev, std::abs(lp_sch_norm(witness_f(h, spec, Complex(0.0, t)), spec.p0()) - 1.0));
    dev = std::max(dev, std::abs(lp_sch_norm(witness_f(h, spec, Complex(1.0, t)), spec.p1()) - 1.0));
  }
  return dev;
}

CheckReport interp_norm_consistency(const Field& h, const InterpSpec& spec, const std::vector<double>& t_grid,
                                    double tol_rel) {
  double upper = 0.0;
  for (double t : t_grid) {
    upper = std::max(upper, lp_sch_norm(witness_f(h, spec, Complex(0.0, t)), spec.p0()));
    upper = std::max(upper, lp_sch_norm(witness_f(h, spec, Complex(1.0, t)), spec.p1()));
  }
  const Field hn = normalized(h, spec.p());
  const double lower = std::abs(pairing(hn, dual_extremizer(hn, spec.p())));
  CheckReport r = equality_report("interpolation_equal_norms", spec.p().value(), 1.0, upper, tol_rel,
                                  Digest().add(h).add(spec.p0()).add(spec.p1()).add(spec.theta()).hex());
  r.slack = 0.0 - std::max(std::abs(upper - 1.0), std::abs(lower - 1.0));
  r.passed = r.slack >= -r.tol;
  return r;
}

double cauchy_riemann_residual(const Field& h, const Field& f_dual, const InterpSpec& spec) {
  const double d = 1e-4;
  double worst = 0.0;
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) {
      const Complex z(0.5 + 0.1 * a, 0.1 * b);
      const Complex dx = (three_lines_value(h, f_dual, spec, z + Complex(d, 0.0)) -
                          three_lines_value(h, f_dual, spec, z - Complex(d, 0.0))) /
                         (2.0 * d);
      const Complex dy = (three_lines_value(h, f_dual, spec, z + Complex(0.0, d)) -
                          three_lines_value(h, f_dual, spec, z - Complex(0.0, d))) /
                         (2.0 * d);
      worst = std::max(worst, std::abs(dy - Complex(0.0, 1.0) * dx) / std::max(1.0, std::abs(dx)));
    }
  }
  return worst;
}

}  // namespace dualnorm
