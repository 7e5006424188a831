#include <algorithm>
#include <cmath>

#include "dualnorm/errors.hpp"
#include "dualnorm/inequalities.hpp"

namespace dualnorm {

TwoPointConstants::TwoPointConstants(ExponentP p_)
    : p(p_), C_p_bound(2.0 * p_.value() - 1.0), c_p_bound((p_.value() - 1.0) / (p_.value() + 1.0)) {}

double TwoPointConstants::effective() const {
  if (p.value() == 2.0) return 1.0;
  return p.value() > 2.0 ? C_p_bound : c_p_bound;
}

namespace {

void require_open_exponent(ExponentP p, const char* what) {
  if (!p.is_finite() || p.value() <= 1.0) {
    throw DomainError(std::string(what) + " needs 1 < p < inf, got " + p.to_string());
  }
}

// (a^r + b^r)^{1/r} without overflow.
double power_sum(double a, double b, double r) {
  const double m = std::max(a, b);
  if (m == 0.0) return 0.0;
  return m * std::pow(std::pow(a / m, r) + std::pow(b / m, r), 1.0 / r);
}

// (½(a^r + b^r))^{1/r}
double power_mean(double a, double b, double r) { return power_sum(a, b, r) * std::pow(0.5, 1.0 / r); }

std::string family_tag(Family f) { return f == Family::sch ? "_sch" : "_hs"; }

}  // namespace

CheckReport clarkson_check(const Field& h1, const Field& h2, ExponentP p, Family family, double tol_rel) {
  require_open_exponent(p, "Clarkson inequality");
  const double pv = p.value();
  const double qv = p.conjugate().value();
  const double mid_plus = 0.5 * family_norm(field_add(h1, h2), p, family);
  const double mid_minus = 0.5 * family_norm(field_sub(h1, h2), p, family);
  const double n1 = family_norm(h1, p, family);
  const double n2 = family_norm(h2, p, family);
  double lhs;
  double rhs;
  if (pv <= 2.0) {
    lhs = power_sum(mid_plus, mid_minus, qv);
    rhs = power_mean(n1, n2, pv);
  } else {
    lhs = power_sum(mid_plus, mid_minus, pv);
    rhs = power_mean(n1, n2, qv);
  }
  return inequality_report("clarkson" + family_tag(family), pv, lhs, rhs, tol_rel,
                           Digest().add(h1).add(h2).add(p).add(to_string(family)).hex());
}

CheckReport clarkson_sch_check(const Field& h1, const Field& h2, ExponentP p, double tol_rel) {
  return clarkson_check(h1, h2, p, Family::sch, tol_rel);
}

CheckReport clarkson_hs_check(const Field& h1, const Field& h2, ExponentP p, double tol_rel) {
  return clarkson_check(h1, h2, p, Family::hs, tol_rel);
}

TwoPointResult two_point_check(const Field& h1, const Field& h2, ExponentP p, Family family, double tol_rel) {
  require_open_exponent(p, "two-point inequality");
  const double pv = p.value();
  const double constant = TwoPointConstants(p).effective();
  const double mean = power_mean(family_norm(field_add(h1, h2), p, family),
                                 family_norm(field_sub(h1, h2), p, family), pv);
  const double n1 = family_norm(h1, p, family);
  const double n2 = family_norm(h2, p, family);
  const double quad = std::sqrt(n1 * n1 + constant * n2 * n2);
  const std::string digest = Digest().add(h1).add(h2).add(p).add(to_string(family)).hex();
  TwoPointResult r;
  if (pv >= 2.0) {
    r.report = inequality_report("two_point_upper" + family_tag(family), pv, mean, quad, tol_rel, digest);
  } else {
    r.report = inequality_report("two_point_lower" + family_tag(family), pv, quad, mean, tol_rel, digest);
  }
  if (n2 > 0.0) r.critical = (mean * mean - n1 * n1) / (n2 * n2);
  return r;
}

CheckReport kadec_klee_gap(const Field& hn, const Field& h, ExponentP p, double tol_rel) {
  require_open_exponent(p, "Kadec-Klee gap");
  double a = p.value();
  double b = p.conjugate().value();
  if (a > 2.0) std::swap(a, b);
  // a is the exponent inside the mean, b the outer one.
  const double diff = 0.5 * lp_sch_norm(field_sub(hn, h), p);
  const double sum = 0.5 * lp_sch_norm(field_add(hn, h), p);
  const double mean = power_mean(lp_sch_norm(hn, p), lp_sch_norm(h, p), a);
  const double lhs = std::pow(diff, b);
  const double rhs = std::pow(mean, b) - std::pow(sum, b);
  return inequality_report("kadec_klee_gap", p.value(), lhs, rhs, tol_rel, Digest().add(hn).add(h).add(p).hex());
}

double convexity_lower_bound(ExponentP p, double eps) {
  const double pv = p.value();
  const double qv = p.conjugate().value();
  if (pv <= 2.0) {
    const double c = TwoPointConstants(p).effective();
    return std::max(std::pow(eps, qv) / (qv * std::pow(2.0, qv)), c * eps * eps / 8.0);
  }
  return std::pow(eps, pv) / (pv * std::pow(2.0, pv));
}

double smoothness_upper_bound(ExponentP p, double t) {
  const double pv = p.value();
  const double qv = p.conjugate().value();
  if (pv <= 2.0) return std::pow(t, pv) / pv;
  const double C = TwoPointConstants(p).effective();
  return std::min(std::pow(t, qv) / qv, C * t * t / 2.0);
}

double hilbert_convexity(double eps) { return 1.0 - std::sqrt(1.0 - eps * eps / 4.0); }
double hilbert_smoothness(double t) { return std::sqrt(1.0 + t * t) - 1.0; }

double unconditional_constant(ExponentP p) {
  const double pv = p.value();
  if (pv <= 2.0) return 8.0 / TwoPointConstants(p).effective();
  return pv * std::pow(2.0, pv);
}

CheckReport unconditional_sum_bound(const std::vector<Field>& fields, ExponentP p, double tol_rel) {
  require_open_exponent(p, "unconditional sum bound");
  const double pv = p.value();
  Digest digest;
  digest.add(p);
  double lhs = 0.0;
  double rhs = 0.0;
  double largest = 0.0;
  for (const Field& f : fields) {
    digest.add(f);
    const double x = lp_sch_norm(f, p);
    largest = std::max(largest, x);
    lhs += std::pow(x, std::max(2.0, pv)) / unconditional_constant(p);
    rhs += convexity_lower_bound(p, x);
  }
  CheckReport r = inequality_report("unconditional_sum", pv, lhs, rhs, tol_rel, digest.hex());
  if (largest > 2.0) {
    // The modulus of convexity is only defined on (0, 2].
    r.slack = 2.0 - largest;
    r.passed = false;
  }
  return r;
}

}  // namespace dualnorm
