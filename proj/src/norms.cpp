#include "dualnorm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dualnorm/errors.hpp"

namespace dualnorm {

std::string to_string(Family f) { return f == Family::sch ? "sch" : "hs"; }

Family parse_family(const std::string& text) {
  if (text == "sch") return Family::sch;
  if (text == "hs") return Family::hs;
  throw DomainError("unknown norm family '" + text + "' (expected sch or hs)");
}

DirectSumSpec::DirectSumSpec(ExponentP r_, double w_) : r(r_), w(w_) {
  if (!(w_ > 0.0) || !std::isfinite(w_)) throw DomainError("direct-sum weight must be positive and finite");
}

namespace {

// (sum_i exp(logw_i) * x_i^p)^{1/p} for x_i >= 0, evaluated in log space.
double weighted_power_sum(const std::vector<double>& logw, const std::vector<double>& x, double p) {
  std::vector<double> logs;
  logs.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0) logs.push_back(logw[i] + p * std::log(x[i]));
  }
  if (logs.empty()) return 0.0;
  const double top = *std::max_element(logs.begin(), logs.end());
  double acc = 0.0;
  for (double l : logs) acc += std::exp(l - top);
  return std::exp((top + std::log(acc)) / p);
}

}  // namespace

double lp_sch_norm(const Field& h, ExponentP p) {
  if (p.is_infinite()) {
    double m = 0.0;
    for (const CMatrix& b : h.blocks()) m = std::max(m, operator_norm(b));
    return m;
  }
  std::vector<double> logw;
  std::vector<double> norms;
  for (std::size_t i = 0; i < h.size(); ++i) {
    logw.push_back(std::log(static_cast<double>(h.model().dim(i))));
    norms.push_back(schatten_norm(h.block(i), p));
  }
  return weighted_power_sum(logw, norms, p.value());
}

double lp_hs_norm(const Field& h, ExponentP p) {
  if (p.is_infinite()) {
    double m = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      m = std::max(m, hs_norm(h.block(i)) / std::sqrt(static_cast<double>(h.model().dim(i))));
    }
    return m;
  }
  const double pv = p.value();
  std::vector<double> logw;
  std::vector<double> norms;
  for (std::size_t i = 0; i < h.size(); ++i) {
    logw.push_back((2.0 - pv / 2.0) * std::log(static_cast<double>(h.model().dim(i))));
    norms.push_back(hs_norm(h.block(i)));
  }
  return weighted_power_sum(logw, norms, pv);
}

double family_norm(const Field& h, ExponentP p, Family family) {
  return family == Family::sch ? lp_sch_norm(h, p) : lp_hs_norm(h, p);
}

CheckReport embedding_check(const Field& h, ExponentP p, double tol_rel) {
  const double sch = lp_sch_norm(h, p);
  const double hs = lp_hs_norm(h, p);
  const std::string digest = Digest().add(h).add(p).hex();
  if (p.value() <= 2.0) return inequality_report("embedding_sch_in_hs", p.value(), sch, hs, tol_rel, digest);
  return inequality_report("embedding_hs_in_sch", p.value(), hs, sch, tol_rel, digest);
}

CheckReport triangle_check(const Field& x, const Field& y, ExponentP p, Family family, double tol_rel) {
  const double lhs = family_norm(field_add(x, y), p, family);
  const double rhs = family_norm(x, p, family) + family_norm(y, p, family);
  return inequality_report("triangle_" + to_string(family), p.value(), lhs, rhs, tol_rel,
                           Digest().add(x).add(y).add(p).add(to_string(family)).hex());
}

ExponentP holder_exponent(ExponentP p, ExponentP q) {
  const double inv = p.reciprocal() + q.reciprocal();
  if (inv > 1.0 + 1e-14) {
    throw DomainError("Hoelder exponents need 1/p + 1/q <= 1 (got " + p.to_string() + ", " + q.to_string() + ")");
  }
  return ExponentP::from_reciprocal(std::min(inv, 1.0));
}

CheckReport holder_check(const Field& h1, const Field& h2, ExponentP p, ExponentP q, double tol_rel) {
  const ExponentP r = holder_exponent(p, q);
  const double lhs = lp_sch_norm(field_product(h1, h2), r);
  const double rhs = lp_sch_norm(h1, p) * lp_sch_norm(h2, q);
  return inequality_report("holder_sch", p.value(), lhs, rhs, tol_rel, Digest().add(h1).add(h2).add(p).add(q).hex());
}

CheckReport adjoint_norm_check(const Field& h, ExponentP p, Family family, double tol_rel) {
  const double n = family_norm(h, p, family);
  const double n_adj = family_norm(field_adjoint(h), p, family);
  const double n_abs = family_norm(field_abs(h), p, family);
  const double dev = std::max(std::abs(n - n_adj), std::abs(n - n_abs));
  const std::string anchor = family == Family::sch ? "adjoint_abs_norm_sch" : "adjoint_abs_norm_hs";
  CheckReport r = equality_report(anchor, p.value(), n, n_abs, tol_rel,
                                  Digest().add(h).add(p).add(to_string(family)).hex());
  r.slack = 0.0 - dev;
  r.passed = r.slack >= -r.tol;
  return r;
}

double direct_sum_combine(double nx, double ny, const DirectSumSpec& spec) {
  if (spec.r.is_infinite()) return std::max(nx, spec.w * ny);
  const double r = spec.r.value();
  const double top = std::max(nx, ny);
  if (top == 0.0) return 0.0;
  const double a = nx / top;
  const double b = ny / top;
  return top * std::pow(std::pow(a, r) + spec.w * std::pow(b, r), 1.0 / r);
}

double direct_sum_norm(const Field& x, const Field& y, ExponentP p, const DirectSumSpec& spec, Family family) {
  require_same_model(x, y);
  return direct_sum_combine(family_norm(x, p, family), family_norm(y, p, family), spec);
}

}  // namespace dualnorm
