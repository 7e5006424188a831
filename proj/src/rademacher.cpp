#include <cmath>
#include <string>

#include "dualnorm/errors.hpp"
#include "dualnorm/inequalities.hpp"

namespace dualnorm {

double rademacher_average(const std::vector<Field>& fields, ExponentP p, Family family, double r) {
  const std::size_t n = fields.size();
  if (n > 20) throw SizeError("exhaustive sign average is capped at 20 fields, got " + std::to_string(n));
  if (!(r > 0.0)) throw DomainError("sign-average exponent must be positive");
  if (n == 0) return 0.0;
  for (std::size_t j = 1; j < n; ++j) require_same_model(fields[0], fields[j]);

  const std::uint64_t patterns = std::uint64_t{1} << n;
  long double acc = 0.0L;
  for (std::uint64_t s = 0; s < patterns; ++s) {
    // Bit j set means theta_j = -1.
    std::vector<CMatrix> blocks = fields[0].blocks();
    if (s & 1U) {
      for (CMatrix& b : blocks) b *= -1.0;
    }
    for (std::size_t j = 1; j < n; ++j) {
      const double theta = ((s >> j) & 1U) ? -1.0 : 1.0;
      for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] += theta * fields[j].block(i);
    }
    const double norm = family_norm(Field(fields[0].model_ptr(), std::move(blocks)), p, family);
    acc += std::pow(static_cast<long double>(norm), static_cast<long double>(r));
  }
  return static_cast<double>(std::pow(acc / static_cast<long double>(patterns), 1.0L / r));
}

TypeCotypeResult type_cotype_check(const std::vector<Field>& fields, ExponentP p, Family family, double tol_rel) {
  if (!p.is_finite() || p.value() <= 1.0) throw DomainError("type/cotype check needs 1 < p < inf");
  const double pv = p.value();
  const double avg = rademacher_average(fields, p, family, 2.0);
  double sum_sq = 0.0;
  double sum_p = 0.0;
  Digest digest;
  digest.add(p).add(to_string(family));
  for (const Field& f : fields) {
    digest.add(f);
    const double x = family_norm(f, p, family);
    sum_sq += x * x;
    sum_p += std::pow(x, pv);
  }
  const double quad = std::sqrt(TwoPointConstants(p).effective() * sum_sq);
  const double pth = std::pow(sum_p, 1.0 / pv);
  const std::string tag = family == Family::sch ? "_sch" : "_hs";
  const std::string hex = digest.hex();
  TypeCotypeResult r;
  if (pv <= 2.0) {
    r.lower = inequality_report("type_lower" + tag, pv, quad, avg, tol_rel, hex);
    r.upper = inequality_report("type_upper" + tag, pv, avg, pth, tol_rel, hex);
  } else {
    r.lower = inequality_report("cotype_lower" + tag, pv, pth, avg, tol_rel, hex);
    r.upper = inequality_report("cotype_upper" + tag, pv, avg, quad, tol_rel, hex);
  }
  return r;
}

}  // namespace dualnorm
