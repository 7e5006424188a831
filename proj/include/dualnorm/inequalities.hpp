#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dualnorm/dualmodel.hpp"
#include "dualnorm/norms.hpp"
#include "dualnorm/report.hpp"

namespace dualnorm {

/// Constants of the two-point inequalities: C_p = 2p - 1 for p >= 2 and
/// c_p = (p-1)/(p+1) for p <= 2. At p = 2 both inequalities are the
/// parallelogram law, so effective() returns 1 there.
struct TwoPointConstants {
  explicit TwoPointConstants(ExponentP p);
  ExponentP p;
  double C_p_bound;
  double c_p_bound;
  /// The constant actually used by the checks: 1 at p = 2, C_p above, c_p below.
  double effective() const;
};

/// Clarkson inequalities with q the conjugate of p:
///   p <= 2: (||(x+y)/2||^q + ||(x-y)/2||^q)^{1/q} <= (½(||x||^p + ||y||^p))^{1/p}
///   p >= 2: (||(x+y)/2||^p + ||(x-y)/2||^p)^{1/p} <= (½(||x||^q + ||y||^q))^{1/q}
/// Throws DomainError unless 1 < p < inf.
CheckReport clarkson_check(const Field& h1, const Field& h2, ExponentP p, Family family,
                           double tol_rel = kDefaultTolRel);
CheckReport clarkson_sch_check(const Field& h1, const Field& h2, ExponentP p, double tol_rel = kDefaultTolRel);
CheckReport clarkson_hs_check(const Field& h1, const Field& h2, ExponentP p, double tol_rel = kDefaultTolRel);

struct TwoPointResult {
  CheckReport report;
  /// The constant that makes this pair tight; empty when h2 = 0.
  std::optional<double> critical;
};

/// p >= 2: (½(||h1+h2||^p + ||h1-h2||^p))^{1/p} <= (||h1||^2 + C ||h2||^2)^{1/2};
/// p <= 2: the reverse inequality with c. C, c from TwoPointConstants.
TwoPointResult two_point_check(const Field& h1, const Field& h2, ExponentP p, Family family = Family::sch,
                               double tol_rel = kDefaultTolRel);

enum class ModulusKind { convexity_lower, smoothness_upper };

struct ModulusEstimate {
  double epsilon_or_t = 0.0;
  double estimate = 0.0;
  double bound = 0.0;
  ModulusKind kind = ModulusKind::convexity_lower;
  std::size_t samples = 0;  // 0 marks an empty bin: estimate is meaningless
};

/// Lower bound for the modulus of convexity: max(e^q/(q 2^q), c_p e^2/8) for
/// p <= 2, e^p/(p 2^p) for p >= 2.
double convexity_lower_bound(ExponentP p, double eps);
/// Upper bound for the modulus of smoothness: t^p/p for p <= 2,
/// min(t^q/q, C_p t^2/2) for p >= 2.
double smoothness_upper_bound(ExponentP p, double t);

/// Hilbert-space moduli: 1 - sqrt(1 - e^2/4) and sqrt(1 + t^2) - 1.
double hilbert_convexity(double eps);
double hilbert_smoothness(double t);

/// Draws unit pairs (h1, h2 = normalized cos(phi) h1 + sin(phi) g with phi
/// uniform in [0, pi]), bins them by ||h1 - h2|| into [edge, edge + width)
/// and records per bin the smallest 1 - ||(h1+h2)/2||. The bound is taken at
/// the lower edge.
std::vector<ModulusEstimate> modulus_convexity_sample(const ModelPtr& model, ExponentP p, Family family,
                                                      const std::vector<double>& eps_bins, std::size_t samples,
                                                      std::uint64_t seed, double bin_width = 0.1);

/// For each t the largest (||h1 + t h2|| + ||h1 - t h2||)/2 - 1 over
/// independent unit pairs.
std::vector<ModulusEstimate> modulus_smoothness_sample(const ModelPtr& model, ExponentP p, Family family,
                                                       const std::vector<double>& t_grid, std::size_t samples,
                                                       std::uint64_t seed);

/// convexity: bound <= estimate; smoothness: estimate <= bound. Empty bins
/// must be filtered out by the caller.
CheckReport modulus_report(const ModulusEstimate& e, ExponentP p, Family family, double tol_rel = kDefaultTolRel);

/// Hilbert case p = 2: a convexity estimate must lie in
/// [delta_H(e), delta_H(e) + window] and a smoothness estimate in
/// [rho_H(t) - window, rho_H(t)]. The sampled infimum (supremum) can only
/// overshoot (undershoot) the closed form, so the window is one-sided.
/// lhs = estimate, rhs = closed form, slack = distance to the nearer edge.
CheckReport hilbert_modulus_report(const ModulusEstimate& e, Family family, double window = 0.05,
                                   double tol_rel = kDefaultTolRel);

/// (mean over all 2^n sign vectors of ||sum theta_j H_j||^r)^{1/r}.
/// Throws SizeError for n > 20.
double rademacher_average(const std::vector<Field>& fields, ExponentP p, Family family, double r);

struct TypeCotypeResult {
  CheckReport lower;  // lower estimate <= average
  CheckReport upper;  // average <= upper estimate
};

/// With A the exact L^2 sign average:
///   p <= 2: sqrt(c_p) (sum ||H_j||^2)^{1/2} <= A <= (sum ||H_j||^p)^{1/p}
///   p >= 2: (sum ||H_j||^p)^{1/p} <= A <= sqrt(C_p) (sum ||H_j||^2)^{1/2}
TypeCotypeResult type_cotype_check(const std::vector<Field>& fields, ExponentP p, Family family = Family::sch,
                                   double tol_rel = kDefaultTolRel);

/// Rearranged Clarkson bound behind the Kadec-Klee property:
///   p <= 2: ||(hn-h)/2||^q <= (½(||hn||^p + ||h||^p))^{q/p} - ||(hn+h)/2||^q
///   p >= 2: the same with p and q exchanged.
/// rhs is the gap value.
CheckReport kadec_klee_gap(const Field& hn, const Field& h, ExponentP p, double tol_rel = kDefaultTolRel);

/// Finite ingredient of unconditional convergence: sum of the quadratic (p <= 2)
/// or p-th power (p > 2) moduli rates is dominated by the sum of
/// convexity_lower_bound(||H_j||). Any ||H_j|| > 2 fails with slack
/// 2 - max ||H_j||.
CheckReport unconditional_sum_bound(const std::vector<Field>& fields, ExponentP p, double tol_rel = kDefaultTolRel);

/// The comparison constant 8/c_p (p <= 2) or p 2^p (p > 2).
double unconditional_constant(ExponentP p);

}  // namespace dualnorm
