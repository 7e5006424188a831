#pragma once

#include <string>

#include "dualnorm/dualmodel.hpp"
#include "dualnorm/exponent.hpp"
#include "dualnorm/report.hpp"

namespace dualnorm {

/// sch: Schatten family, sum of dim * ||H||_{S^p}^p.
/// hs: Hilbert-Schmidt family, sum of dim^{2-p/2} * ||H||_HS^p.
enum class Family { sch, hs };

std::string to_string(Family f);
Family parse_family(const std::string& text);

/// Weighted direct sum X (+)_{r,w} X with norm (||x||^r + w ||y||^r)^{1/r}.
struct DirectSumSpec {
  DirectSumSpec(ExponentP r, double w);
  ExponentP r;
  double w;
};

double lp_sch_norm(const Field& h, ExponentP p);
double lp_hs_norm(const Field& h, ExponentP p);
double family_norm(const Field& h, ExponentP p, Family family);

/// p <= 2: ||h||_sch <= ||h||_hs; p >= 2: ||h||_hs <= ||h||_sch.
CheckReport embedding_check(const Field& h, ExponentP p, double tol_rel = kDefaultTolRel);

/// ||x + y|| <= ||x|| + ||y|| in the chosen family.
CheckReport triangle_check(const Field& x, const Field& y, ExponentP p, Family family,
                           double tol_rel = kDefaultTolRel);

/// ||h1 h2||_{r} <= ||h1||_p ||h2||_q in the Schatten family, 1/r = 1/p + 1/q.
/// Throws DomainError when 1/p + 1/q > 1.
CheckReport holder_check(const Field& h1, const Field& h2, ExponentP p, ExponentP q,
                         double tol_rel = kDefaultTolRel);

/// The exponent r with 1/r = 1/p + 1/q, or DomainError.
ExponentP holder_exponent(ExponentP p, ExponentP q);

/// ||h|| = ||h*|| = || |h| || in the chosen family; lhs = ||h||, rhs = || |h| ||,
/// slack = -(largest deviation among the three).
CheckReport adjoint_norm_check(const Field& h, ExponentP p, Family family, double tol_rel = kDefaultTolRel);

double direct_sum_norm(const Field& x, const Field& y, ExponentP p, const DirectSumSpec& spec, Family family);

/// Scalar form of the direct-sum norm, from already computed component norms.
double direct_sum_combine(double nx, double ny, const DirectSumSpec& spec);

}  // namespace dualnorm
