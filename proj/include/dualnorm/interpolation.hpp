#pragma once

#include <vector>

#include "dualnorm/dualmodel.hpp"
#include "dualnorm/exponent.hpp"
#include "dualnorm/report.hpp"

namespace dualnorm {

/// Interpolation exponents: 1/p = (1-theta)/p0 + theta/p1, 0 < theta < 1.
/// Endpoints may be infinite (this arises for the conjugate pair of p0 = 1),
/// but not both.
class InterpSpec {
 public:
  InterpSpec(ExponentP p0, ExponentP p1, double theta);

  ExponentP p0() const { return p0_; }
  ExponentP p1() const { return p1_; }
  double theta() const { return theta_; }
  ExponentP p() const { return p_; }

  /// (q0, q1, theta) with q_i the conjugate of p_i.
  InterpSpec dual() const;

  /// p / p(z) = p(1-z)/p0 + p z/p1.
  Complex exponent_ratio(Complex z) const;

 private:
  ExponentP p0_;
  ExponentP p1_;
  double theta_;
  ExponentP p_;
};

/// Default boundary grid t = -2, -1.5, ..., 2.
std::vector<double> default_t_grid();

/// f(z) = |H*|^{p/p(z) - 1} H blockwise, after scaling H to unit p-norm.
/// Singular values at or below 1e-12 * (largest in the block) map to 0.
Field witness_f(const Field& h, const InterpSpec& spec, Complex z);

/// g(z) = |F*|^{q/q(z) - 1} F with the conjugate exponents of spec_dual.
Field witness_g(const Field& f, const InterpSpec& spec_dual, Complex z);

/// h(z) = <f(z), g(z)> with f built from h and spec, g from f_dual and
/// spec.dual().
Complex three_lines_value(const Field& h, const Field& f_dual, const InterpSpec& spec, Complex z);

struct ThreeLinesValues {
  double boundary_max = 0.0;  // max |h(it)|, |h(1+it)| over the grid
  double center = 0.0;        // |h(theta)|
};
ThreeLinesValues three_lines_values(const Field& h, const Field& f_dual, const InterpSpec& spec,
                                    const std::vector<double>& t_grid);

/// Boundary values and |h(theta)| are at most 1 + tol; lhs is the largest
/// of them, rhs = 1.
CheckReport three_lines_check(const Field& h, const Field& f_dual, const InterpSpec& spec,
                              const std::vector<double>& t_grid, double tol_rel = 1e-9);

/// Largest deviation from 1 of ||f(it)||_{p0} and ||f(1+it)||_{p1} on the grid.
double boundary_norm_defect(const Field& h, const InterpSpec& spec, const std::vector<double>& t_grid);

/// Both halves of the equal-norms statement at finite scale: the witness
/// boundary norms reach ||h||_p = 1 (upper side) and the extremizer-based
/// pairing gives |h(theta)| = 1 (lower side). lhs = 1, rhs = largest
/// boundary norm; slack = -(largest deviation).
CheckReport interp_norm_consistency(const Field& h, const InterpSpec& spec, const std::vector<double>& t_grid,
                                    double tol_rel = 1e-8);

/// Largest |dh/dy - i dh/dx| / max(1, |dh/dx|) over a 5x5 interior grid
/// centred in the strip (grid step 0.1), by central differences.
double cauchy_riemann_residual(const Field& h, const Field& f_dual, const InterpSpec& spec);

}  // namespace dualnorm
