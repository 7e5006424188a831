#pragma once

#include <cstdint>
#include <utility>

#include "dualnorm/dualmodel.hpp"
#include "dualnorm/norms.hpp"
#include "dualnorm/report.hpp"

namespace dualnorm {

/// <H, F> = sum over entries of dim * Tr(H F). Bilinear: no conjugation.
Complex pairing(const Field& h, const Field& f);

/// F = |H|^{p-1} U* / ||H||_p^{p-1} blockwise, with H = U|H| the polar
/// decomposition. Then ||F||_q = 1 and <H, F> = ||H||_p in the Schatten
/// family. At p = 1 this is F = U*. Throws DomainError for p = inf or H = 0.
Field dual_extremizer(const Field& h, ExponentP p);

/// Largest |<H, F>| over `trials` Ginibre fields F scaled to ||F||_q = 1.
/// With include_extremizer the extremizer is tried first, so the result
/// reaches ||H||_p; trials may then be 0.
double dual_norm_via_search(const Field& h, ExponentP p, int trials, std::uint64_t seed,
                            bool include_extremizer = false);

/// |<H, F>| <= ||H||_p ||F||_q.
CheckReport pairing_bound_check(const Field& h, const Field& f, ExponentP p, double tol_rel = kDefaultTolRel);

/// Identity check for the extremizer: lhs = Re <H, F>, rhs = ||H||_p; the
/// slack also absorbs Im <H, F> and the deviation of ||F||_q from 1 (scaled
/// by ||H||_p).
CheckReport extremizer_check(const Field& h, ExponentP p, double tol_rel = 1e-9);

/// |<h1,f1> + w^{1/r-1/s} <h2,f2>| <= ||(f1,f2)||_{q,(s,1/w)} ||(h1,h2)||_{p,(r,w)}
/// in the Schatten family, where q, s are the conjugates of p, r.
CheckReport direct_sum_dual_pair_check(const Field& h1, const Field& h2, const Field& f1, const Field& f2,
                                       ExponentP p, const DirectSumSpec& spec, double tol_rel = kDefaultTolRel);

/// The pair (f1, f2) at which the direct-sum bound above is attained for the
/// given (h1, h2); (h1, h2) must not both vanish.
std::pair<Field, Field> direct_sum_saturator(const Field& h1, const Field& h2, ExponentP p, const DirectSumSpec& spec);

/// Tr((AB)^s) = Tr((BA)^s) for PSD a, b.
CheckReport trace_cyclicity_check(const CMatrix& a, const CMatrix& b, double s, double tol_rel = 1e-9);

}  // namespace dualnorm
