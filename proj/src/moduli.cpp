#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "dualnorm/errors.hpp"
#include "dualnorm/inequalities.hpp"
#include "dualnorm/seed.hpp"

namespace dualnorm {

namespace {

Field unit(const Field& h, ExponentP p, Family family) {
  const double n = family_norm(h, p, family);
  if (n == 0.0) throw DomainError("cannot normalize the zero field");
  return field_scale(h, 1.0 / n);
}

}  // namespace

std::vector<ModulusEstimate> modulus_convexity_sample(const ModelPtr& model, ExponentP p, Family family,
                                                      const std::vector<double>& eps_bins, std::size_t samples,
                                                      std::uint64_t seed, double bin_width) {
  for (double e : eps_bins) {
    if (!(e > 0.0 && e <= 2.0)) throw DomainError("convexity bins must lie in (0, 2]");
  }
  std::vector<ModulusEstimate> out(eps_bins.size());
  for (std::size_t b = 0; b < eps_bins.size(); ++b) {
    out[b].epsilon_or_t = eps_bins[b];
    out[b].bound = convexity_lower_bound(p, eps_bins[b]);
    out[b].kind = ModulusKind::convexity_lower;
    out[b].estimate = std::numeric_limits<double>::infinity();
  }
  constexpr double kPi = 3.14159265358979323846;
  for (std::size_t k = 0; k < samples; ++k) {
    const Field h1 = unit(random_field(model, mix_seed(seed, "convexity_a", k)), p, family);
    const Field g = unit(random_field(model, mix_seed(seed, "convexity_b", k)), p, family);
    std::mt19937_64 rng(mix_seed(seed, "convexity_angle", k));
    const double phi = std::uniform_real_distribution<double>(0.0, kPi)(rng);
    const Field h2 = unit(field_lincomb(std::cos(phi), h1, std::sin(phi), g), p, family);
    const double eps = family_norm(field_sub(h1, h2), p, family);
    const double defect = 1.0 - 0.5 * family_norm(field_add(h1, h2), p, family);
    for (std::size_t b = 0; b < eps_bins.size(); ++b) {
      if (eps >= eps_bins[b] && eps < eps_bins[b] + bin_width) {
        out[b].estimate = std::min(out[b].estimate, defect);
        ++out[b].samples;
      }
    }
  }
  for (ModulusEstimate& e : out) {
    if (e.samples == 0) e.estimate = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

std::vector<ModulusEstimate> modulus_smoothness_sample(const ModelPtr& model, ExponentP p, Family family,
                                                       const std::vector<double>& t_grid, std::size_t samples,
                                                       std::uint64_t seed) {
  for (double t : t_grid) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("smoothness grid must be non-negative");
  }
  std::vector<ModulusEstimate> out(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    out[i].epsilon_or_t = t_grid[i];
    out[i].bound = smoothness_upper_bound(p, t_grid[i]);
    out[i].kind = ModulusKind::smoothness_upper;
    out[i].estimate = t_grid[i] == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
  }
  for (std::size_t k = 0; k < samples; ++k) {
    const Field h1 = unit(random_field(model, mix_seed(seed, "smoothness_a", k)), p, family);
    const Field h2 = unit(random_field(model, mix_seed(seed, "smoothness_b", k)), p, family);
    for (ModulusEstimate& e : out) {
      const double t = e.epsilon_or_t;
      ++e.samples;
      if (t == 0.0) continue;
      const double v = 0.5 * (family_norm(field_lincomb(1.0, h1, t, h2), p, family) +
                              family_norm(field_lincomb(1.0, h1, -t, h2), p, family)) -
                       1.0;
      e.estimate = std::max(e.estimate, v);
    }
  }
  for (ModulusEstimate& e : out) {
    if (e.samples == 0) e.estimate = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

CheckReport modulus_report(const ModulusEstimate& e, ExponentP p, Family family, double tol_rel) {
  const std::string tag = family == Family::sch ? "_sch" : "_hs";
  const std::string digest = Digest().add(p).add(to_string(family)).add(e.epsilon_or_t).add(
                                           static_cast<std::uint64_t>(e.samples)).hex();
  if (e.kind == ModulusKind::convexity_lower) {
    return inequality_report("modulus_convexity" + tag, p.value(), e.bound, e.estimate, tol_rel, digest);
  }
  return inequality_report("modulus_smoothness" + tag, p.value(), e.estimate, e.bound, tol_rel, digest);
}

CheckReport hilbert_modulus_report(const ModulusEstimate& e, Family family, double window, double tol_rel) {
  const std::string tag = family == Family::sch ? "_sch" : "_hs";
  const std::string digest = Digest().add(2.0).add(to_string(family)).add(e.epsilon_or_t).add(
                                           static_cast<std::uint64_t>(e.samples)).hex();
  const bool convex = e.kind == ModulusKind::convexity_lower;
  const double exact = convex ? hilbert_convexity(e.epsilon_or_t) : hilbert_smoothness(e.epsilon_or_t);
  const double lo = convex ? exact : exact - window;
  const double hi = convex ? exact + window : exact;
  CheckReport r = inequality_report(convex ? "hilbert_convexity" + tag : "hilbert_smoothness" + tag, 2.0, e.estimate,
                                    exact, tol_rel, digest);
  r.slack = std::min(e.estimate - lo, hi - e.estimate);
  r.passed = r.slack >= -r.tol;
  return r;
}

}  // namespace dualnorm
