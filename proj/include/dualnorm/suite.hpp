#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualnorm/dualmodel.hpp"
#include "dualnorm/exponent.hpp"
#include "dualnorm/report.hpp"

namespace dualnorm {

/// Bad suite name, preset, file or option. The CLI maps it to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SuiteId {
  norms,
  holder,
  adjoint,
  duality,
  interpolation,
  clarkson,
  two_point,
  moduli,
  type_cotype,
  kadec_klee,
  all
};

std::string to_string(SuiteId id);
SuiteId parse_suite(const std::string& text);
/// Every concrete suite, in the order `all` runs them.
const std::vector<SuiteId>& registered_suites();

enum class FamilyChoice { sch, hs, both };
FamilyChoice parse_family_choice(const std::string& text);

struct SuiteConfig {
  SuiteId suite = SuiteId::all;
  ModelPtr dual;
  std::vector<ExponentP> p_list;
  FamilyChoice family = FamilyChoice::sch;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  /// Replaces every per-check relative tolerance when set.
  std::optional<double> tol_override;
};

/// A preset string ("s3", "torus(4)", ...) or the path of a dual model JSON
/// file. Anything else is a ConfigError.
ModelPtr resolve_dual(const std::string& text);

/// Comma separated exponents, e.g. "1.5,2,inf".
std::vector<ExponentP> parse_p_list(const std::string& text);

/// Runs the configured suite (or all of them) and returns the reports sorted
/// by (suite, case_id). Trial k of a suite draws from
/// mix_seed(seed, suite name, k). An explicitly named suite rejects exponents
/// it cannot handle with ConfigError; `all` skips them.
std::vector<CheckReport> run_suite(const SuiteConfig& config);

bool all_passed(const std::vector<CheckReport>& reports);

/// Below this many samples the moduli suite does not compare p = 2
/// estimates with the Hilbert closed forms: too few draws leave the
/// sampled extrema far from the true ones.
inline constexpr std::size_t kHilbertWindowMinSamples = 10000;

}  // namespace dualnorm
