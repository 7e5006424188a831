#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dualnorm/dualmodel.hpp"
#include "dualnorm/exponent.hpp"

namespace dualnorm {

inline constexpr double kDefaultTolRel = 1e-10;

/// Outcome of one verified inequality or identity. For an inequality
/// lhs <= rhs the slack is rhs - lhs; for an identity it is -|lhs - rhs|.
/// passed holds exactly when slack >= -tol.
struct CheckReport {
  std::string suite;
  std::string case_id;
  double p = 0.0;  // may be +inf
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tol = 0.0;
  bool passed = false;
  std::string inputs_digest;
  // Name of the result being checked, e.g. "clarkson_sch".
  std::string paper_anchor;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// tol = tol_rel * max(1, |rhs|).
double scaled_tol(double rhs, double tol_rel);

CheckReport inequality_report(std::string anchor, double p, double lhs, double rhs, double tol_rel,
                              std::string digest);
CheckReport equality_report(std::string anchor, double p, double lhs, double rhs, double tol_rel,
                            std::string digest);

/// FNV-1a (64-bit) over the exact bit patterns of everything added.
class Digest {
 public:
  Digest& add(std::uint64_t v);
  Digest& add(double v);
  Digest& add(const std::string& s);
  Digest& add(const CMatrix& m);
  Digest& add(const Field& f);
  Digest& add(ExponentP p) { return add(p.value()); }

  std::uint64_t value() const { return state_; }
  /// 16 lowercase hex digits.
  std::string hex() const;

 private:
  void bytes(const void* data, std::size_t n);
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace dualnorm
