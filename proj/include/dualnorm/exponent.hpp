#pragma once

#include <limits>
#include <string>

namespace dualnorm {

/// An exponent p in [1, ∞]. Infinity is stored exactly and 1/∞ is taken as 0
/// in every reciprocal computation.
class ExponentP {
 public:
  /// Throws DomainError for p < 1 or NaN.
  explicit ExponentP(double value);

  static ExponentP infinity() { return ExponentP(std::numeric_limits<double>::infinity()); }
  /// Builds p from its reciprocal 1/p in [0, 1]; 0 maps to ∞.
  static ExponentP from_reciprocal(double inv);
  /// Parses "2.5", "3/2", "inf" or "∞".
  static ExponentP parse(const std::string& text);

  double value() const { return value_; }
  bool is_infinite() const { return value_ == std::numeric_limits<double>::infinity(); }
  bool is_finite() const { return !is_infinite(); }
  double reciprocal() const { return is_infinite() ? 0.0 : 1.0 / value_; }

  /// q with 1/p + 1/q = 1; conjugate(1) = ∞ and conjugate(∞) = 1.
  ExponentP conjugate() const;

  /// "inf" for ∞, otherwise the shortest decimal that round-trips.
  std::string to_string() const;

  friend bool operator==(const ExponentP& a, const ExponentP& b) { return a.value_ == b.value_; }
  friend bool operator<(const ExponentP& a, const ExponentP& b) { return a.value_ < b.value_; }

 private:
  double value_;
};

}  // namespace dualnorm
