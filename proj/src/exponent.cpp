#include "dualnorm/exponent.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

#include "dualnorm/errors.hpp"

namespace dualnorm {

ExponentP::ExponentP(double value) : value_(value) {
  if (std::isnan(value) || value < 1.0) {
    throw DomainError("exponent must lie in [1, inf], got " + std::to_string(value));
  }
}

ExponentP ExponentP::from_reciprocal(double inv) {
  if (std::isnan(inv) || inv < 0.0 || inv > 1.0) {
    throw DomainError("reciprocal exponent must lie in [0, 1], got " + std::to_string(inv));
  }
  if (inv == 0.0) return infinity();
  return ExponentP(1.0 / inv);
}

ExponentP ExponentP::conjugate() const {
  if (is_infinite()) return ExponentP(1.0);
  if (value_ == 1.0) return infinity();
  return ExponentP(value_ / (value_ - 1.0));
}

ExponentP ExponentP::parse(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "infinity" || text == "∞") return infinity();
  auto parse_real = [&](const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
      throw DomainError("cannot parse exponent '" + text + "'");
    }
    return v;
  };
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const double num = parse_real(text.substr(0, slash));
    const double den = parse_real(text.substr(slash + 1));
    return ExponentP(num / den);
  }
  return ExponentP(parse_real(text));
}

std::string ExponentP::to_string() const {
  if (is_infinite()) return "inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value_);
  return std::string(buf, res.ptr);
}

}  // namespace dualnorm
