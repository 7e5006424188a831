#include "dualnorm/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace dualnorm {

double scaled_tol(double rhs, double tol_rel) {
  const double mag = std::isfinite(rhs) ? std::abs(rhs) : 0.0;
  return tol_rel * std::max(1.0, mag);
}

namespace {

CheckReport make(std::string anchor, double p, double lhs, double rhs, double slack, double tol, std::string digest) {
  CheckReport r;
  r.p = p;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = slack;
  r.tol = tol;
  r.passed = slack >= -tol;  // false for NaN
  r.inputs_digest = std::move(digest);
  r.paper_anchor = std::move(anchor);
  return r;
}

}  // namespace

CheckReport inequality_report(std::string anchor, double p, double lhs, double rhs, double tol_rel,
                              std::string digest) {
  return make(std::move(anchor), p, lhs, rhs, rhs - lhs, scaled_tol(rhs, tol_rel), std::move(digest));
}

CheckReport equality_report(std::string anchor, double p, double lhs, double rhs, double tol_rel,
                            std::string digest) {
  // 0.0 - x so that an exact match reports +0, not -0.
  return make(std::move(anchor), p, lhs, rhs, 0.0 - std::abs(lhs - rhs), scaled_tol(rhs, tol_rel), std::move(digest));
}

void Digest::bytes(const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    state_ ^= p[i];
    state_ *= 0x100000001b3ULL;
  }
}

Digest& Digest::add(std::uint64_t v) {
  unsigned char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
  bytes(buf, 8);
  return *this;
}

Digest& Digest::add(double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof bits);
  return add(bits);
}

Digest& Digest::add(const std::string& s) {
  add(static_cast<std::uint64_t>(s.size()));
  bytes(s.data(), s.size());
  return *this;
}

Digest& Digest::add(const CMatrix& m) {
  add(static_cast<std::uint64_t>(m.rows()));
  add(static_cast<std::uint64_t>(m.cols()));
  for (const Complex& z : m.entries()) {
    add(z.real());
    add(z.imag());
  }
  return *this;
}

Digest& Digest::add(const Field& f) {
  add(f.model().name());
  for (const CMatrix& b : f.blocks()) add(b);
  return *this;
}

std::string Digest::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 0; i < 16; ++i) s[15 - i] = digits[(state_ >> (4 * i)) & 0xf];
  return s;
}

}  // namespace dualnorm
