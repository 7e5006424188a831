#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "dualnorm/dualmodel.hpp"
#include "dualnorm/matcore.hpp"

namespace testutil {

inline dualnorm::CMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  dualnorm::CMatrix m(rows, cols);
  for (auto& z : m.entries()) {
    const double re = normal(rng);
    z = dualnorm::Complex(re, normal(rng));
  }
  return m;
}

inline dualnorm::CMatrix random_psd(std::size_t n, std::uint64_t seed) {
  const dualnorm::CMatrix g = random_matrix(n, n, seed);
  dualnorm::CMatrix p = dualnorm::adjoint(g) * g;
  return 0.5 * (p + dualnorm::adjoint(p));
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

inline dualnorm::ModelPtr model(const dualnorm::Preset& p) {
  return std::make_shared<const dualnorm::DualModel>(dualnorm::preset_dual(p));
}

}  // namespace testutil
