#include "doctest.h"

#include <cmath>

#include "dualnorm/errors.hpp"
#include "dualnorm/norms.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace dualnorm;
using testutil::model;

namespace {

Field one_and_identity() {
  const ModelPtr m = model(Preset::custom({1, 2}));
  return Field(m, {CMatrix{{1.0}}, CMatrix::identity(2)});
}

const double kPs[] = {1.0, 1.3, 2.0, 2.7, 4.0, INFINITY};

}  // namespace

TEST_CASE("schatten family on a diagonal field") {
  const Field h = one_and_identity();
  CHECK(lp_sch_norm(h, ExponentP(3)) == doctest::Approx(std::cbrt(5.0)).epsilon(1e-14));
  CHECK(lp_sch_norm(h, ExponentP::infinity()) == doctest::Approx(1.0));
}

TEST_CASE("hilbert-schmidt family on a diagonal field") {
  const Field h = one_and_identity();
  CHECK(lp_hs_norm(h, ExponentP(3)) == doctest::Approx(std::cbrt(5.0)).epsilon(1e-14));
  CHECK(lp_hs_norm(h, ExponentP::infinity()) == doctest::Approx(1.0));
}

TEST_CASE("schatten family against per-block oracle") {
  const ModelPtr m = model(Preset::su2_trunc(3));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Field h = random_field(m, seed);
    long double acc = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      acc += m->dim(i) * std::pow(static_cast<long double>(oracle::schatten(h.block(i), 2.5)), 2.5L);
    }
    const double ref = static_cast<double>(std::pow(acc, 1.0L / 2.5L));
    CHECK(std::abs(lp_sch_norm(h, ExponentP(2.5)) - ref) <= 1e-10 * ref);
  }
}

TEST_CASE("p = 2 coincidence of the families") {
  const ModelPtr m = model(Preset::su2_trunc(4));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Field h = random_field(m, seed);
    const double a = lp_sch_norm(h, ExponentP(2));
    CHECK(std::abs(a - lp_hs_norm(h, ExponentP(2))) <= 1e-12 * a);
  }
}

TEST_CASE("homogeneity and triangle inequality") {
  const ModelPtr m = model(Preset::s3());
  const Complex alpha(-1.7, 0.4);
  for (double pv : kPs) {
    const ExponentP p(pv);
    for (Family fam : {Family::sch, Family::hs}) {
      for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const Field x = random_field(m, 2 * seed);
        const Field y = random_field(m, 2 * seed + 1);
        const double nx = family_norm(x, p, fam);
        const double ny = family_norm(y, p, fam);
        const double nsum = family_norm(field_add(x, y), p, fam);
        if (nsum > nx + ny + 1e-10 * std::max(1.0, nx + ny)) FAIL("triangle inequality violated");
        if (seed < 20) CHECK(std::abs(family_norm(field_scale(x, alpha), p, fam) - std::abs(alpha) * nx) <= 1e-12 * nx);
      }
    }
  }
}

TEST_CASE("embedding between the families") {
  const ModelPtr m = model(Preset::su2_trunc(4));
  const Field h = random_field(m, 5);
  const CheckReport r2 = embedding_check(h, ExponentP(2));
  CHECK(std::abs(r2.slack) <= 1e-12 * r2.rhs);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Field g = random_field(m, seed);
    if (!embedding_check(g, ExponentP(1)).passed) FAIL("embedding p=1");
    if (!embedding_check(g, ExponentP(4)).passed) FAIL("embedding p=4");
  }
}

TEST_CASE("hoelder inequality") {
  const ModelPtr t2 = model(Preset::torus(2));
  const Field h = Field(t2, {CMatrix{{Complex(1.0, 2.0)}}, CMatrix{{Complex(-0.5, 0.0)}}});
  const CheckReport cs = holder_check(h, identity_field(t2), ExponentP(2), ExponentP(2));
  CHECK(cs.passed);
  CHECK(cs.lhs == doctest::Approx(std::abs(Complex(1.0, 2.0)) + 0.5));

  const ModelPtr s3 = model(Preset::s3());
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Field a = random_field(s3, 2 * seed);
    const Field b = random_field(s3, 2 * seed + 1);
    if (!holder_check(a, b, ExponentP(3), ExponentP(1.5)).passed) FAIL("hoelder (3, 3/2)");
    if (!holder_check(a, b, ExponentP::infinity(), ExponentP::infinity()).passed) FAIL("hoelder (inf, inf)");
    if (!holder_check(a, b, ExponentP::infinity(), ExponentP(2.5)).passed) FAIL("hoelder (inf, r)");
  }
  // Submultiplicativity per block for (inf, inf).
  const Field a = random_field(s3, 1);
  const Field b = random_field(s3, 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(operator_norm(a.block(i) * b.block(i)) <= operator_norm(a.block(i)) * operator_norm(b.block(i)) * (1 + 1e-12));
  }
  CHECK_THROWS_AS(holder_check(a, b, ExponentP(1.5), ExponentP(1.5)), DomainError);
  CHECK(holder_exponent(ExponentP(4), ExponentP(4)).value() == doctest::Approx(2.0));
}

TEST_CASE("adjoint and absolute value keep the norm") {
  const ModelPtr m = model(Preset::su2_trunc(3));
  CHECK(adjoint_norm_check(random_field(m, 1, Dist::hermitian), ExponentP(3), Family::sch).passed);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Field h = random_field(m, seed);
    CHECK(adjoint_norm_check(h, ExponentP(1.7), Family::sch).passed);
    CHECK(adjoint_norm_check(h, ExponentP::infinity(), Family::hs).passed);
  }
}

TEST_CASE("direct sums") {
  const ModelPtr m = model(Preset::s3());
  const Field x = field_scale(random_field(m, 1), 1.0 / lp_sch_norm(random_field(m, 1), ExponentP(2)));
  CHECK(direct_sum_norm(x, x, ExponentP(2), DirectSumSpec(ExponentP(2), 1.0), Family::sch) ==
        doctest::Approx(std::sqrt(2.0)));
  const Field y = random_field(m, 2);
  const double nx = lp_sch_norm(y, ExponentP(1.5));
  CHECK(direct_sum_norm(y, zero_field(m), ExponentP(1.5), DirectSumSpec(ExponentP(3), 2.0), Family::sch) ==
        doctest::Approx(nx));
  const Field z = random_field(m, 3);
  CHECK(direct_sum_norm(y, z, ExponentP(1.5), DirectSumSpec(ExponentP(1), 3.0), Family::sch) ==
        doctest::Approx(nx + 3.0 * lp_sch_norm(z, ExponentP(1.5))).epsilon(1e-13));
  CHECK(direct_sum_norm(y, z, ExponentP(1.5), DirectSumSpec(ExponentP::infinity(), 3.0), Family::hs) ==
        doctest::Approx(std::max(lp_hs_norm(y, ExponentP(1.5)), 3.0 * lp_hs_norm(z, ExponentP(1.5)))));
  CHECK_THROWS_AS(DirectSumSpec(ExponentP(2), 0.0), DomainError);
}

TEST_CASE("large dimensions do not overflow the weights") {
  const ModelPtr m = model(Preset::custom({200}));
  const Field id = identity_field(m);
  // dim^{2 - p/2} * (sqrt(200))^p = 200^2.
  CHECK(lp_hs_norm(id, ExponentP(40)) == doctest::Approx(std::pow(200.0, 2.0 / 40.0)).epsilon(1e-12));
}
