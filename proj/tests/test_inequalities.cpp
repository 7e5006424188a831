#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "dualnorm/errors.hpp"
#include "dualnorm/inequalities.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace dualnorm;
using testutil::model;

namespace {

Field unit(const Field& h, ExponentP p, Family fam = Family::sch) {
  return field_scale(h, 1.0 / family_norm(h, p, fam));
}

void field_axpy(Field& acc, const Field& x, double c) { acc = field_lincomb(1.0, acc, c, x); }

}  // namespace

TEST_CASE("two-point constants") {
  const TwoPointConstants four(ExponentP(4));
  CHECK(four.C_p_bound == 7.0);
  CHECK(four.effective() == 7.0);
  CHECK(TwoPointConstants(ExponentP(1.5)).effective() == doctest::Approx(0.2));
  CHECK(TwoPointConstants(ExponentP(2)).effective() == 1.0);
  CHECK(TwoPointConstants(ExponentP(2)).C_p_bound == 3.0);
}

TEST_CASE("clarkson equality cases") {
  const ModelPtr m = model(Preset::su2_trunc(3));
  const Field h = random_field(m, 1);
  for (Family fam : {Family::sch, Family::hs}) {
    for (double pv : {1.3, 2.0, 4.0}) {
      const ExponentP p(pv);
      const CheckReport r = clarkson_check(h, zero_field(m), p, fam);
      const double expected = family_norm(h, p, fam) * std::pow(2.0, -(pv <= 2.0 ? 1.0 / pv : 1.0 / p.conjugate().value()));
      CHECK(std::abs(r.lhs - expected) <= 1e-12 * expected);
      CHECK(std::abs(r.rhs - expected) <= 1e-12 * expected);
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const CheckReport r = clarkson_check(random_field(m, 2 * seed), random_field(m, 2 * seed + 1), ExponentP(2), fam);
      CHECK(std::abs(r.slack) <= 1e-11 * std::max(1.0, r.rhs));
    }
  }
  CHECK_THROWS_AS(clarkson_sch_check(h, h, ExponentP(1)), DomainError);
  CHECK_THROWS_AS(clarkson_hs_check(h, h, ExponentP::infinity()), DomainError);
}

TEST_CASE("clarkson on random pairs") {
  const ModelPtr m = model(Preset::s3());
  for (double pv : {1.3, 1.7, 2.4, 4.0}) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const Field a = random_field(m, 2 * seed);
      const Field b = random_field(m, 2 * seed + 1);
      if (!clarkson_sch_check(a, b, ExponentP(pv)).passed) FAIL("Clarkson sch, p = " << pv);
      if (!clarkson_hs_check(a, b, ExponentP(pv)).passed) FAIL("Clarkson hs, p = " << pv);
    }
  }
}

TEST_CASE("clarkson reports scale homogeneously") {
  const ModelPtr m = model(Preset::s3());
  const Field a = random_field(m, 1);
  const Field b = random_field(m, 2);
  const CheckReport r1 = clarkson_sch_check(a, b, ExponentP(1.7));
  const CheckReport r2 = clarkson_sch_check(field_scale(a, 3.0), field_scale(b, 3.0), ExponentP(1.7));
  CHECK(r2.slack == doctest::Approx(3.0 * r1.slack).epsilon(1e-9));
  CHECK(r1.passed == r2.passed);
}

TEST_CASE("two-point inequality") {
  const ModelPtr m = model(Preset::s3());
  const Field h = random_field(m, 3);
  const TwoPointResult zero = two_point_check(h, zero_field(m), ExponentP(4));
  CHECK(std::abs(zero.report.slack) <= 1e-12 * zero.report.rhs);
  CHECK(!zero.critical.has_value());

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const TwoPointResult r = two_point_check(random_field(m, 2 * seed), random_field(m, 2 * seed + 1), ExponentP(2));
    CHECK(std::abs(r.report.slack) <= 1e-11 * r.report.rhs);
  }
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const TwoPointResult r = two_point_check(random_field(m, 2 * seed), random_field(m, 2 * seed + 1), ExponentP(4));
    if (!r.report.passed) FAIL("two-point, p = 4");
    worst = std::max(worst, *r.critical);
  }
  CHECK(worst <= 7.0);
  double least = INFINITY;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const TwoPointResult r = two_point_check(random_field(m, 2 * seed), random_field(m, 2 * seed + 1), ExponentP(1.5));
    if (!r.report.passed) FAIL("two-point, p = 1.5");
    least = std::min(least, *r.critical);
  }
  CHECK(least >= 0.2);
}

TEST_CASE("moduli bound functions") {
  CHECK(convexity_lower_bound(ExponentP(1.5), 1.0) == doctest::Approx(std::max(1.0 / (3.0 * 8.0), 0.2 / 8.0)));
  CHECK(convexity_lower_bound(ExponentP(3), 1.0) == doctest::Approx(1.0 / 24.0));
  CHECK(smoothness_upper_bound(ExponentP(1.5), 1.0) == doctest::Approx(1.0 / 1.5));
  CHECK(smoothness_upper_bound(ExponentP(3), 0.5) == doctest::Approx(std::min(std::pow(0.5, 1.5) / 1.5, 5.0 * 0.125)));
  // For p <= 2 the quadratic rate dominates for small epsilon.
  CHECK(convexity_lower_bound(ExponentP(1.5), 0.05) == doctest::Approx(0.2 * 0.05 * 0.05 / 8.0));
  for (double e = 0.1; e <= 2.0; e += 0.1) CHECK(hilbert_convexity(e) >= convexity_lower_bound(ExponentP(2), e));
  for (double t : {0.1, 0.5, 1.0, 3.0}) CHECK(hilbert_smoothness(t) <= smoothness_upper_bound(ExponentP(2), t));
}

TEST_CASE("modulus sampling") {
  const ModelPtr m = model(Preset::s3());
  const std::vector<double> bins{0.5, 1.0, 1.5};
  const auto conv = modulus_convexity_sample(m, ExponentP(1.5), Family::sch, bins, 2000, 7);
  REQUIRE(conv.size() == 3);
  for (const ModulusEstimate& e : conv) {
    CHECK(e.samples > 0);
    CHECK(e.estimate >= e.bound);
    CHECK(modulus_report(e, ExponentP(1.5), Family::sch).passed);
  }
  const auto hilbert = modulus_convexity_sample(m, ExponentP(2), Family::hs, bins, 2000, 7);
  for (const ModulusEstimate& e : hilbert) CHECK(e.estimate >= hilbert_convexity(e.epsilon_or_t) - 1e-12);

  const auto smooth = modulus_smoothness_sample(m, ExponentP(3), Family::sch, {0.0, 0.1, 0.5, 1.0}, 2000, 7);
  CHECK(smooth[0].estimate == 0.0);
  for (const ModulusEstimate& e : smooth) CHECK(modulus_report(e, ExponentP(3), Family::sch).passed);
  const auto hs = modulus_smoothness_sample(m, ExponentP(2), Family::sch, {0.5}, 2000, 7);
  CHECK(hs[0].estimate <= hilbert_smoothness(0.5) + 1e-12);

  // A bin nobody lands in is flagged by a zero sample count.
  const auto narrow = modulus_convexity_sample(m, ExponentP(2), Family::sch, {1.0}, 50, 7, 1e-9);
  CHECK(narrow[0].samples == 0);
  CHECK_THROWS_AS(modulus_convexity_sample(m, ExponentP(2), Family::sch, {2.5}, 1, 1), DomainError);
}

TEST_CASE("rademacher average") {
  const ModelPtr m = model(Preset::s3());
  const Field h1 = random_field(m, 1);
  const Field h2 = random_field(m, 2);
  for (double r : {1.0, 2.0, 3.0}) {
    CHECK(rademacher_average({h1}, ExponentP(1.5), Family::sch, r) ==
          doctest::Approx(lp_sch_norm(h1, ExponentP(1.5))).epsilon(1e-13));
  }
  const double n1 = lp_sch_norm(h1, ExponentP(2));
  const double n2 = lp_sch_norm(h2, ExponentP(2));
  CHECK(rademacher_average({h1, h2}, ExponentP(2), Family::sch, 2.0) ==
        doctest::Approx(std::hypot(n1, n2)).epsilon(1e-12));
  CHECK(rademacher_average({}, ExponentP(2), Family::sch, 2.0) == 0.0);

  // Independent Gray-code enumeration.
  for (Family fam : {Family::sch, Family::hs}) {
    std::vector<Field> xs{random_field(m, 5), random_field(m, 6), random_field(m, 7)};
    std::uint64_t count = 0;
    const ExponentP p(3);
    const double ref = oracle::sign_average(
        xs, 2.0, [&](const Field& f) { return family_norm(f, p, fam); }, field_axpy, &count);
    CHECK(count == 8);
    CHECK(std::abs(rademacher_average(xs, p, fam, 2.0) - ref) <= 1e-11 * ref);
  }
  CHECK_THROWS_AS(rademacher_average(std::vector<Field>(21, h1), ExponentP(2), Family::sch, 2.0), SizeError);
}

TEST_CASE("type and cotype") {
  const ModelPtr m = model(Preset::s3());
  const Field h = random_field(m, 1);
  for (double pv : {1.4, 3.0}) {
    const TypeCotypeResult single = type_cotype_check({h}, ExponentP(pv));
    CHECK(single.lower.passed);
    CHECK(single.upper.passed);
  }
  std::vector<Field> five;
  for (std::uint64_t k = 0; k < 5; ++k) five.push_back(random_field(m, 10 + k));
  const TypeCotypeResult two = type_cotype_check(five, ExponentP(2));
  CHECK(std::abs(two.lower.slack) <= 1e-10 * two.lower.rhs);
  CHECK(std::abs(two.upper.slack) <= 1e-10 * two.upper.rhs);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::vector<Field> fs;
    for (std::uint64_t k = 0; k < 5; ++k) fs.push_back(random_field(m, 100 * seed + k));
    for (double pv : {1.4, 3.0}) {
      const TypeCotypeResult r = type_cotype_check(fs, ExponentP(pv));
      CHECK(r.lower.passed);
      CHECK(r.upper.passed);
    }
  }
}

TEST_CASE("kadec-klee gap") {
  const ModelPtr m = model(Preset::s3());
  const Field h = random_field(m, 3);
  const CheckReport same = kadec_klee_gap(h, h, ExponentP(1.5));
  CHECK(same.lhs == 0.0);
  CHECK(std::abs(same.rhs) <= 1e-12);
  const CheckReport opposite = kadec_klee_gap(field_scale(h, -1.0), h, ExponentP(1.5));
  const double q = ExponentP(1.5).conjugate().value();
  CHECK(opposite.lhs == doctest::Approx(std::pow(lp_sch_norm(h, ExponentP(1.5)), q)).epsilon(1e-12));
  CHECK(std::abs(opposite.slack) <= 1e-10 * opposite.rhs);

  const Field hu = unit(h, ExponentP(1.5));
  const Field d = unit(random_field(m, 4), ExponentP(1.5));
  double prev = INFINITY;
  for (int n = 1; n <= 10; ++n) {
    const CheckReport r = kadec_klee_gap(field_lincomb(1.0, hu, 1.0 / n, d), hu, ExponentP(1.5));
    CHECK(r.passed);
    CHECK(r.rhs <= prev);
    prev = r.rhs;
  }
}

TEST_CASE("unconditional sum bound") {
  const ModelPtr m = model(Preset::s3());
  const Field h = unit(random_field(m, 1), ExponentP(1.5));
  const CheckReport one = unconditional_sum_bound({h}, ExponentP(1.5));
  CHECK(one.passed);
  CHECK(one.lhs == doctest::Approx(0.2 / 8.0));
  CHECK(one.rhs == doctest::Approx(1.0 / (3.0 * 8.0)));
  CHECK(unconditional_constant(ExponentP(1.5)) == doctest::Approx(40.0));
  CHECK(unconditional_constant(ExponentP(3)) == doctest::Approx(24.0));

  const CheckReport empty = unconditional_sum_bound({}, ExponentP(2));
  CHECK(empty.passed);
  CHECK(empty.lhs == 0.0);

  const Field base = unit(random_field(m, 2), ExponentP(3));
  std::vector<Field> fields;
  double prev_lhs = 0.0;
  for (int j = 1; j <= 10; ++j) {
    fields.push_back(field_scale(base, std::pow(2.0, -j)));
    const CheckReport r = unconditional_sum_bound(fields, ExponentP(3));
    CHECK(r.passed);
    CHECK(r.lhs >= prev_lhs);
    CHECK(r.lhs <= 1.0 / 24.0);
    prev_lhs = r.lhs;
  }
  const CheckReport big = unconditional_sum_bound({field_scale(h, 3.0)}, ExponentP(1.5));
  CHECK(!big.passed);
  CHECK(big.slack == doctest::Approx(-1.0));
}
