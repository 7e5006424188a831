#include "doctest.h"

#include "dualnorm/dualmodel.hpp"
#include "dualnorm/errors.hpp"
#include "dualnorm/field_io.hpp"
#include "helpers.hpp"

using namespace dualnorm;
using testutil::model;

namespace {

std::vector<std::size_t> dims_of(const DualModel& m) {
  std::vector<std::size_t> d;
  for (const DualEntry& e : m.entries()) d.push_back(e.dim);
  return d;
}

}  // namespace

TEST_CASE("presets") {
  CHECK(dims_of(preset_dual(Preset::torus(3))) == std::vector<std::size_t>{1, 1, 1});
  CHECK(dims_of(preset_dual(Preset::su2_trunc(4))) == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(dims_of(preset_dual(Preset::s3())) == std::vector<std::size_t>{1, 1, 2});
  CHECK(dims_of(preset_dual(Preset::custom({2, 5}))) == std::vector<std::size_t>{2, 5});
  CHECK_THROWS_AS(preset_dual(Preset::custom({})), DomainError);
  CHECK_THROWS_AS(preset_dual(Preset::torus(0)), DomainError);
  CHECK_THROWS_AS(DualModel("dup", {{"a", 1}, {"a", 2}}), DomainError);
}

TEST_CASE("preset strings") {
  CHECK(dims_of(preset_dual(Preset::parse("torus(4)"))).size() == 4);
  CHECK(dims_of(preset_dual(Preset::parse("torus:2"))).size() == 2);
  CHECK(dims_of(preset_dual(Preset::parse("su2_trunc(3)"))) == std::vector<std::size_t>{1, 2, 3});
  CHECK(dims_of(preset_dual(Preset::parse("s3"))) == std::vector<std::size_t>{1, 1, 2});
  CHECK(dims_of(preset_dual(Preset::parse("custom(1, 3)"))) == std::vector<std::size_t>{1, 3});
  CHECK_THROWS_AS(Preset::parse("klein"), DomainError);
  CHECK_THROWS_AS(Preset::parse("torus(x)"), DomainError);
  CHECK_THROWS_AS(Preset::parse("custom()"), DomainError);
}

TEST_CASE("random fields") {
  const ModelPtr m = model(Preset::su2_trunc(3));
  CHECK(random_field(m, 42) == random_field(m, 42));
  CHECK(!(random_field(m, 42) == random_field(m, 43)));
  const Field h = random_field(m, 42, Dist::hermitian);
  for (const CMatrix& b : h.blocks()) CHECK(b == adjoint(b));
  const Field p = random_field(m, 7, Dist::psd);
  for (const CMatrix& b : p.blocks()) CHECK(hermitian_eigen(b).values.front() >= -1e-10);
}

TEST_CASE("field operations") {
  const ModelPtr m = model(Preset::s3());
  const Field id = identity_field(m);
  CHECK(field_adjoint(id) == id);
  const Field h = random_field(m, 3);
  CHECK(field_lincomb(1.0, h, -1.0, h) == zero_field(m));
  const Field a = field_abs(h);
  for (std::size_t i = 0; i < h.size(); ++i) CHECK(max_abs_diff(a.block(i), matabs(h.block(i))) == 0.0);

  const Field x = random_field(m, 4);
  const Field y = random_field(m, 5);
  const Field z = random_field(m, 6);
  const Field l = field_product(field_product(x, y), z);
  const Field r = field_product(x, field_product(y, z));
  for (std::size_t i = 0; i < l.size(); ++i) CHECK(max_abs_diff(l.block(i), r.block(i)) <= 1e-12);

  const Field other = random_field(model(Preset::torus(3)), 1);
  CHECK_THROWS_AS(field_add(h, other), ModelMismatch);
  CHECK_THROWS_AS(Field(m, {CMatrix(1, 1)}), ModelMismatch);
}

TEST_CASE("json round trip") {
  const ModelPtr m = model(Preset::su2_trunc(3));
  const DualModel back = dual_model_from_json(nlohmann::json::parse(dual_model_to_json(*m).dump()));
  CHECK(back == *m);

  const Field f = random_field(m, 99);
  const std::string text = field_to_json(f).dump();
  CHECK(field_from_json(nlohmann::json::parse(text), m) == f);
  const Field loose = field_from_json(nlohmann::json::parse(text));
  CHECK(loose.blocks() == f.blocks());
  CHECK(loose.model().name() == m->name());
  CHECK_THROWS_AS(field_from_json(nlohmann::json::parse(text), model(Preset::s3())), ModelMismatch);
}
