#include "dualnorm/field_io.hpp"

#include <fstream>

#include "dualnorm/errors.hpp"

namespace dualnorm {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json dual_model_to_json(const DualModel& model) {
  ordered_json entries = ordered_json::array();
  for (const DualEntry& e : model.entries()) {
    ordered_json item;
    item["label"] = e.label;
    item["dim"] = e.dim;
    entries.push_back(std::move(item));
  }
  ordered_json j;
  j["name"] = model.name();
  j["entries"] = std::move(entries);
  return j;
}

DualModel dual_model_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw std::invalid_argument("dual model JSON needs an \"entries\" array");
  }
  std::vector<DualEntry> entries;
  for (const json& e : j["entries"]) {
    const auto dim = e.at("dim").get<long long>();
    if (dim < 1) throw DomainError("dual model entry dimension must be positive");
    entries.push_back({e.at("label").get<std::string>(), static_cast<std::size_t>(dim)});
  }
  return DualModel(j.value("name", std::string("custom")), std::move(entries));
}

ordered_json field_to_json(const Field& field) {
  ordered_json blocks = ordered_json::array();
  for (const CMatrix& b : field.blocks()) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < b.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t k = 0; k < b.cols(); ++k) row.push_back({b(i, k).real(), b(i, k).imag()});
      rows.push_back(std::move(row));
    }
    blocks.push_back(std::move(rows));
  }
  ordered_json j;
  j["model"] = field.model().name();
  j["blocks"] = std::move(blocks);
  return j;
}

namespace {

CMatrix block_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("field block must be a non-empty array of rows");
  const std::size_t n = rows.size();
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != n) throw ModelMismatch("field block is not square");
    for (const json& z : row) {
      if (!z.is_array() || z.size() != 2) throw std::invalid_argument("complex entry must be [re, im]");
      entries.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
  }
  return CMatrix(n, n, std::move(entries));
}

std::vector<CMatrix> blocks_from_json(const json& j) {
  if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array()) {
    throw std::invalid_argument("field JSON needs a \"blocks\" array");
  }
  std::vector<CMatrix> blocks;
  for (const json& b : j["blocks"]) blocks.push_back(block_from_json(b));
  return blocks;
}

}  // namespace

Field field_from_json(const json& j, const ModelPtr& model) {
  if (j.contains("model") && j["model"].get<std::string>() != model->name()) {
    throw ModelMismatch("field is stored for model '" + j["model"].get<std::string>() + "', not '" +
                        model->name() + "'");
  }
  return Field(model, blocks_from_json(j));
}

Field field_from_json(const json& j) {
  std::vector<CMatrix> blocks = blocks_from_json(j);
  std::vector<DualEntry> entries;
  for (std::size_t k = 0; k < blocks.size(); ++k) entries.push_back({"xi" + std::to_string(k), blocks[k].rows()});
  auto model = std::make_shared<const DualModel>(j.value("model", std::string("custom")), std::move(entries));
  return Field(model, std::move(blocks));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace dualnorm
