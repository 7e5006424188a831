#pragma once

#include <string>

#include "dualnorm/dualmodel.hpp"
#include "json.hpp"

namespace dualnorm {

/// {"name": str, "entries": [{"label": str, "dim": int}, ...]}
nlohmann::ordered_json dual_model_to_json(const DualModel& model);
DualModel dual_model_from_json(const nlohmann::json& j);

/// {"model": str, "blocks": [[[ [re, im], ... ], ...], ...]} with rows
/// outermost. Doubles are written with round-trip precision, so decoding an
/// encoded field gives it back bit for bit.
nlohmann::ordered_json field_to_json(const Field& field);
/// Decodes onto a known model; the "model" name must match.
Field field_from_json(const nlohmann::json& j, const ModelPtr& model);
/// Decodes without a model: builds custom dims from the block sizes, keeping
/// the stored model name.
Field field_from_json(const nlohmann::json& j);

/// Reads a JSON file; failures name the path.
nlohmann::json read_json_file(const std::string& path);

}  // namespace dualnorm
