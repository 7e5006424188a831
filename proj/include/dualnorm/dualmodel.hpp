#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dualnorm/matcore.hpp"

namespace dualnorm {

struct DualEntry {
  std::string label;
  std::size_t dim = 1;

  friend bool operator==(const DualEntry&, const DualEntry&) = default;
};

/// A finite truncation of a unitary dual: labelled representation classes
/// and their dimensions. Entries are non-empty, labels unique, dims >= 1.
class DualModel {
 public:
  DualModel(std::string name, std::vector<DualEntry> entries);

  const std::string& name() const { return name_; }
  const std::vector<DualEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t dim(std::size_t i) const { return entries_[i].dim; }

  friend bool operator==(const DualModel&, const DualModel&) = default;

 private:
  std::string name_;
  std::vector<DualEntry> entries_;
};

struct Preset {
  enum class Kind { torus, su2_trunc, s3, custom };
  Kind kind = Kind::s3;
  std::size_t n = 0;             // torus entry count or su2 maximal dimension
  std::vector<std::size_t> dims;  // custom only

  static Preset torus(std::size_t entries) { return {Kind::torus, entries, {}}; }
  static Preset su2_trunc(std::size_t max_dim) { return {Kind::su2_trunc, max_dim, {}}; }
  static Preset s3() { return {Kind::s3, 0, {}}; }
  static Preset custom(std::vector<std::size_t> dims) { return {Kind::custom, 0, std::move(dims)}; }

  /// Accepts "torus(4)", "torus:4", "su2_trunc(3)", "s3", "custom(1,1,2)".
  static Preset parse(const std::string& text);
};

/// torus(n): n one-dimensional entries; su2_trunc(N): dims 1..N; s3: dims
/// (1,1,2); custom: the given dims. Throws DomainError on zero parameters or
/// an empty dims list.
DualModel preset_dual(const Preset& preset);

using ModelPtr = std::shared_ptr<const DualModel>;

/// One square block per model entry, block i of size dim_i.
class Field {
 public:
  /// Throws ModelMismatch if the block count or any block shape disagrees.
  Field(ModelPtr model, std::vector<CMatrix> blocks);

  const DualModel& model() const { return *model_; }
  const ModelPtr& model_ptr() const { return model_; }
  std::size_t size() const { return blocks_.size(); }
  const CMatrix& block(std::size_t i) const { return blocks_[i]; }
  const std::vector<CMatrix>& blocks() const { return blocks_; }

  friend bool operator==(const Field& a, const Field& b) {
    return *a.model_ == *b.model_ && a.blocks_ == b.blocks_;
  }

 private:
  ModelPtr model_;
  std::vector<CMatrix> blocks_;
};

enum class Dist { ginibre, hermitian, psd };

/// Deterministic in (model, seed, dist). Ginibre entries have independent
/// real and imaginary parts of variance 1/2, so E|z|^2 = 1.
Field random_field(const ModelPtr& model, std::uint64_t seed, Dist dist = Dist::ginibre);

Field zero_field(const ModelPtr& model);
Field identity_field(const ModelPtr& model);

/// Throws ModelMismatch unless both fields live on equal models.
void require_same_model(const Field& a, const Field& b);

Field field_adjoint(const Field& h);
Field field_abs(const Field& h);
Field field_lincomb(Complex alpha, const Field& h1, Complex beta, const Field& h2);
Field field_product(const Field& h1, const Field& h2);
Field field_scale(const Field& h, Complex alpha);
Field field_add(const Field& h1, const Field& h2);
Field field_sub(const Field& h1, const Field& h2);

/// Applies fn to each block; fn must preserve the block shape.
template <class Fn>
Field field_map(const Field& h, Fn fn) {
  std::vector<CMatrix> out;
  out.reserve(h.size());
  for (const CMatrix& b : h.blocks()) out.push_back(fn(b));
  return Field(h.model_ptr(), std::move(out));
}

}  // namespace dualnorm
