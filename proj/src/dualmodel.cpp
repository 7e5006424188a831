#include "dualnorm/dualmodel.hpp"

#include <cctype>
#include <random>
#include <set>

#include "dualnorm/errors.hpp"

namespace dualnorm {

DualModel::DualModel(std::string name, std::vector<DualEntry> entries)
    : name_(std::move(name)), entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("dual model '" + name_ + "' has no entries");
  std::set<std::string> seen;
  for (const DualEntry& e : entries_) {
    if (e.dim < 1) throw DomainError("dual model entry '" + e.label + "' has dimension 0");
    if (!seen.insert(e.label).second) throw DomainError("duplicate dual model label '" + e.label + "'");
  }
}

namespace {

std::size_t parse_count(const std::string& s, const std::string& whole) {
  if (s.empty()) throw DomainError("malformed preset '" + whole + "'");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw DomainError("malformed preset '" + whole + "'");
  }
  return std::stoul(s);
}

std::string strip(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Preset Preset::parse(const std::string& raw) {
  const std::string text = strip(raw);
  if (text == "s3" || text == "S3") return s3();
  std::string head;
  std::string args;
  if (auto open = text.find('('); open != std::string::npos) {
    if (text.back() != ')') throw DomainError("malformed preset '" + text + "'");
    head = text.substr(0, open);
    args = text.substr(open + 1, text.size() - open - 2);
  } else if (auto colon = text.find(':'); colon != std::string::npos) {
    head = text.substr(0, colon);
    args = text.substr(colon + 1);
  } else {
    throw DomainError("unknown dual preset '" + text + "'");
  }
  head = strip(head);
  if (head == "torus") return torus(parse_count(strip(args), text));
  if (head == "su2_trunc" || head == "su2") return su2_trunc(parse_count(strip(args), text));
  if (head == "custom") {
    std::vector<std::size_t> dims;
    std::size_t start = 0;
    while (start <= args.size()) {
      const std::size_t comma = args.find(',', start);
      const std::string part = strip(args.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      dims.push_back(parse_count(part, text));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return custom(std::move(dims));
  }
  throw DomainError("unknown dual preset '" + text + "'");
}

DualModel preset_dual(const Preset& preset) {
  std::vector<DualEntry> entries;
  switch (preset.kind) {
    case Preset::Kind::torus:
      if (preset.n == 0) throw DomainError("torus preset needs at least one entry");
      for (std::size_t k = 0; k < preset.n; ++k) entries.push_back({"chi" + std::to_string(k), 1});
      return DualModel("torus(" + std::to_string(preset.n) + ")", std::move(entries));
    case Preset::Kind::su2_trunc:
      if (preset.n == 0) throw DomainError("su2_trunc preset needs a positive maximal dimension");
      // Spin j = (d - 1)/2, labelled by 2j.
      for (std::size_t d = 1; d <= preset.n; ++d) entries.push_back({"spin2j=" + std::to_string(d - 1), d});
      return DualModel("su2_trunc(" + std::to_string(preset.n) + ")", std::move(entries));
    case Preset::Kind::s3:
      return DualModel("s3", {{"trivial", 1}, {"sign", 1}, {"standard", 2}});
    case Preset::Kind::custom: {
      if (preset.dims.empty()) throw DomainError("custom preset needs a non-empty dims list");
      std::string name = "custom(";
      for (std::size_t k = 0; k < preset.dims.size(); ++k) {
        if (preset.dims[k] == 0) throw DomainError("custom preset dims must be positive");
        entries.push_back({"xi" + std::to_string(k), preset.dims[k]});
        name += (k ? "," : "") + std::to_string(preset.dims[k]);
      }
      return DualModel(name + ")", std::move(entries));
    }
  }
  throw DomainError("unknown preset kind");
}

Field::Field(ModelPtr model, std::vector<CMatrix> blocks) : model_(std::move(model)), blocks_(std::move(blocks)) {
  if (!model_) throw ModelMismatch("field without a dual model");
  if (blocks_.size() != model_->size()) {
    throw ModelMismatch("field has " + std::to_string(blocks_.size()) + " blocks, model '" + model_->name() +
                        "' has " + std::to_string(model_->size()) + " entries");
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const std::size_t d = model_->dim(i);
    if (blocks_[i].rows() != d || blocks_[i].cols() != d) {
      throw ModelMismatch("block " + std::to_string(i) + " is " + std::to_string(blocks_[i].rows()) + "x" +
                          std::to_string(blocks_[i].cols()) + ", expected " + std::to_string(d) + "x" +
                          std::to_string(d));
    }
  }
}

Field random_field(const ModelPtr& model, std::uint64_t seed, Dist dist) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  std::vector<CMatrix> blocks;
  blocks.reserve(model->size());
  for (const DualEntry& e : model->entries()) {
    CMatrix g(e.dim, e.dim);
    for (Complex& z : g.entries()) {
      const double re = normal(rng);
      const double im = normal(rng);
      z = Complex(re, im);
    }
    switch (dist) {
      case Dist::ginibre:
        blocks.push_back(std::move(g));
        break;
      case Dist::hermitian:
        blocks.push_back(0.5 * (g + adjoint(g)));
        break;
      case Dist::psd: {
        CMatrix p = adjoint(g) * g;
        blocks.push_back(0.5 * (p + adjoint(p)));
        break;
      }
    }
  }
  return Field(model, std::move(blocks));
}

Field zero_field(const ModelPtr& model) {
  std::vector<CMatrix> blocks;
  for (const DualEntry& e : model->entries()) blocks.emplace_back(e.dim, e.dim);
  return Field(model, std::move(blocks));
}

Field identity_field(const ModelPtr& model) {
  std::vector<CMatrix> blocks;
  for (const DualEntry& e : model->entries()) blocks.push_back(CMatrix::identity(e.dim));
  return Field(model, std::move(blocks));
}

void require_same_model(const Field& a, const Field& b) {
  if (a.model_ptr() != b.model_ptr() && !(a.model() == b.model())) {
    throw ModelMismatch("fields live on different dual models ('" + a.model().name() + "' vs '" +
                        b.model().name() + "')");
  }
}

Field field_adjoint(const Field& h) {
  return field_map(h, [](const CMatrix& b) { return adjoint(b); });
}

Field field_abs(const Field& h) {
  return field_map(h, [](const CMatrix& b) { return matabs(b); });
}

Field field_lincomb(Complex alpha, const Field& h1, Complex beta, const Field& h2) {
  require_same_model(h1, h2);
  std::vector<CMatrix> out;
  out.reserve(h1.size());
  for (std::size_t i = 0; i < h1.size(); ++i) out.push_back(alpha * h1.block(i) + beta * h2.block(i));
  return Field(h1.model_ptr(), std::move(out));
}

Field field_product(const Field& h1, const Field& h2) {
  require_same_model(h1, h2);
  std::vector<CMatrix> out;
  out.reserve(h1.size());
  for (std::size_t i = 0; i < h1.size(); ++i) out.push_back(h1.block(i) * h2.block(i));
  return Field(h1.model_ptr(), std::move(out));
}

Field field_scale(const Field& h, Complex alpha) {
  return field_map(h, [alpha](const CMatrix& b) { return alpha * b; });
}

Field field_add(const Field& h1, const Field& h2) { return field_lincomb(1.0, h1, 1.0, h2); }
Field field_sub(const Field& h1, const Field& h2) { return field_lincomb(1.0, h1, -1.0, h2); }

}  // namespace dualnorm
