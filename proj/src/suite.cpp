#include "dualnorm/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <tuple>

#include "dualnorm/duality.hpp"
#include "dualnorm/errors.hpp"
#include "dualnorm/field_io.hpp"
#include "dualnorm/inequalities.hpp"
#include "dualnorm/interpolation.hpp"
#include "dualnorm/norms.hpp"
#include "dualnorm/seed.hpp"

namespace dualnorm {

namespace {

const std::vector<std::pair<SuiteId, const char*>> kSuiteNames = {
    {SuiteId::norms, "norms"},         {SuiteId::holder, "holder"},
    {SuiteId::adjoint, "adjoint"},     {SuiteId::duality, "duality"},
    {SuiteId::interpolation, "interpolation"}, {SuiteId::clarkson, "clarkson"},
    {SuiteId::two_point, "two_point"}, {SuiteId::moduli, "moduli"},
    {SuiteId::type_cotype, "type_cotype"},     {SuiteId::kadec_klee, "kadec_klee"},
    {SuiteId::all, "all"},
};

bool open_exponent(ExponentP p) { return p.is_finite() && p.value() > 1.0; }

bool applicable(SuiteId id, ExponentP p) {
  switch (id) {
    case SuiteId::norms:
    case SuiteId::holder:
    case SuiteId::adjoint:
    case SuiteId::duality:
      return true;
    default:
      return open_exponent(p);
  }
}

std::string fmt(const char* pattern, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string trial_tag(std::size_t k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "trial=%06zu", k);
  return buf;
}

// Generates the reports of one suite for one exponent.
class Runner {
 public:
  Runner(const SuiteConfig& cfg, SuiteId id, ExponentP p, std::vector<CheckReport>& out)
      : cfg_(cfg), id_(id), name_(to_string(id)), p_(p), out_(out) {
    if (cfg.family != FamilyChoice::hs) families_.push_back(Family::sch);
    if (cfg.family != FamilyChoice::sch) families_.push_back(Family::hs);
  }

  void run() {
    switch (id_) {
      case SuiteId::norms: return norms();
      case SuiteId::holder: return holder();
      case SuiteId::adjoint: return adjoint();
      case SuiteId::duality: return duality();
      case SuiteId::interpolation: return interpolation();
      case SuiteId::clarkson: return clarkson();
      case SuiteId::two_point: return two_point();
      case SuiteId::moduli: return moduli();
      case SuiteId::type_cotype: return type_cotype();
      case SuiteId::kadec_klee: return kadec_klee();
      case SuiteId::all: break;
    }
  }

 private:
  double tol(double fallback) const { return cfg_.tol_override.value_or(fallback); }

  std::uint64_t trial_seed(std::size_t k) const { return mix_seed(cfg_.seed, name_, k); }

  Field draw(std::size_t k, const char* stream, std::uint64_t index = 0, Dist dist = Dist::ginibre) const {
    return random_field(cfg_.dual, mix_seed(trial_seed(k), stream, index), dist);
  }

  std::string prefix(const std::string& family) const { return family + "/p=" + p_.to_string(); }

  void push(CheckReport r, const std::string& case_id) {
    r.suite = name_;
    r.case_id = case_id;
    out_.push_back(std::move(r));
  }

  void norms() {
    for (std::size_t k = 0; k < cfg_.trials; ++k) {
      const Field x = draw(k, "x");
      const Field y = draw(k, "y");
      push(embedding_check(x, p_, tol(kDefaultTolRel)), prefix("sch_hs") + "/" + trial_tag(k) + "/embedding");
      for (Family f : families_) {
        push(triangle_check(x, y, p_, f, tol(kDefaultTolRel)), prefix(to_string(f)) + "/" + trial_tag(k) + "/triangle");
      }
    }
  }

  void holder() {
    // Partners q of p: the conjugate, p itself once 1/p + 1/p <= 1, and inf.
    std::vector<std::pair<std::string, ExponentP>> partners = {{"conj", p_.conjugate()}};
    if (p_.reciprocal() * 2.0 <= 1.0) partners.emplace_back("same", p_);
    if (open_exponent(p_)) partners.emplace_back("inf", ExponentP::infinity());
    for (std::size_t k = 0; k < cfg_.trials; ++k) {
      const Field a = draw(k, "a");
      const Field b = draw(k, "b");
      for (const auto& [tag, q] : partners) {
        push(holder_check(a, b, p_, q, tol(kDefaultTolRel)),
             prefix("sch") + "/" + trial_tag(k) + "/q=" + tag);
      }
    }
  }

  void adjoint() {
    for (std::size_t k = 0; k < cfg_.trials; ++k) {
      const Field h = draw(k, "h");
      for (Family f : families_) {
        push(adjoint_norm_check(h, p_, f, tol(kDefaultTolRel)), prefix(to_string(f)) + "/" + trial_tag(k));
      }
    }
  }

  void duality() {
    const DirectSumSpec spec(ExponentP(1.5), 3.0);
    std::size_t largest = 0;
    for (std::size_t i = 0; i < cfg_.dual->size(); ++i) {
      if (cfg_.dual->dim(i) > cfg_.dual->dim(largest)) largest = i;
    }
    for (std::size_t k = 0; k < cfg_.trials; ++k) {
      const std::string base = prefix("sch") + "/" + trial_tag(k);
      const Field h = draw(k, "h");
      const Field f = draw(k, "f");
      push(pairing_bound_check(h, field_scale(f, 1.0 / lp_sch_norm(f, p_.conjugate())), p_, tol(kDefaultTolRel)),
           base + "/pairing_bound");
      if (p_.is_finite()) push(extremizer_check(h, p_, tol(1e-9)), base + "/extremizer");
      if (!open_exponent(p_)) continue;
      const ExponentP q = p_.conjugate();
      const Field a = draw(k, "psd_a", 0, Dist::psd);
      const Field b = draw(k, "psd_b", 0, Dist::psd);
      push(trace_cyclicity_check(a.block(largest), b.block(largest), q.value() / 2.0, tol(1e-9)),
           base + "/trace_cyclicity");
      const Field h2 = draw(k, "h2");
      const Field f2 = draw(k, "f2");
      push(direct_sum_dual_pair_check(h, h2, f, f2, p_, spec, tol(kDefaultTolRel)), base + "/direct_sum");
      const auto [s1, s2] = direct_sum_saturator(h, h2, p_, spec);
      const CheckReport sat = direct_sum_dual_pair_check(h, h2, s1, s2, p_, spec, tol(kDefaultTolRel));
      push(equality_report("direct_sum_duality_saturated", sat.p, sat.lhs, sat.rhs, tol(1e-9), sat.inputs_digest),
           base + "/direct_sum_saturated");
    }
  }

  InterpSpec interpolation_spec() const {
    const double p = p_.value();
    ExponentP p0(1.0), p1(2.0);
    if (p == 2.0) {
      p1 = ExponentP(4.0);
    } else if (p > 2.0) {
      p0 = ExponentP(2.0);
      p1 = ExponentP(p < 4.0 ? 4.0 : 2.0 * p);
    }
    const double theta = (p0.reciprocal() - p_.reciprocal()) / (p0.reciprocal() - p1.reciprocal());
    return InterpSpec(p0, p1, theta);
  }

  void interpolation() {
    const InterpSpec spec = interpolation_spec();
    const std::vector<double> grid = default_t_grid();
    const std::string tag = "/p0=" + spec.p0().to_string() + "/p1=" + spec.p1().to_string();
    for (std::size_t k = 0; k < cfg_.trials; ++k) {
      const std::string base = prefix("sch") + tag + "/" + trial_tag(k);
      const Field h = draw(k, "h");
      const Field g = draw(k, "g");
      push(three_lines_check(h, g, spec, grid, tol(1e-9)), base + "/three_lines");
      const double defect = boundary_norm_defect(h, spec, grid);
      push(equality_report("interp_boundary_norm", p_.value(), 1.0 + defect, 1.0, tol(1e-9), Digest().add(h).add(p_).hex()),
           base + "/boundary_norm");
      push(interp_norm_consistency(h, spec, grid, tol(1e-8)), base + "/saturation");
    }
  }

  void clarkson() {
    for (std::size_t k = 0; k < cfg_.trials; ++k) {
      const Field x = draw(k, "x");
      const Field y = draw(k, "y");
      for (Family f : families_) {
        push(clarkson_check(x, y, p_, f, tol(kDefaultTolRel)), prefix(to_string(f)) + "/" + trial_tag(k));
      }
    }
  }

  void two_point() {
    const double constant = TwoPointConstants(p_).effective();
    const bool upper = p_.value() >= 2.0;
    for (Family f : families_) {
      double extreme = upper ? -INFINITY : INFINITY;
      Digest digest;
      for (std::size_t k = 0; k < cfg_.trials; ++k) {
        const Field x = draw(k, "x");
        const Field y = draw(k, "y");
        TwoPointResult r = two_point_check(x, y, p_, f, tol(kDefaultTolRel));
        digest.add(r.report.inputs_digest);
        if (r.critical) extreme = upper ? std::max(extreme, *r.critical) : std::min(extreme, *r.critical);
        push(std::move(r.report), prefix(to_string(f)) + "/" + trial_tag(k));
      }
      // The constant needed by the worst pair drawn, against the one proved.
      const std::string anchor = "two_point_constant_" + to_string(f);
      CheckReport c = upper ? inequality_report(anchor, p_.value(), extreme, constant, tol(kDefaultTolRel), digest.hex())
                            : inequality_report(anchor, p_.value(), constant, extreme, tol(kDefaultTolRel), digest.hex());
      push(std::move(c), prefix(to_string(f)) + "/critical_constant");
    }
  }

  void moduli() {
    std::vector<double> bins;
    for (int i = 1; i <= 19; ++i) bins.push_back(i / 10.0);
    const std::vector<double> t_grid = {0.1, 0.5, 1.0};
    const bool hilbert = p_.value() == 2.0 && cfg_.trials >= kHilbertWindowMinSamples;
    const std::uint64_t seed = mix_seed(cfg_.seed, name_, 0);
    for (Family f : families_) {
      const std::string base = prefix(to_string(f));
      for (const ModulusEstimate& e : modulus_convexity_sample(cfg_.dual, p_, f, bins, cfg_.trials, seed)) {
        if (e.samples == 0) continue;
        const std::string id = base + "/eps=" + fmt("%.2f", e.epsilon_or_t);
        push(modulus_report(e, p_, f, tol(kDefaultTolRel)), id);
        if (hilbert) push(hilbert_modulus_report(e, f, 0.05, tol(kDefaultTolRel)), id + "/hilbert");
      }
      for (const ModulusEstimate& e : modulus_smoothness_sample(cfg_.dual, p_, f, t_grid, cfg_.trials, seed)) {
        const std::string id = base + "/t=" + fmt("%.2f", e.epsilon_or_t);
        push(modulus_report(e, p_, f, tol(kDefaultTolRel)), id);
        if (hilbert) push(hilbert_modulus_report(e, f, 0.05, tol(kDefaultTolRel)), id + "/hilbert");
      }
    }
    // Fields of norms 1, 1/2, ..., 1/5 in the Schatten family.
    std::vector<Field> fields;
    for (std::uint64_t j = 0; j < 5; ++j) {
      const Field h = random_field(cfg_.dual, mix_seed(seed, "unconditional", j));
      fields.push_back(field_scale(h, 1.0 / ((j + 1.0) * lp_sch_norm(h, p_))));
    }
    push(unconditional_sum_bound(fields, p_, tol(kDefaultTolRel)), prefix("sch") + "/unconditional_sum");
  }

  void type_cotype() {
    for (std::size_t k = 0; k < cfg_.trials; ++k) {
      std::vector<Field> fields;
      for (std::uint64_t j = 0; j < 5; ++j) fields.push_back(draw(k, "h", j));
      for (Family f : families_) {
        TypeCotypeResult r = type_cotype_check(fields, p_, f, tol(kDefaultTolRel));
        const std::string base = prefix(to_string(f)) + "/" + trial_tag(k);
        push(std::move(r.lower), base + "/lower");
        push(std::move(r.upper), base + "/upper");
      }
    }
  }

  void kadec_klee() {
    const Family f = Family::sch;
    for (std::size_t k = 0; k < cfg_.trials; ++k) {
      Field h = draw(k, "h");
      h = field_scale(h, 1.0 / family_norm(h, p_, f));
      Field d = draw(k, "d");
      d = field_scale(d, 1.0 / family_norm(d, p_, f));
      for (int n : {1, 2, 5, 10, 20, 50}) {
        char tag[16];
        std::snprintf(tag, sizeof tag, "/n=%03d", n);
        push(kadec_klee_gap(field_lincomb(1.0, h, 1.0 / n, d), h, p_, tol(kDefaultTolRel)),
             prefix("sch") + "/" + trial_tag(k) + tag);
      }
    }
  }

  const SuiteConfig& cfg_;
  SuiteId id_;
  std::string name_;
  ExponentP p_;
  std::vector<CheckReport>& out_;
  std::vector<Family> families_;
};

}  // namespace

std::string to_string(SuiteId id) {
  for (const auto& [s, name] : kSuiteNames) {
    if (s == id) return name;
  }
  return "unknown";
}

SuiteId parse_suite(const std::string& text) {
  for (const auto& [s, name] : kSuiteNames) {
    if (text == name) return s;
  }
  throw ConfigError("unknown suite '" + text + "'");
}

const std::vector<SuiteId>& registered_suites() {
  static const std::vector<SuiteId> ids = [] {
    std::vector<SuiteId> v;
    for (const auto& entry : kSuiteNames) {
      if (entry.first != SuiteId::all) v.push_back(entry.first);
    }
    return v;
  }();
  return ids;
}

FamilyChoice parse_family_choice(const std::string& text) {
  if (text == "sch") return FamilyChoice::sch;
  if (text == "hs") return FamilyChoice::hs;
  if (text == "both") return FamilyChoice::both;
  throw ConfigError("unknown family '" + text + "' (expected sch, hs or both)");
}

ModelPtr resolve_dual(const std::string& text) {
  const bool looks_like_file = text.find('/') != std::string::npos ||
                               (text.size() > 5 && text.compare(text.size() - 5, 5, ".json") == 0);
  if (looks_like_file || std::filesystem::is_regular_file(text)) {
    try {
      return std::make_shared<const DualModel>(dual_model_from_json(read_json_file(text)));
    } catch (const std::exception& e) {
      throw ConfigError("cannot load dual model from '" + text + "': " + e.what());
    }
  }
  try {
    return std::make_shared<const DualModel>(preset_dual(Preset::parse(text)));
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

std::vector<ExponentP> parse_p_list(const std::string& text) {
  std::vector<ExponentP> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(ExponentP::parse(item));
    } catch (const std::exception& e) {
      throw ConfigError("bad exponent '" + item + "': " + e.what());
    }
  }
  if (out.empty()) throw ConfigError("the exponent list is empty");
  return out;
}

std::vector<CheckReport> run_suite(const SuiteConfig& config) {
  if (!config.dual) throw ConfigError("no dual model given");
  if (config.p_list.empty()) throw ConfigError("the exponent list is empty");
  if (config.trials < 1) throw ConfigError("trials must be at least 1");
  if (config.tol_override && !(*config.tol_override >= 0.0)) throw ConfigError("tolerance must be non-negative");

  std::vector<SuiteId> ids = config.suite == SuiteId::all ? registered_suites() : std::vector<SuiteId>{config.suite};
  if (config.suite != SuiteId::all) {
    for (ExponentP p : config.p_list) {
      if (!applicable(config.suite, p)) {
        throw ConfigError("suite " + to_string(config.suite) + " needs 1 < p < inf (got " + p.to_string() + ")");
      }
    }
  }
  std::vector<CheckReport> out;
  for (SuiteId id : ids) {
    for (ExponentP p : config.p_list) {
      if (applicable(id, p)) Runner(config, id, p, out).run();
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) {
    return std::tie(a.suite, a.case_id) < std::tie(b.suite, b.case_id);
  });
  return out;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

}  // namespace dualnorm
