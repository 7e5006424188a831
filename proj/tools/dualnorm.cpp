// dualnorm: run verification suites and inspect fields from the shell.
//
// Exit status: 0 all checks passed, 1 some check failed (or a numerical
// routine broke down), 2 bad arguments, configuration or I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dualnorm/errors.hpp"
#include "dualnorm/field_io.hpp"
#include "dualnorm/norms.hpp"
#include "dualnorm/report_io.hpp"
#include "dualnorm/suite.hpp"

namespace {

using namespace dualnorm;

constexpr int kExitFailed = 1;
constexpr int kExitConfig = 2;

std::uint64_t default_seed() {
  const char* env = std::getenv("DUALNORM_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used, 0);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string("DUALNORM_SEED is not an unsigned integer: '") + env + "'");
  }
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out.flush()) throw std::runtime_error("failed writing '" + path + "'");
}

struct VerifyArgs {
  std::string suite;
  std::string dual = "s3";
  std::string p_list = "1.5,2,3";
  std::string family = "sch";
  std::size_t trials = 10;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::string out;
  std::string format = "json";
};

int run_verify(const VerifyArgs& a) {
  SuiteConfig cfg;
  cfg.suite = parse_suite(a.suite);
  cfg.dual = resolve_dual(a.dual);
  cfg.p_list = parse_p_list(a.p_list);
  cfg.family = parse_family_choice(a.family);
  cfg.trials = a.trials;
  cfg.seed = a.seed ? *a.seed : default_seed();
  cfg.tol_override = a.tol;
  ReportFormat format;
  try {
    format = parse_report_format(a.format);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }

  const std::vector<CheckReport> reports = run_suite(cfg);
  write_text(format_reports(reports, format), a.out);

  std::size_t failed = 0;
  for (const CheckReport& r : reports) failed += r.passed ? 0 : 1;
  std::cerr << reports.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? 0 : kExitFailed;
}

struct RandomArgs {
  std::string dual = "s3";
  std::optional<std::uint64_t> seed;
  std::string dist = "ginibre";
  std::string out;
};

int run_field_random(const RandomArgs& a) {
  static const std::map<std::string, Dist> dists = {
      {"ginibre", Dist::ginibre}, {"hermitian", Dist::hermitian}, {"psd", Dist::psd}};
  const auto it = dists.find(a.dist);
  if (it == dists.end()) throw ConfigError("unknown distribution '" + a.dist + "'");
  const ModelPtr model = resolve_dual(a.dual);
  const Field f = random_field(model, a.seed ? *a.seed : default_seed(), it->second);
  write_text(field_to_json(f).dump(2) + "\n", a.out);
  return 0;
}

struct ShowArgs {
  std::string file;
  std::string dual;
  std::string p_list = "1,2,inf";
};

int run_field_show(const ShowArgs& a) {
  Field f = [&] {
    try {
      const nlohmann::json j = read_json_file(a.file);
      return a.dual.empty() ? field_from_json(j) : field_from_json(j, resolve_dual(a.dual));
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }();
  nlohmann::ordered_json out;
  out["model"] = f.model().name();
  nlohmann::ordered_json dims = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < f.size(); ++i) dims.push_back(f.model().dim(i));
  out["dims"] = dims;
  nlohmann::ordered_json norms = nlohmann::ordered_json::array();
  for (ExponentP p : parse_p_list(a.p_list)) {
    nlohmann::ordered_json row;
    row["p"] = p.to_string();
    row["sch"] = lp_sch_norm(f, p);
    row["hs"] = lp_hs_norm(f, p);
    norms.push_back(row);
  }
  out["norms"] = norms;
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative lp norms over truncated unitary duals: verification suites and field utilities"};
  app.require_subcommand(1);

  VerifyArgs verify;
  CLI::App* v = app.add_subcommand("verify", "run a verification suite and write a report");
  v->add_option("suite", verify.suite, "norms, holder, adjoint, duality, interpolation, clarkson, two_point, "
                                       "moduli, type_cotype, kadec_klee or all")
      ->required();
  v->add_option("--dual", verify.dual, "preset (torus(n), su2_trunc(N), s3, custom(d1,...)) or dual JSON file")
      ->capture_default_str();
  v->add_option("--p", verify.p_list, "comma separated exponents, e.g. 1.5,2,inf")->capture_default_str();
  v->add_option("--family", verify.family, "sch, hs or both")->capture_default_str();
  v->add_option("--trials", verify.trials, "draws per exponent (samples for moduli)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  v->add_option("--seed", verify.seed, "base seed (default $DUALNORM_SEED, else 0)");
  v->add_option("--tol", verify.tol, "relative tolerance replacing the per-check defaults")
      ->check(CLI::NonNegativeNumber);
  v->add_option("--out", verify.out, "report path (default stdout)");
  v->add_option("--format", verify.format, "json or csv")->capture_default_str();

  CLI::App* field = app.add_subcommand("field", "field utilities");
  field->require_subcommand(1);
  RandomArgs random;
  CLI::App* fr = field->add_subcommand("random", "draw a seeded random field");
  fr->add_option("--dual", random.dual, "preset or dual JSON file")->capture_default_str();
  fr->add_option("--seed", random.seed, "seed (default $DUALNORM_SEED, else 0)");
  fr->add_option("--dist", random.dist, "ginibre, hermitian or psd")->capture_default_str();
  fr->add_option("--out", random.out, "output path (default stdout)");
  ShowArgs show;
  CLI::App* fs = field->add_subcommand("show", "print block sizes and norms of a field file");
  fs->add_option("file", show.file, "field JSON")->required();
  fs->add_option("--dual", show.dual, "decode onto this dual model instead of inferring it");
  fs->add_option("--p", show.p_list, "exponents to evaluate")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (v->parsed()) return run_verify(verify);
    if (fr->parsed()) return run_field_random(random);
    if (fs->parsed()) return run_field_show(show);
  } catch (const ConfigError& e) {
    std::cerr << "dualnorm: " << e.what() << "\n";
    return kExitConfig;
  } catch (const FactorizationError& e) {
    std::cerr << "dualnorm: numerical failure: " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "dualnorm: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
