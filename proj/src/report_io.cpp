#include "dualnorm/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace dualnorm {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const char* const kColumns[] = {"suite", "case_id", "p",      "lhs",           "rhs",
                                "slack", "tol",     "passed", "inputs_digest", "paper_anchor"};

std::string real_text(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_real(const std::string& s) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

ordered_json real_json(double v) {
  if (std::isfinite(v)) return v;
  return real_text(v);
}

double real_from_json(const json& j) {
  if (j.is_string()) return parse_real(j.get<std::string>());
  return j.get<double>();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\r' || c == '\n') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

ReportFormat parse_report_format(const std::string& text) {
  if (text == "json") return ReportFormat::json;
  if (text == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown report format '" + text + "'");
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const CheckReport& r : reports) {
    ordered_json o;
    o["suite"] = r.suite;
    o["case_id"] = r.case_id;
    o["p"] = real_json(r.p);
    o["lhs"] = real_json(r.lhs);
    o["rhs"] = real_json(r.rhs);
    o["slack"] = real_json(r.slack);
    o["tol"] = real_json(r.tol);
    o["passed"] = r.passed;
    o["inputs_digest"] = r.inputs_digest;
    o["paper_anchor"] = r.paper_anchor;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::vector<CheckReport> reports_from_json(const std::string& text) {
  const json arr = json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("report JSON must be an array");
  std::vector<CheckReport> out;
  for (const json& o : arr) {
    CheckReport r;
    r.suite = o.at("suite").get<std::string>();
    r.case_id = o.at("case_id").get<std::string>();
    r.p = real_from_json(o.at("p"));
    r.lhs = real_from_json(o.at("lhs"));
    r.rhs = real_from_json(o.at("rhs"));
    r.slack = real_from_json(o.at("slack"));
    r.tol = real_from_json(o.at("tol"));
    r.passed = o.at("passed").get<bool>();
    r.inputs_digest = o.at("inputs_digest").get<std::string>();
    r.paper_anchor = o.at("paper_anchor").get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  std::string out;
  for (std::size_t k = 0; k < std::size(kColumns); ++k) out += (k ? "," : "") + std::string(kColumns[k]);
  out += "\r\n";
  for (const CheckReport& r : reports) {
    out += csv_field(r.suite) + "," + csv_field(r.case_id) + "," + real_text(r.p) + "," + real_text(r.lhs) + "," +
           real_text(r.rhs) + "," + real_text(r.slack) + "," + real_text(r.tol) + "," +
           (r.passed ? "true" : "false") + "," + csv_field(r.inputs_digest) + "," + csv_field(r.paper_anchor) + "\r\n";
  }
  return out;
}

std::vector<CheckReport> reports_from_csv(const std::string& text) {
  const auto rows = parse_csv(text);
  if (rows.empty()) throw std::invalid_argument("CSV report lacks a header");
  if (rows[0].size() != std::size(kColumns)) throw std::invalid_argument("CSV report header has wrong width");
  std::vector<CheckReport> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i];
    if (f.size() != std::size(kColumns)) throw std::invalid_argument("CSV row " + std::to_string(i) + " has wrong width");
    CheckReport r;
    r.suite = f[0];
    r.case_id = f[1];
    r.p = parse_real(f[2]);
    r.lhs = parse_real(f[3]);
    r.rhs = parse_real(f[4]);
    r.slack = parse_real(f[5]);
    r.tol = parse_real(f[6]);
    if (f[7] != "true" && f[7] != "false") throw std::invalid_argument("bad passed flag '" + f[7] + "'");
    r.passed = f[7] == "true";
    r.inputs_digest = f[8];
    r.paper_anchor = f[9];
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_reports(const std::vector<CheckReport>& reports, ReportFormat format) {
  return format == ReportFormat::json ? reports_to_json(reports) : reports_to_csv(reports);
}

void emit_report(const std::vector<CheckReport>& reports, ReportFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << format_reports(reports, format);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace dualnorm
