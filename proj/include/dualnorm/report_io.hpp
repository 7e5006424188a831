#pragma once

#include <string>
#include <vector>

#include "dualnorm/report.hpp"

namespace dualnorm {

enum class ReportFormat { json, csv };

ReportFormat parse_report_format(const std::string& text);

/// JSON array of report objects with a fixed key order. Non-finite reals are
/// written as the strings "inf", "-inf", "nan".
std::string reports_to_json(const std::vector<CheckReport>& reports);
std::vector<CheckReport> reports_from_json(const std::string& text);

/// Header plus one row per report, RFC 4180 quoting, CRLF line ends, reals
/// with 17 significant digits.
std::string reports_to_csv(const std::vector<CheckReport>& reports);
std::vector<CheckReport> reports_from_csv(const std::string& text);

std::string format_reports(const std::vector<CheckReport>& reports, ReportFormat format);

/// Writes the serialized reports; I/O failures throw std::runtime_error
/// naming the path.
void emit_report(const std::vector<CheckReport>& reports, ReportFormat format, const std::string& path);

}  // namespace dualnorm
