#pragma once

/**
 * @file format.hpp
 * @brief JSON, CSV and markdown renderings of analysis results.
 *
 * Big integers are written as decimal strings in JSON so that nothing
 * downstream rounds them through a double.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "semitail/analysis.hpp"

namespace semitail {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// RFC 4180: CRLF line ends, fields quoted when they hold ',', '"', CR or LF.
std::string to_csv(const Table& table);
/// Pipe-separated table; '|' and '\' inside cells are backslash-escaped.
std::string to_markdown(const Table& table);

nlohmann::json to_json(const AnalysisRecord& rec);
AnalysisRecord record_from_json(const nlohmann::json& j);
Table record_table(const std::vector<AnalysisRecord>& records);

nlohmann::json to_json(const FamilyComparison& cmp);
Table family_table(const std::vector<FamilyComparison>& rows);

nlohmann::json to_json(const VerifySummary& summary, bool with_rows);
Table verify_table(const VerifySummary& summary);

std::string csv_escape(const std::string& cell);
std::string markdown_escape(const std::string& cell);

}  // namespace semitail
