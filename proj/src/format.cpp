#include "semitail/format.hpp"

#include <sstream>

namespace semitail {

using nlohmann::json;

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string markdown_escape(const std::string& cell) {
  std::string out;
  for (char ch : cell) {
    if (ch == '|' || ch == '\\') out += '\\';
    if (ch == '\n') {
      out += ' ';
      continue;
    }
    out += ch;
  }
  return out;
}

std::string to_csv(const Table& table) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(cells[i]);
    }
    out += "\r\n";
  };
  line(table.header);
  for (const auto& r : table.rows) line(r);
  return out;
}

std::string to_markdown(const Table& table) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    out += '|';
    for (const auto& c : cells) out += ' ' + markdown_escape(c) + " |";
    out += '\n';
  };
  line(table.header);
  out += '|';
  for (std::size_t i = 0; i < table.header.size(); ++i) out += " --- |";
  out += '\n';
  for (const auto& r : table.rows) line(r);
  return out;
}

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string tuple_cell(const std::vector<std::uint64_t>& coords) {
  std::vector<std::string> parts;
  for (auto v : coords) parts.push_back(std::to_string(v));
  return "(" + join(parts, ",") + ")";
}

BigInt big(const json& j, const char* key) { return parse_bigint(j.at(key).get<std::string>()); }

}  // namespace

json to_json(const AnalysisRecord& rec) {
  return json{{"a", rec.a},
              {"c", to_string(rec.c)},
              {"d", to_string(rec.d)},
              {"n", rec.n},
              {"e", to_string(rec.e)},
              {"m", rec.m},
              {"method", rec.method},
              {"alpha", rec.alpha},
              {"max_apery", to_string(rec.max_apery)},
              {"frobenius_scaled", to_string(rec.frobenius_scaled)},
              {"frobenius_unscaled", rec.frobenius_unscaled},
              {"genus_scaled", to_string(rec.genus_scaled)},
              {"degenerate", rec.degenerate},
              {"oracle_checked", rec.oracle_checked},
              {"oracle_mismatches", rec.oracle_mismatches},
              {"elapsed_us", rec.elapsed_us}};
}

AnalysisRecord record_from_json(const json& j) {
  AnalysisRecord rec;
  rec.a = j.at("a").get<std::uint64_t>();
  rec.c = big(j, "c");
  rec.d = big(j, "d");
  rec.n = j.at("n").get<std::size_t>();
  rec.e = big(j, "e");
  rec.m = j.at("m").get<std::size_t>();
  rec.method = j.at("method").get<std::string>();
  rec.alpha = j.at("alpha").get<std::vector<std::uint64_t>>();
  rec.max_apery = big(j, "max_apery");
  rec.frobenius_scaled = big(j, "frobenius_scaled");
  rec.frobenius_unscaled = j.at("frobenius_unscaled").get<std::string>();
  rec.genus_scaled = big(j, "genus_scaled");
  rec.degenerate = j.at("degenerate").get<bool>();
  rec.oracle_checked = j.at("oracle_checked").get<bool>();
  rec.oracle_mismatches = j.at("oracle_mismatches").get<std::vector<std::string>>();
  rec.elapsed_us = j.at("elapsed_us").get<std::int64_t>();
  return rec;
}

Table record_table(const std::vector<AnalysisRecord>& records) {
  Table t{{"a", "c", "d", "n", "e", "m", "method", "alpha", "max_apery", "frobenius_scaled", "frobenius_unscaled",
           "genus_scaled", "degenerate", "oracle_checked", "oracle_mismatches", "elapsed_us"},
          {}};
  for (const auto& r : records) {
    t.rows.push_back({std::to_string(r.a), to_string(r.c), to_string(r.d), std::to_string(r.n), to_string(r.e),
                      std::to_string(r.m), r.method, tuple_cell(r.alpha), to_string(r.max_apery),
                      to_string(r.frobenius_scaled), r.frobenius_unscaled, to_string(r.genus_scaled),
                      r.degenerate ? "true" : "false", r.oracle_checked ? "true" : "false",
                      join(r.oracle_mismatches, ";"), std::to_string(r.elapsed_us)});
  }
  return t;
}

namespace {

std::string verdict_cell(const FieldVerdict& f) {
  switch (f.verdict) {
    case Verdict::Match: return "MATCH";
    case Verdict::Unchecked: return "-";
    case Verdict::Diverges: return "DIVERGES(" + f.divergent + ")";
  }
  return "?";
}

json opt_json(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

}  // namespace

json to_json(const FamilyComparison& cmp) {
  const auto& r = cmp.report;
  json fields = json::array();
  for (const auto& f : cmp.fields) {
    fields.push_back({{"field", f.field},
                      {"closed_form", opt_json(f.closed_form)},
                      {"pipeline", opt_json(f.pipeline)},
                      {"oracle", opt_json(f.oracle)},
                      {"verdict", verdict_cell(f)}});
  }
  return json{{"family", r.family_id},
              {"a", r.a},
              {"k", r.k ? json(*r.k) : json(nullptr)},
              {"n", r.n},
              {"c", to_string(r.c)},
              {"d", to_string(r.d)},
              {"case", r.case_label},
              {"fields", fields},
              {"failed_claims", cmp.failed_claims},
              {"pipeline_error", opt_json(cmp.pipeline_error)},
              {"oracle_error", opt_json(cmp.oracle_error)},
              {"status", cmp.matches() ? "MATCH" : "MISMATCH"}};
}

Table family_table(const std::vector<FamilyComparison>& rows) {
  Table t{{"family", "a", "k", "n", "case", "m", "alpha", "max_apery", "frobenius_scaled", "genus_scaled", "verdicts",
           "failed_claims", "status"},
          {}};
  for (const auto& cmp : rows) {
    const auto& r = cmp.report;
    auto value = [&](const char* name) -> std::string {
      for (const auto& f : cmp.fields) {
        if (f.field != name) continue;
        if (f.pipeline) return *f.pipeline;
        if (f.oracle) return *f.oracle;
        if (f.closed_form) return *f.closed_form;
      }
      return "-";
    };
    std::vector<std::string> verdicts;
    for (const auto& f : cmp.fields) verdicts.push_back(f.field + ":" + verdict_cell(f));
    t.rows.push_back({r.family_id, std::to_string(r.a), r.k ? std::to_string(*r.k) : "-", std::to_string(r.n),
                      r.case_label, value("m"), value("alpha"), value("max_apery"), value("frobenius_scaled"),
                      value("genus_scaled"), join(verdicts, " "), join(cmp.failed_claims, "; "),
                      cmp.matches() ? "MATCH" : "MISMATCH"});
  }
  return t;
}

json to_json(const VerifySummary& s, bool with_rows) {
  json j{{"points", s.points},
         {"checked", s.checked},
         {"skipped", s.skipped},
         {"analytic_covered", s.analytic_covered},
         {"mismatches", s.mismatches},
         {"lower_bound_violations", s.lower_bound_violations}};
  if (with_rows) {
    json rows = json::array();
    for (const auto& r : s.rows) {
      rows.push_back({{"a", r.a},
                      {"c", r.c},
                      {"d", r.d},
                      {"n", r.n},
                      {"checked", r.checked},
                      {"m", r.m},
                      {"method", r.method},
                      {"mismatches", r.mismatches}});
    }
    j["rows"] = rows;
  }
  return j;
}

Table verify_table(const VerifySummary& s) {
  Table t{{"a", "c", "d", "n", "checked", "m", "method", "mismatches"}, {}};
  for (const auto& r : s.rows) {
    t.rows.push_back({std::to_string(r.a), std::to_string(r.c), std::to_string(r.d), std::to_string(r.n),
                      r.checked ? "true" : "false", r.checked ? std::to_string(r.m) : "-", r.method,
                      join(r.mismatches, ";")});
  }
  return t;
}

}  // namespace semitail
