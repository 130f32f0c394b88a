// Copyright 2026 The AHP Engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <glob.h>

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "ahp/eigen.hpp"
#include "ahp/error.hpp"
#include "ahp/hierarchy.hpp"
#include "ahp/pcm.hpp"
#include "ahp/scale.hpp"
#include "ahp/scoring.hpp"
#include "json.hpp"

namespace ahp::io {

using json = nlohmann::json;

inline constexpr int kModelSchemaVersion = 1;

// ---------------------------------------------------------------------------
// Files

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoFailure, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::size_t write_file(const std::filesystem::path& path,
                              std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoFailure, "cannot write '" + path.string() + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(Errc::IoFailure, "short write to '" + path.string() + "'");
  return content.size();
}

/// Expands a shell glob; a pattern without matches is an error. Results are
/// sorted so file order is reproducible.
inline std::vector<std::string> expand_glob(const std::string& pattern) {
  glob_t g{};
  const int rc = ::glob(pattern.c_str(), 0, nullptr, &g);
  std::vector<std::string> out;
  if (rc == 0) {
    for (std::size_t i = 0; i < g.gl_pathc; ++i) out.emplace_back(g.gl_pathv[i]);
  }
  ::globfree(&g);
  if (out.empty()) {
    throw Error(Errc::IoFailure, "no files match '" + pattern + "'");
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// JSON helpers

namespace detail {

inline std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, source + ": " + line_col(text, e.byte) +
                                      ": malformed JSON");
  }
}

[[noreturn]] inline void schema_error(const std::string& source,
                                      const std::string& field,
                                      const std::string& reason) {
  throw Error(Errc::ParseError, source + ": field '" + field + "': " + reason);
}

inline const json& field(const json& obj, const char* key,
                         const std::string& source, const std::string& path) {
  if (!obj.is_object()) schema_error(source, path, "expected an object");
  const auto it = obj.find(key);
  const std::string where = path.empty() ? key : path + "." + key;
  if (it == obj.end()) schema_error(source, where, "missing");
  return *it;
}

inline std::string string_field(const json& obj, const char* key,
                                const std::string& source,
                                const std::string& path = "") {
  const json& v = field(obj, key, source, path);
  if (!v.is_string()) {
    schema_error(source, path.empty() ? key : path + "." + key,
                 "expected a string");
  }
  return v.get<std::string>();
}

inline std::string optional_string(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it != obj.end() && it->is_string() ? it->get<std::string>() : "";
}

inline std::vector<std::string> string_list(const json& obj, const char* key,
                                            const std::string& source) {
  const json& v = field(obj, key, source, "");
  if (!v.is_array()) schema_error(source, key, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) {
      schema_error(source, std::string(key) + "[" + std::to_string(i) + "]",
                   "expected a string");
    }
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Questionnaires

inline Questionnaire questionnaire_from_json(const json& j,
                                             const std::string& source) {
  Questionnaire q;
  q.respondent = detail::string_field(j, "respondent", source);
  q.criteria = detail::string_list(j, "criteria", source);
  std::unordered_set<std::string> known(q.criteria.begin(), q.criteria.end());
  const json& list = detail::field(j, "judgments", source, "");
  if (!list.is_array()) detail::schema_error(source, "judgments", "expected an array");
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string path = "judgments[" + std::to_string(k) + "]";
    const json& item = list[k];
    PairJudgment pj;
    pj.a = detail::string_field(item, "a", source, path);
    pj.b = detail::string_field(item, "b", source, path);
    for (const auto* id : {&pj.a, &pj.b}) {
      if (!known.count(*id)) {
        throw Error(Errc::IdReferenceUnknown,
                    source + ": " + path + ": criterion '" + *id + "'");
      }
    }
    const std::string value = detail::string_field(item, "value", source, path);
    try {
      pj.value = Judgment::parse(value);
    } catch (const Error& e) {
      throw Error(Errc::OffScaleJudgment, source + ": " + path + ".value: " + e.detail());
    }
    q.judgments.push_back(std::move(pj));
  }
  return q;
}

inline json questionnaire_to_json(const Questionnaire& q) {
  json list = json::array();
  for (const auto& pj : q.judgments) {
    list.push_back({{"a", pj.a}, {"b", pj.b}, {"value", pj.value.to_string()}});
  }
  return {{"respondent", q.respondent}, {"criteria", q.criteria}, {"judgments", list}};
}

inline Questionnaire parse_questionnaire(std::string_view text,
                                         const std::string& source = "<input>") {
  return questionnaire_from_json(detail::parse_json(text, source), source);
}

inline std::string serialize_questionnaire(const Questionnaire& q) {
  return detail::dump(questionnaire_to_json(q));
}

inline std::vector<Questionnaire> load_questionnaires(
    const std::vector<std::string>& paths) {
  std::vector<Questionnaire> out;
  for (const auto& p : paths) out.push_back(parse_questionnaire(read_file(p), p));
  return out;
}

// ---------------------------------------------------------------------------
// Pairwise comparison matrices

inline PairwiseComparisonMatrix pcm_from_json(const json& j,
                                              const std::string& source) {
  CriteriaIds ids = detail::string_list(j, "criteria", source);
  const json& m = detail::field(j, "matrix", source, "");
  if (!m.is_array()) detail::schema_error(source, "matrix", "expected an array of rows");
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i].is_array()) {
      detail::schema_error(source, "matrix[" + std::to_string(i) + "]", "expected a row");
    }
    std::vector<double> row;
    for (std::size_t k = 0; k < m[i].size(); ++k) {
      if (!m[i][k].is_number()) {
        detail::schema_error(source,
                             "matrix[" + std::to_string(i) + "][" + std::to_string(k) + "]",
                             "expected a number");
      }
      row.push_back(m[i][k].get<double>());
    }
    rows.push_back(std::move(row));
  }
  return validate_pcm(rows, std::move(ids));
}

inline json pcm_to_json(const PairwiseComparisonMatrix& pcm) {
  return {{"criteria", pcm.criteria()}, {"matrix", pcm.entries().to_rows()}};
}

inline PairwiseComparisonMatrix parse_pcm(std::string_view text,
                                          const std::string& source = "<input>") {
  return pcm_from_json(detail::parse_json(text, source), source);
}

inline std::string serialize_pcm(const PairwiseComparisonMatrix& pcm) {
  return detail::dump(pcm_to_json(pcm));
}

inline PairwiseComparisonMatrix load_pcm(const std::string& path) {
  return parse_pcm(read_file(path), path);
}

// ---------------------------------------------------------------------------
// Decision models

inline json criterion_to_json(const Criterion& c) {
  json j = {{"id", c.id}, {"name", c.name}, {"unit", c.unit},
            {"description", c.description}};
  if (!c.group.empty()) j["group"] = c.group;
  if (!c.direction.empty()) j["direction"] = c.direction;
  return j;
}

inline DecisionModel model_from_json(const json& j, const std::string& source) {
  const json& schema = detail::field(j, "schema", source, "");
  if (!schema.is_number_integer()) {
    detail::schema_error(source, "schema", "expected an integer");
  }
  if (schema.get<int>() != kModelSchemaVersion) {
    throw Error(Errc::SchemaVersionUnsupported,
                source + ": schema " + std::to_string(schema.get<int>()));
  }
  DecisionModel m;
  m.goal = detail::string_field(j, "goal", source);
  auto criteria = [&](const char* key) {
    std::vector<Criterion> out;
    const json& list = detail::field(j, key, source, "");
    if (!list.is_array()) detail::schema_error(source, key, "expected an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string path = std::string(key) + "[" + std::to_string(k) + "]";
      Criterion c;
      c.id = detail::string_field(list[k], "id", source, path);
      c.name = detail::string_field(list[k], "name", source, path);
      c.unit = detail::string_field(list[k], "unit", source, path);
      c.description = detail::optional_string(list[k], "description");
      c.group = detail::optional_string(list[k], "group");
      c.direction = detail::optional_string(list[k], "direction");
      out.push_back(std::move(c));
    }
    return out;
  };
  m.benefit_criteria = criteria("benefit_criteria");
  m.cost_criteria = criteria("cost_criteria");
  m.alternatives = detail::string_list(j, "alternatives", source);
  return validate_model(std::move(m));
}

inline json model_to_json(const DecisionModel& m) {
  json benefit = json::array();
  json cost = json::array();
  for (const auto& c : m.benefit_criteria) benefit.push_back(criterion_to_json(c));
  for (const auto& c : m.cost_criteria) cost.push_back(criterion_to_json(c));
  return {{"schema", kModelSchemaVersion},
          {"goal", m.goal},
          {"benefit_criteria", benefit},
          {"cost_criteria", cost},
          {"alternatives", m.alternatives}};
}

inline DecisionModel parse_model(std::string_view text,
                                 const std::string& source = "<input>") {
  return model_from_json(detail::parse_json(text, source), source);
}

inline std::string serialize_model(const DecisionModel& m) {
  return detail::dump(model_to_json(m));
}

inline DecisionModel load_model(const std::string& path) {
  return parse_model(read_file(path), path);
}

// ---------------------------------------------------------------------------
// Material compositions: {"components": [{material, demand, storage, weight_fraction}]}

inline MaterialComposition composition_from_json(const json& j, const std::string& source) {
  const json& list = detail::field(j, "components", source, "");
  if (!list.is_array()) detail::schema_error(source, "components", "expected an array");
  MaterialComposition comp;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string path = "components[" + std::to_string(k) + "]";
    auto number = [&](const char* key) {
      const json& v = detail::field(list[k], key, source, path);
      if (!v.is_number()) detail::schema_error(source, path + "." + key, "expected a number");
      return v.get<double>();
    };
    comp.components.push_back({detail::string_field(list[k], "material", source, path),
                               number("demand"), number("storage"),
                               number("weight_fraction")});
  }
  return comp;
}

inline MaterialComposition load_composition(const std::string& path) {
  return composition_from_json(detail::parse_json(read_file(path), path), path);
}

// ---------------------------------------------------------------------------
// Score matrices (CSV: header of criterion ids, first column alternative ids)

namespace detail {

inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

inline std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace detail

inline ScoreMatrix parse_score_matrix_csv(std::string_view text,
                                          const std::string& source = "<input>") {
  std::vector<std::string> lines;
  {
    std::size_t start = 0;
    while (start < text.size()) {
      auto nl = text.find('\n', start);
      if (nl == std::string_view::npos) nl = text.size();
      std::string line(text.substr(start, nl - start));
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(std::move(line));
      start = nl + 1;
    }
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw Error(Errc::ParseError, source + ": empty file");
  const auto header = detail::split_csv_line(lines[0]);
  if (header.size() < 2) {
    throw Error(Errc::ParseError, source + ": line 1: need at least one criterion column");
  }
  CriteriaIds criteria(header.begin() + 1, header.end());
  std::unordered_set<std::string> seen;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    if (criteria[c].empty() || !seen.insert(criteria[c]).second) {
      throw Error(Errc::ParseError, source + ": line 1, field " + std::to_string(c + 2) +
                                        ": duplicate or empty criterion '" +
                                        criteria[c] + "'");
    }
  }
  std::vector<std::string> alternatives;
  std::vector<double> values;
  std::unordered_set<std::string> alts;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const std::string where = source + ": line " + std::to_string(l + 1);
    const auto cells = detail::split_csv_line(lines[l]);
    if (cells.size() != header.size()) {
      throw Error(Errc::ParseError, where + ": expected " + std::to_string(header.size()) +
                                        " fields, found " + std::to_string(cells.size()));
    }
    if (cells[0].empty() || !alts.insert(cells[0]).second) {
      throw Error(Errc::ParseError,
                  where + ", field 1: duplicate or empty alternative '" + cells[0] + "'");
    }
    alternatives.push_back(cells[0]);
    for (std::size_t c = 1; c < cells.size(); ++c) {
      const std::string& s = cells[c];
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw Error(Errc::ParseError, where + ", field " + std::to_string(c + 1) +
                                          ": not a decimal number: '" + s + "'");
      }
      values.push_back(v);
    }
  }
  if (alternatives.empty()) throw Error(Errc::ParseError, source + ": no data rows");
  return ScoreMatrix(std::move(alternatives), std::move(criteria), std::move(values));
}

inline std::string score_matrix_to_csv(const ScoreMatrix& m) {
  std::string out = "alternative";
  for (const auto& c : m.criteria()) out += "," + c;
  out += "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += m.alternatives()[r];
    for (std::size_t c = 0; c < m.cols(); ++c) out += "," + detail::format_double(m(r, c));
    out += "\n";
  }
  return out;
}

inline ScoreMatrix load_score_matrix(const std::string& path) {
  return parse_score_matrix_csv(read_file(path), path);
}

/// JSON form used by the HTTP API: {alternatives, criteria, values: [[...]]}.
inline ScoreMatrix score_matrix_from_json(const json& j, const std::string& source) {
  if (j.is_string()) return parse_score_matrix_csv(j.get<std::string>(), source);
  auto alternatives = detail::string_list(j, "alternatives", source);
  auto criteria = detail::string_list(j, "criteria", source);
  const json& rows = detail::field(j, "values", source, "");
  if (!rows.is_array()) detail::schema_error(source, "values", "expected an array of rows");
  std::vector<std::vector<double>> v;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<double> row;
    if (!rows[r].is_array()) {
      detail::schema_error(source, "values[" + std::to_string(r) + "]", "expected a row");
    }
    for (const auto& x : rows[r]) {
      if (!x.is_number()) {
        detail::schema_error(source, "values[" + std::to_string(r) + "]", "expected numbers");
      }
      row.push_back(x.get<double>());
    }
    v.push_back(std::move(row));
  }
  if (v.size() != alternatives.size()) {
    detail::schema_error(source, "values", "row count differs from alternatives");
  }
  return ScoreMatrix::from_rows(std::move(alternatives), std::move(criteria), v);
}

inline json score_matrix_to_json(const ScoreMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return {{"alternatives", m.alternatives()}, {"criteria", m.criteria()}, {"values", rows}};
}

// ---------------------------------------------------------------------------
// Reports

enum class Format { Json, Text };

inline Format parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  throw Error(Errc::ParseError, "unknown format '" + std::string(s) + "'");
}

namespace detail {

inline std::string fixed4(double v) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(4) << v;
  return ss.str();
}

inline std::string pad_right(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

inline std::string pad_left(std::string s, std::size_t w) {
  if (s.size() < w) s.insert(0, w - s.size(), ' ');
  return s;
}

}  // namespace detail

inline json consistency_to_json(const ConsistencyReport& r) {
  return {{"lambda_max", r.lambda_max}, {"n", r.n},   {"ci", r.ci},
          {"ri", r.ri},                 {"cr", r.cr}, {"consistent", r.consistent}};
}

inline json weight_vector_to_json(const WeightVector& w) {
  return {{"criteria", w.criteria}, {"weights", w.weights}};
}

inline WeightVector weight_vector_from_json(const json& j, const std::string& source) {
  WeightVector w;
  w.criteria = detail::string_list(j, "criteria", source);
  const json& ws = detail::field(j, "weights", source, "");
  if (!ws.is_array() || ws.size() != w.criteria.size()) {
    detail::schema_error(source, "weights", "expected one number per criterion");
  }
  for (const auto& x : ws) {
    if (!x.is_number()) detail::schema_error(source, "weights", "expected numbers");
    w.weights.push_back(x.get<double>());
  }
  return w;
}

/// Weights document shared by the CLI `weights` command and the HTTP API.
inline json weights_to_json(const PairwiseComparisonMatrix& pcm,
                            const DerivedWeights& d) {
  json worst = json::array();
  for (const auto& p : worst_pairs(pcm, d.weights, 3)) {
    worst.push_back({{"a", p.a}, {"b", p.b}, {"deviation", p.deviation}});
  }
  return {{"criteria", d.weights.criteria},
          {"weights", d.weights.weights},
          {"consistency", consistency_to_json(d.report)},
          {"worst_pairs", worst}};
}

inline std::string weights_to_text(const DerivedWeights& d, bool color = false) {
  std::size_t w = 10;
  for (const auto& id : d.weights.criteria) w = std::max(w, id.size() + 2);
  std::string out = detail::pad_right("criterion", w) + "  weight\n";
  for (std::size_t i = 0; i < d.weights.criteria.size(); ++i) {
    out += detail::pad_right(d.weights.criteria[i], w) + "  " +
           detail::fixed4(d.weights.weights[i]) + "\n";
  }
  const auto& r = d.report;
  std::string verdict = r.consistent ? "consistent" : "INCONSISTENT";
  if (color) {
    verdict = (r.consistent ? "\x1b[32m" : "\x1b[31m") + verdict + "\x1b[0m";
  }
  out += "\n";
  out += detail::pad_right("lambda_max", w) + "  " + detail::fixed4(r.lambda_max) + "\n";
  out += detail::pad_right("CI", w) + "  " + detail::fixed4(r.ci) + "\n";
  out += detail::pad_right("RI", w) + "  " + detail::fixed4(r.ri) + "\n";
  out += detail::pad_right("CR", w) + "  " + detail::fixed4(r.cr) + "  " + verdict + "\n";
  return out;
}

inline json ranking_to_json(const RankingReport& rep) {
  json alts = json::array();
  for (std::size_t i : rep.order) {
    const auto& e = rep.entries[i];
    alts.push_back({{"alternative", e.alternative}, {"bs", e.bs}, {"cs", e.cs},
                    {"fs", e.fs}, {"rank", e.rank}});
  }
  return {{"alternatives", alts},
          {"selected", rep.selected},
          {"top_k", rep.top_k},
          {"tie_break", kTieBreak}};
}

inline std::string ranking_to_text(const RankingReport& rep, bool color = false) {
  std::size_t w = 11;
  for (const auto& e : rep.entries) w = std::max(w, e.alternative.size());
  std::string out = detail::pad_right("alternative", w) + "  " +
                    detail::pad_left("BS", 7) + "  " + detail::pad_left("CS", 7) +
                    "  " + detail::pad_left("FS", 7) + "  rank\n";
  for (std::size_t r = 0; r < rep.order.size(); ++r) {
    const auto& e = rep.entries[rep.order[r]];
    std::string name = detail::pad_right(e.alternative, w);
    if (color && r < rep.top_k) name = "\x1b[1m" + name + "\x1b[0m";
    out += name + "  " + detail::pad_left(detail::fixed4(e.bs), 7) + "  " +
           detail::pad_left(detail::fixed4(e.cs), 7) + "  " +
           detail::pad_left(detail::fixed4(e.fs), 7) + "  " +
           detail::pad_left(std::to_string(e.rank), 4) + "\n";
  }
  out += "selected (top " + std::to_string(rep.top_k) + "):";
  for (std::size_t i = 0; i < rep.selected.size(); ++i) {
    out += (i ? ", " : " ") + rep.selected[i];
  }
  out += "\nties broken by " + std::string(kTieBreak) + "\n";
  return out;
}

inline json scores_to_json(const ScoreVector& bs, const ScoreVector& cs) {
  return {{"alternatives", bs.alternatives}, {"bs", bs.scores}, {"cs", cs.scores}};
}

inline std::string scores_to_text(const ScoreVector& bs, const ScoreVector& cs) {
  std::size_t w = 11;
  for (const auto& a : bs.alternatives) w = std::max(w, a.size());
  std::string out = detail::pad_right("alternative", w) + "  " +
                    detail::pad_left("BS", 7) + "  " + detail::pad_left("CS", 7) + "\n";
  for (std::size_t i = 0; i < bs.alternatives.size(); ++i) {
    out += detail::pad_right(bs.alternatives[i], w) + "  " +
           detail::pad_left(detail::fixed4(bs.scores[i]), 7) + "  " +
           detail::pad_left(detail::fixed4(cs.scores[i]), 7) + "\n";
  }
  return out;
}

inline json sensitivity_to_json(const SensitivityScan& scan) {
  json points = json::array();
  for (const auto& p : scan.points) {
    json changes = json::array();
    for (const auto& c : p.changes) {
      changes.push_back({{"alternative", c.alternative},
                         {"baseline_rank", c.baseline_rank},
                         {"rank", c.rank}});
    }
    points.push_back({{"delta", p.delta},
                      {"weights", weight_vector_to_json(p.weights)},
                      {"ranking", ranking_to_json(p.ranking)},
                      {"changes", changes}});
  }
  return {{"set", to_string(scan.set)},
          {"criterion", scan.criterion},
          {"baseline", ranking_to_json(scan.baseline)},
          {"points", points}};
}

/// `dimension,ri` CSV of a random index table.
inline std::string ri_table_csv(const RandomIndexTable& t) {
  std::string out = "dimension,ri\n";
  for (std::size_t n = 1; n <= t.max_dimension(); ++n) {
    std::ostringstream ri;
    ri << std::fixed << std::setprecision(2) << t.at(n);
    out += std::to_string(n) + "," + ri.str() + "\n";
  }
  return out;
}

/// Writes a ranking report; returns the number of bytes written.
inline std::size_t write_report(const RankingReport& rep, Format format,
                                const std::filesystem::path& path) {
  const std::string body =
      format == Format::Json ? detail::dump(ranking_to_json(rep)) : ranking_to_text(rep);
  return write_file(path, body);
}

// ---------------------------------------------------------------------------
// Fixture corpus manifest

struct ExpectedBlock {
  std::vector<double> values;
  double tolerance = 0.0;
  std::string source;
};

struct Manifest {
  std::filesystem::path root;
  std::map<std::string, std::filesystem::path> files;
  std::map<std::string, std::vector<std::filesystem::path>> questionnaires;
  std::map<std::string, ExpectedBlock> expected;

  const std::filesystem::path& file(const std::string& key) const {
    const auto it = files.find(key);
    if (it == files.end()) throw Error(Errc::IdReferenceUnknown, "manifest file '" + key + "'");
    return it->second;
  }
  const ExpectedBlock& expect(const std::string& key) const {
    const auto it = expected.find(key);
    if (it == expected.end()) {
      throw Error(Errc::IdReferenceUnknown, "manifest expectation '" + key + "'");
    }
    return it->second;
  }
};

inline Manifest load_manifest(const std::filesystem::path& path) {
  const std::string source = path.string();
  const json j = detail::parse_json(read_file(path), source);
  Manifest m;
  m.root = path.parent_path();
  for (const auto& [key, rel] : detail::field(j, "files", source, "").items()) {
    if (!rel.is_string()) detail::schema_error(source, "files." + key, "expected a path");
    m.files[key] = m.root / rel.get<std::string>();
  }
  for (const auto& [key, list] : detail::field(j, "questionnaires", source, "").items()) {
    if (!list.is_array()) detail::schema_error(source, "questionnaires." + key, "expected paths");
    for (const auto& rel : list) m.questionnaires[key].push_back(m.root / rel.get<std::string>());
  }
  for (const auto& [key, block] : detail::field(j, "expected", source, "").items()) {
    ExpectedBlock b;
    const json& vals = detail::field(block, "values", source, "expected." + key);
    auto flatten = [&](const json& v, auto&& self) -> void {
      if (v.is_array()) {
        for (const auto& x : v) self(x, self);
      } else if (v.is_number()) {
        b.values.push_back(v.get<double>());
      } else {
        detail::schema_error(source, "expected." + key, "values must be numbers");
      }
    };
    flatten(vals, flatten);
    const json& tol = detail::field(block, "tolerance", source, "expected." + key);
    if (!tol.is_number()) detail::schema_error(source, "expected." + key, "tolerance");
    b.tolerance = tol.get<double>();
    b.source = detail::optional_string(block, "source");
    m.expected[key] = std::move(b);
  }
  return m;
}

}  // namespace ahp::io
