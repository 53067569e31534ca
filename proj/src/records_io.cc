// Copyright 2026 The satdtrack Authors.
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

#include "satd/records_io.h"

#include <charconv>

#include "satd/errors.h"
#include "satd/text.h"

namespace satd {
namespace {

using nlohmann::json;
using oj = nlohmann::ordered_json;

const json& Field(const json& obj, const std::string& where, const char* key) {
  if (!obj.is_object()) throw SchemaViolation(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaViolation(where + "." + key, "missing required field");
  return *it;
}

std::string Str(const json& v, const std::string& where) {
  if (!v.is_string()) throw SchemaViolation(where, "expected a string");
  return v.get<std::string>();
}

int Int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw SchemaViolation(where, "expected an integer");
  return v.get<int>();
}

std::vector<std::string> StrList(const json& v, const std::string& where) {
  if (!v.is_array()) throw SchemaViolation(where, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(Str(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

template <typename Fn>
void ForEachJsonLine(std::string_view text, Fn&& fn) {
  std::size_t number = 0;
  for (const auto& raw : SplitLines(text)) {
    ++number;
    auto line = Trim(raw);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(number);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw SchemaViolation(where, std::string("invalid JSON: ") + e.what());
    }
    fn(obj, where);
  }
}

std::string CsvEscape(std::string_view cell) {
  if (cell.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(cell);
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

oj Features(const MatchCandidate& c) {
  return {{"id", c.raw_id},
          {"description", c.features.description},
          {"prev", c.features.previous_line},
          {"next", c.features.next_line},
          {"hunk_id", c.features.hunk_id}};
}

MatchCandidate CandidateFrom(const json& v, const std::string& where) {
  MatchCandidate c;
  c.raw_id = Str(Field(v, where, "id"), where + ".id");
  c.features.description = Str(Field(v, where, "description"), where + ".description");
  c.features.previous_line = Str(Field(v, where, "prev"), where + ".prev");
  c.features.next_line = Str(Field(v, where, "next"), where + ".next");
  c.features.hunk_id = Str(Field(v, where, "hunk_id"), where + ".hunk_id");
  return c;
}

}  // namespace

oj TrackedToJson(const TrackedSatd& s) {
  oj lines = oj::array();
  for (auto [o, n] : s.updated_in_lines) lines.push_back(oj::array({o, n}));
  return {{"created_in_file", s.created_in_file},
          {"last_appeared_in_file", s.last_appeared_in_file},
          {"created_in_line", s.created_in_line},
          {"last_appeared_in_line", s.last_appeared_in_line},
          {"created_in_commit", s.created_in_commit},
          {"deleted_in_commit", s.deleted_in_commit ? oj(*s.deleted_in_commit) : oj(nullptr)},
          {"creation_text", s.creation_text},
          {"update_texts", s.update_texts},
          {"updated_in_lines", std::move(lines)},
          {"updated_in_commits", s.updated_in_commits}};
}

TrackedSatd TrackedFromJson(const json& obj, const std::string& where) {
  TrackedSatd s;
  s.created_in_file = Str(Field(obj, where, "created_in_file"), where + ".created_in_file");
  s.last_appeared_in_file =
      Str(Field(obj, where, "last_appeared_in_file"), where + ".last_appeared_in_file");
  s.created_in_line = Int(Field(obj, where, "created_in_line"), where + ".created_in_line");
  s.last_appeared_in_line =
      Int(Field(obj, where, "last_appeared_in_line"), where + ".last_appeared_in_line");
  s.created_in_commit = Str(Field(obj, where, "created_in_commit"), where + ".created_in_commit");
  if (const json& d = Field(obj, where, "deleted_in_commit"); !d.is_null()) {
    s.deleted_in_commit = Str(d, where + ".deleted_in_commit");
  }
  s.creation_text = Str(Field(obj, where, "creation_text"), where + ".creation_text");
  s.update_texts = StrList(Field(obj, where, "update_texts"), where + ".update_texts");
  s.updated_in_commits = StrList(Field(obj, where, "updated_in_commits"), where + ".updated_in_commits");
  const json& lines = Field(obj, where, "updated_in_lines");
  if (!lines.is_array()) throw SchemaViolation(where + ".updated_in_lines", "expected an array");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string p = where + ".updated_in_lines[" + std::to_string(i) + "]";
    if (!lines[i].is_array() || lines[i].size() != 2) throw SchemaViolation(p, "expected [old, new]");
    s.updated_in_lines.emplace_back(Int(lines[i][0], p + "[0]"), Int(lines[i][1], p + "[1]"));
  }
  if (s.update_texts.size() != s.updated_in_lines.size() ||
      s.update_texts.size() != s.updated_in_commits.size()) {
    throw SchemaViolation(where, "update_texts, updated_in_lines and updated_in_commits differ in length");
  }
  return s;
}

std::string WriteTrackedJsonl(std::span<const TrackedSatd> satds) {
  std::string out;
  for (const auto& s : satds) out += TrackedToJson(s).dump() + "\n";
  return out;
}

std::vector<TrackedSatd> ReadTrackedJsonl(std::string_view text) {
  std::vector<TrackedSatd> out;
  ForEachJsonLine(text, [&](const json& obj, const std::string& where) {
    out.push_back(TrackedFromJson(obj, where));
  });
  return out;
}

std::string WriteTrackedCsv(std::span<const TrackedSatd> satds) {
  std::string out;
  for (std::size_t i = 0; i < std::size(kTrackedColumns); ++i) {
    if (i) out.push_back(',');
    out += kTrackedColumns[i];
  }
  out += "\r\n";
  for (const auto& s : satds) {
    const oj obj = TrackedToJson(s);
    std::size_t i = 0;
    for (const auto column : kTrackedColumns) {
      if (i++) out.push_back(',');
      const oj& v = obj.at(std::string(column));
      if (v.is_string()) {
        out += CsvEscape(v.get<std::string>());
      } else if (!v.is_null()) {
        out += CsvEscape(v.dump());
      }
    }
    out += "\r\n";
  }
  return out;
}

std::vector<std::vector<std::string>> ParseCsv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool quoted = false, cell_started = false;
  std::size_t line = 1;
  auto end_cell = [&] {
    row.push_back(std::move(cell));
    cell.clear();
    cell_started = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        cell.push_back(c);
      }
      continue;
    }
    if (c == '"' && !cell_started) {
      quoted = cell_started = true;
    } else if (c == ',') {
      end_cell();
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      continue;
    } else if (c == '\n') {
      end_cell();
      rows.push_back(std::move(row));
      row.clear();
      ++line;
    } else {
      cell.push_back(c);
      cell_started = true;
    }
  }
  if (quoted) throw SchemaViolation("line " + std::to_string(line), "unterminated quoted cell");
  if (cell_started || !row.empty()) {
    end_cell();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TrackedSatd> ReadTrackedCsv(std::string_view text) {
  auto rows = ParseCsv(text);
  if (rows.empty()) throw SchemaViolation("line 1", "missing CSV header");
  const std::size_t width = std::size(kTrackedColumns);
  if (rows[0].size() != width) throw SchemaViolation("line 1", "unexpected CSV header");
  for (std::size_t i = 0; i < width; ++i) {
    if (rows[0][i] != kTrackedColumns[i]) {
      throw SchemaViolation("line 1", "expected column " + std::string(kTrackedColumns[i]));
    }
  }
  std::vector<TrackedSatd> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::string where = "row " + std::to_string(r);
    if (rows[r].size() != width) throw SchemaViolation(where, "wrong number of cells");
    json obj = json::object();
    for (std::size_t i = 0; i < width; ++i) {
      const std::string name(kTrackedColumns[i]);
      const std::string& cell = rows[r][i];
      if (name == "created_in_line" || name == "last_appeared_in_line") {
        int v = 0;
        auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
        if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) {
          throw SchemaViolation(where + "." + name, "expected an integer");
        }
        obj[name] = v;
      } else if (name == "update_texts" || name == "updated_in_lines" || name == "updated_in_commits") {
        try {
          obj[name] = json::parse(cell);
        } catch (const json::parse_error&) {
          throw SchemaViolation(where + "." + name, "expected a JSON list");
        }
      } else if (name == "deleted_in_commit" && cell.empty()) {
        obj[name] = nullptr;
      } else {
        obj[name] = cell;
      }
    }
    out.push_back(TrackedFromJson(obj, where));
  }
  return out;
}

oj RawToJson(const RawSatd& s) {
  auto opt = [](const std::optional<std::string>& v) { return v ? oj(*v) : oj(nullptr); };
  return {{"raw_id", s.raw_id},
          {"file_id", s.file_id},
          {"created_in_commit", s.created_in_commit},
          {"created_in_hunk", s.created_in_hunk},
          {"created_in_line", s.created_in_line},
          {"current_line", s.current_line},
          {"creation_text", s.creation_text},
          {"deleted_in_commit", opt(s.deleted_in_commit)},
          {"deleted_in_hunk", opt(s.deleted_in_hunk)},
          {"alive", s.alive()},
          {"created_prev_line", s.created_prev_line},
          {"created_next_line", s.created_next_line},
          {"deleted_text", s.alive() ? oj(nullptr) : oj(s.deleted_text)},
          {"deleted_prev_line", s.alive() ? oj(nullptr) : oj(s.deleted_prev_line)},
          {"deleted_next_line", s.alive() ? oj(nullptr) : oj(s.deleted_next_line)}};
}

std::string WriteRawJsonl(std::span<const RawSatd> satds) {
  std::string out;
  for (const auto& s : satds) out += RawToJson(s).dump() + "\n";
  return out;
}

oj CaseToJson(const LabeledCase& c) {
  oj candidates = oj::array();
  for (const auto& cand : c.candidates) candidates.push_back(Features(cand));
  return {{"group", {{"commit", c.group_commit}, {"file_id", c.group_file}}},
          {"deleted", Features(c.deleted)},
          {"candidates", std::move(candidates)},
          {"gold", c.gold ? oj(*c.gold) : oj(nullptr)}};
}

std::string WriteCasesJsonl(std::span<const LabeledCase> cases) {
  std::string out;
  for (const auto& c : cases) out += CaseToJson(c).dump() + "\n";
  return out;
}

std::vector<LabeledCase> ReadCasesJsonl(std::string_view text) {
  std::vector<LabeledCase> out;
  ForEachJsonLine(text, [&](const json& obj, const std::string& where) {
    LabeledCase c;
    const json& group = Field(obj, where, "group");
    c.group_commit = Str(Field(group, where + ".group", "commit"), where + ".group.commit");
    c.group_file = Str(Field(group, where + ".group", "file_id"), where + ".group.file_id");
    c.deleted = CandidateFrom(Field(obj, where, "deleted"), where + ".deleted");
    const json& candidates = Field(obj, where, "candidates");
    if (!candidates.is_array()) throw SchemaViolation(where + ".candidates", "expected an array");
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      c.candidates.push_back(
          CandidateFrom(candidates[i], where + ".candidates[" + std::to_string(i) + "]"));
    }
    if (c.candidates.empty()) throw SchemaViolation(where + ".candidates", "must not be empty");
    if (const json& gold = Field(obj, where, "gold"); !gold.is_null()) {
      c.gold = Str(gold, where + ".gold");
      bool found = false;
      for (const auto& cand : c.candidates) found = found || cand.raw_id == *c.gold;
      if (!found) throw SchemaViolation(where + ".gold", "is not one of the candidate ids");
    }
    out.push_back(std::move(c));
  });
  return out;
}

}  // namespace satd
