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

#include "satd/fixture.h"

#include <set>
#include <unordered_set>

#include "satd/errors.h"
#include "satd/file_io.h"

namespace satd {
namespace {

using nlohmann::json;

std::string Index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& Member(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) throw SchemaViolation(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaViolation(path + "." + key, "missing required field");
  return *it;
}

std::string String(const json& v, const std::string& path, bool allow_empty = false) {
  if (!v.is_string()) throw SchemaViolation(path, "expected a string");
  auto s = v.get<std::string>();
  if (s.empty() && !allow_empty) throw SchemaViolation(path, "must not be empty");
  return s;
}

std::int64_t Integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaViolation(path, "expected an integer");
  return v.get<std::int64_t>();
}

int Count(const json& v, const std::string& path) {
  auto n = Integer(v, path);
  if (n < 0 || n > std::numeric_limits<int>::max()) throw SchemaViolation(path, "out of range");
  return static_cast<int>(n);
}

const json& Array(const json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaViolation(path, "expected an array");
  return v;
}

std::vector<NumberedLine> Lines(const json& v, const std::string& path, int start, int count) {
  Array(v, path);
  if (v.size() != static_cast<std::size_t>(count)) {
    throw SchemaViolation(path, "has " + std::to_string(v.size()) + " lines but the header says " +
                                    std::to_string(count));
  }
  std::vector<NumberedLine> lines;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string p = Index(path, i);
    if (!v[i].is_array() || v[i].size() != 2) throw SchemaViolation(p, "expected [line, text]");
    NumberedLine line{static_cast<int>(Integer(v[i][0], p + "[0]")), String(v[i][1], p + "[1]", true)};
    if (line.number != start + static_cast<int>(i)) {
      throw SchemaViolation(p + "[0]", "line numbers must be contiguous from " + std::to_string(start));
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

Hunk ParseHunk(const json& v, const std::string& path) {
  Hunk h;
  h.hunk_id = String(Member(v, path, "hunk_id"), path + ".hunk_id");
  h.old_start = Count(Member(v, path, "old_start"), path + ".old_start");
  h.old_lines = Count(Member(v, path, "old_lines"), path + ".old_lines");
  h.new_start = Count(Member(v, path, "new_start"), path + ".new_start");
  h.new_lines = Count(Member(v, path, "new_lines"), path + ".new_lines");
  if (h.old_lines > 0 && h.old_start == 0) throw SchemaViolation(path + ".old_start", "must be >= 1");
  if (h.new_lines > 0 && h.new_start == 0) throw SchemaViolation(path + ".new_start", "must be >= 1");
  h.added = Lines(Member(v, path, "added"), path + ".added", h.new_start, h.new_lines);
  h.deleted = Lines(Member(v, path, "deleted"), path + ".deleted", h.old_start, h.old_lines);
  return h;
}

}  // namespace

RepositoryHistory FixtureFromJson(const json& doc) {
  RepositoryHistory history;
  if (!doc.is_object()) throw SchemaViolation("$", "expected a top-level object");

  const json& commits = Array(Member(doc, "$", "commits"), "commits");
  std::unordered_set<std::string> seen_shas;
  for (std::size_t i = 0; i < commits.size(); ++i) {
    const std::string p = Index("commits", i);
    CommitRecord c;
    c.sha = String(Member(commits[i], p, "sha"), p + ".sha");
    if (!seen_shas.insert(c.sha).second) throw SchemaViolation(p + ".sha", "duplicate commit");
    const json& parents = Array(Member(commits[i], p, "parents"), p + ".parents");
    for (std::size_t k = 0; k < parents.size(); ++k) {
      c.parents.push_back(String(parents[k], Index(p + ".parents", k)));
    }
    if (i > 0 && (c.parents.empty() || c.parents.front() != history.commits.back().sha)) {
      throw SchemaViolation(p + ".parents", "first parent must be the previous mainline commit");
    }
    c.timestamp = Integer(Member(commits[i], p, "timestamp"), p + ".timestamp");
    c.sequence_index = i;
    history.commits.push_back(std::move(c));
  }
  const CommitIndex index(history.commits);

  const json& files = Array(Member(doc, "$", "files"), "files");
  for (std::size_t f = 0; f < files.size(); ++f) {
    const std::string fp = Index("files", f);
    FileHistory file;
    file.identity.file_id = String(Member(files[f], fp, "file_id"), fp + ".file_id");
    if (history.files.contains(file.identity.file_id)) {
      throw SchemaViolation(fp + ".file_id", "duplicate file id");
    }
    if (auto it = files[f].find("path_history"); it != files[f].end()) {
      const std::string hp = fp + ".path_history";
      Array(*it, hp);
      for (std::size_t k = 0; k < it->size(); ++k) {
        const json& entry = (*it)[k];
        const std::string ep = Index(hp, k);
        if (!entry.is_array() || entry.size() != 2) throw SchemaViolation(ep, "expected [sha, path]");
        PathChange change{String(entry[0], ep + "[0]"), String(entry[1], ep + "[1]")};
        if (!index.contains(change.commit_sha)) throw SchemaViolation(ep + "[0]", "unknown commit");
        file.identity.path_history.push_back(std::move(change));
      }
    }
    if (auto it = files[f].find("current_path"); it != files[f].end()) {
      file.identity.current_path = String(*it, fp + ".current_path");
    } else if (!file.identity.path_history.empty()) {
      file.identity.current_path = file.identity.path_history.back().path;
    } else {
      file.identity.current_path = file.identity.file_id;
    }

    const json& actions = Array(Member(files[f], fp, "actions"), fp + ".actions");
    std::optional<std::size_t> previous_seq;
    for (std::size_t a = 0; a < actions.size(); ++a) {
      const std::string ap = Index(fp + ".actions", a);
      FileAction action;
      action.file_id = file.identity.file_id;
      action.commit_sha = String(Member(actions[a], ap, "commit_sha"), ap + ".commit_sha");
      if (!index.contains(action.commit_sha)) {
        throw SchemaViolation(ap + ".commit_sha", "not a listed commit");
      }
      const std::size_t seq = index.at(action.commit_sha);
      if (previous_seq && seq <= *previous_seq) {
        throw SchemaViolation(ap + ".commit_sha", "actions must follow mainline order");
      }
      previous_seq = seq;
      action.action_id = MakeActionId(action.commit_sha, action.file_id);

      auto mode = ParseMode(String(Member(actions[a], ap, "mode"), ap + ".mode"));
      if (!mode) throw SchemaViolation(ap + ".mode", "must be one of A, D, M, C, R, U");
      action.mode = *mode;
      const bool needs_old = *mode == ActionMode::kCopied || *mode == ActionMode::kRenamed;
      auto old = actions[a].find("old_file_id");
      const bool has_old = old != actions[a].end() && !old->is_null();
      if (has_old != needs_old) {
        throw SchemaViolation(ap + ".old_file_id", needs_old ? "required for modes C and R"
                                                             : "only allowed for modes C and R");
      }
      if (has_old) action.old_file_id = String(*old, ap + ".old_file_id");

      const json& hunks = Array(Member(actions[a], ap, "hunks"), ap + ".hunks");
      for (std::size_t h = 0; h < hunks.size(); ++h) {
        const std::string hp = Index(ap + ".hunks", h);
        Hunk hunk = ParseHunk(hunks[h], hp);
        if (!action.hunks.empty() && hunk.old_start <= action.hunks.back().old_start) {
          throw SchemaViolation(hp + ".old_start", "hunks must be sorted ascending by old_start");
        }
        action.hunks.push_back(std::move(hunk));
      }
      file.actions.push_back(std::move(action));
    }
    history.files.emplace(file.identity.file_id, std::move(file));
  }

  for (const auto& [id, file] : history.files) {
    for (const auto& action : file.actions) {
      if (action.old_file_id && !history.files.contains(*action.old_file_id)) {
        throw SchemaViolation("files[" + id + "].old_file_id", "unknown file id " + *action.old_file_id);
      }
    }
  }

  history.total_commits = history.commits.size();
  if (auto it = doc.find("total_commits"); it != doc.end()) {
    history.total_commits = static_cast<std::size_t>(Count(*it, "total_commits"));
  }
  return history;
}

nlohmann::ordered_json FixtureToJson(const RepositoryHistory& history) {
  using oj = nlohmann::ordered_json;
  oj commits = oj::array();
  for (const auto& c : history.commits) {
    commits.push_back({{"sha", c.sha}, {"parents", c.parents}, {"timestamp", c.timestamp}});
  }
  auto lines = [](const std::vector<NumberedLine>& v) {
    oj out = oj::array();
    for (const auto& l : v) out.push_back(oj::array({l.number, l.text}));
    return out;
  };
  oj files = oj::array();
  for (const auto& [id, file] : history.files) {
    oj actions = oj::array();
    for (const auto& a : file.actions) {
      oj hunks = oj::array();
      for (const auto& h : a.hunks) {
        hunks.push_back({{"hunk_id", h.hunk_id},
                         {"old_start", h.old_start},
                         {"old_lines", h.old_lines},
                         {"new_start", h.new_start},
                         {"new_lines", h.new_lines},
                         {"added", lines(h.added)},
                         {"deleted", lines(h.deleted)}});
      }
      actions.push_back({{"commit_sha", a.commit_sha},
                         {"mode", std::string(1, ModeLetter(a.mode))},
                         {"old_file_id", a.old_file_id ? oj(*a.old_file_id) : oj(nullptr)},
                         {"hunks", std::move(hunks)}});
    }
    oj path_history = oj::array();
    for (const auto& change : file.identity.path_history) {
      path_history.push_back(oj::array({change.commit_sha, change.path}));
    }
    files.push_back({{"file_id", id},
                     {"current_path", file.identity.current_path},
                     {"path_history", std::move(path_history)},
                     {"actions", std::move(actions)}});
  }
  return {{"commits", std::move(commits)},
          {"files", std::move(files)},
          {"total_commits", history.total_commits}};
}

RepositoryHistory LoadFixture(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(ReadFile(path));
  } catch (const json::parse_error& e) {
    throw SchemaViolation("$", std::string("invalid JSON: ") + e.what());
  }
  return FixtureFromJson(doc);
}

void SaveFixture(const RepositoryHistory& history, const std::filesystem::path& path) {
  WriteFileAtomically(path, FixtureToJson(history).dump(1) + "\n");
}

}  // namespace satd
