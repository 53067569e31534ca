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

#ifndef SATD_HISTORY_H_
#define SATD_HISTORY_H_

// In-memory model of an ingested mainline history: commits, per-file
// action sequences and their zero-context hunks. Both the git reader and
// the JSON fixture loader produce a RepositoryHistory.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace satd {

struct CommitRecord {
  std::string sha;
  std::vector<std::string> parents;
  std::int64_t timestamp = 0;  // author time, seconds since epoch (UTC)
  std::size_t sequence_index = 0;

  bool operator==(const CommitRecord&) const = default;
};

enum class ActionMode { kAdded, kDeleted, kModified, kCopied, kRenamed, kUnmerged };

char ModeLetter(ActionMode mode);
// Returns nullopt for anything outside {A, D, M, C, R, U}.
std::optional<ActionMode> ParseMode(std::string_view letter);

struct NumberedLine {
  int number = 0;
  std::string text;

  bool operator==(const NumberedLine&) const = default;
};

// A zero-context hunk. Start/count follow unified diff header semantics:
// when a side has zero lines its start names the line *before* the change
// (0 at the top of the file).
struct Hunk {
  std::string hunk_id;
  int old_start = 0;
  int old_lines = 0;
  int new_start = 0;
  int new_lines = 0;
  std::vector<NumberedLine> added;
  std::vector<NumberedLine> deleted;

  // First pre-image line that is not touched by this hunk and lies after
  // it. Lines at or beyond this position are shifted by Delta().
  int OldEnd() const { return old_lines > 0 ? old_start + old_lines : old_start + 1; }
  int Delta() const { return new_lines - old_lines; }

  bool operator==(const Hunk&) const = default;
};

struct FileAction {
  std::string action_id;
  std::string commit_sha;
  std::string file_id;
  ActionMode mode = ActionMode::kModified;
  std::optional<std::string> old_file_id;
  std::vector<Hunk> hunks;

  bool operator==(const FileAction&) const = default;
};

struct PathChange {
  std::string commit_sha;
  std::string path;

  bool operator==(const PathChange&) const = default;
};

struct FileIdentity {
  std::string file_id;
  std::string current_path;
  std::vector<PathChange> path_history;

  bool operator==(const FileIdentity&) const = default;
};

struct FileHistory {
  FileIdentity identity;
  std::vector<FileAction> actions;

  bool operator==(const FileHistory&) const = default;
};

struct RepositoryHistory {
  std::vector<CommitRecord> commits;  // mainline, oldest first
  std::map<std::string, FileHistory> files;  // keyed by file_id
  // Commits reachable from any ref; equals commits.size() for fixtures
  // that do not record it.
  std::size_t total_commits = 0;

  bool operator==(const RepositoryHistory&) const = default;
};

// sha -> sequence_index lookup over a mainline commit list.
class CommitIndex {
 public:
  CommitIndex() = default;
  explicit CommitIndex(const std::vector<CommitRecord>& commits);

  // Throws satd::Error for a sha outside the mainline.
  std::size_t at(const std::string& sha) const;
  bool contains(const std::string& sha) const { return index_.contains(sha); }

 private:
  std::unordered_map<std::string, std::size_t> index_;
};

// Path a file carried after the commit at `sequence_index` was applied.
// Falls back to the first recorded path (or the file id) for commits that
// precede the file's history.
std::string PathAt(const FileIdentity& identity, const CommitIndex& commits,
                   std::size_t sequence_index);

std::string MakeActionId(const std::string& commit_sha, const std::string& file_id);

}  // namespace satd

#endif  // SATD_HISTORY_H_
