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

#ifndef SATD_INGEST_H_
#define SATD_INGEST_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satd/git_repository.h"
#include "satd/history.h"

namespace satd {

// One file's section of a zero-context git patch. Hunk ids are left empty;
// they are assigned once the file identity is known.
struct FilePatch {
  ActionMode mode = ActionMode::kModified;
  std::string old_path;
  std::string new_path;
  bool binary = false;
  bool submodule = false;
  std::vector<Hunk> hunks;
};

struct CommitPatch {
  std::string sha;
  std::vector<FilePatch> files;
};

// Incremental parser for `git log -p -U0` output. Lines beginning with
// `commit_marker` open a new commit; the rest of such a line is its sha.
class PatchStreamParser {
 public:
  explicit PatchStreamParser(std::string commit_marker) : marker_(std::move(commit_marker)) {}

  void Feed(std::string_view line);
  std::vector<CommitPatch> Finish();

 private:
  enum class State { kHeader, kHunk };

  void StartFile(std::string_view header);
  void FinishFile();
  FilePatch& CurrentFile();

  std::string marker_;
  std::vector<CommitPatch> commits_;
  std::optional<FilePatch> file_;
  State state_ = State::kHeader;
  int pending_old_ = 0;
  int pending_new_ = 0;
};

// Parses a single commit's worth of zero-context patch text.
std::vector<FilePatch> ParseUnifiedDiff(std::string_view text);

// Unquotes a git C-style quoted path ("a\tb" etc.); unquoted input is
// returned as is.
std::string UnquoteGitPath(std::string_view s);

// Assigns stable file identities to the patches of a mainline walk. A
// rename keeps the file id of its source; a copy gets a new id whose
// old_file_id names the source.
std::map<std::string, FileHistory> BuildFileHistories(const std::vector<CommitRecord>& commits,
                                                      std::vector<CommitPatch> patches);

struct IngestOptions {
  std::optional<std::string> branch;  // unset: "master", then "main"
  int rename_similarity = 50;         // percent
};

// Diffs each mainline commit against its first parent (root commits against
// the empty tree) and groups the resulting actions per file.
std::map<std::string, FileHistory> ExtractFileActions(const GitRepository& repo,
                                                      const std::vector<CommitRecord>& commits,
                                                      const IngestOptions& options = {});

RepositoryHistory IngestRepository(const GitRepository& repo, const IngestOptions& options = {});

}  // namespace satd

#endif  // SATD_INGEST_H_
