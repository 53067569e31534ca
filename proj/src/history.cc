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

#include "satd/history.h"

#include "satd/errors.h"

namespace satd {

char ModeLetter(ActionMode mode) {
  switch (mode) {
    case ActionMode::kAdded: return 'A';
    case ActionMode::kDeleted: return 'D';
    case ActionMode::kModified: return 'M';
    case ActionMode::kCopied: return 'C';
    case ActionMode::kRenamed: return 'R';
    case ActionMode::kUnmerged: return 'U';
  }
  return '?';
}

std::optional<ActionMode> ParseMode(std::string_view letter) {
  if (letter.size() != 1) return std::nullopt;
  switch (letter[0]) {
    case 'A': return ActionMode::kAdded;
    case 'D': return ActionMode::kDeleted;
    case 'M': return ActionMode::kModified;
    case 'C': return ActionMode::kCopied;
    case 'R': return ActionMode::kRenamed;
    case 'U': return ActionMode::kUnmerged;
    default: return std::nullopt;
  }
}

CommitIndex::CommitIndex(const std::vector<CommitRecord>& commits) {
  index_.reserve(commits.size());
  for (const auto& c : commits) index_.emplace(c.sha, c.sequence_index);
}

std::size_t CommitIndex::at(const std::string& sha) const {
  auto it = index_.find(sha);
  if (it == index_.end()) throw Error("commit " + sha + " is not on the mainline");
  return it->second;
}

std::string PathAt(const FileIdentity& identity, const CommitIndex& commits,
                   std::size_t sequence_index) {
  if (identity.path_history.empty()) {
    return identity.current_path.empty() ? identity.file_id : identity.current_path;
  }
  const std::string* path = &identity.path_history.front().path;
  for (const auto& change : identity.path_history) {
    if (!commits.contains(change.commit_sha)) continue;
    if (commits.at(change.commit_sha) > sequence_index) break;
    path = &change.path;
  }
  return *path;
}

std::string MakeActionId(const std::string& commit_sha, const std::string& file_id) {
  return commit_sha + ":" + file_id;
}

}  // namespace satd
