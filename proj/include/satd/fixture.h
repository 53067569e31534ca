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

#ifndef SATD_FIXTURE_H_
#define SATD_FIXTURE_H_

// Portable JSON form of a RepositoryHistory:
//
//   {"commits": [{"sha", "parents", "timestamp"}, ...],
//    "files": [{"file_id", "actions": [{"commit_sha", "mode", "old_file_id",
//               "hunks": [{"hunk_id", "old_start", "old_lines", "new_start",
//                          "new_lines", "added": [[line, text], ...],
//                          "deleted": [[line, text], ...]}]}]}]}
//
// Commits are listed in mainline order. Optional extensions written by the
// exporter: per-file "current_path" and "path_history" ([[sha, path], ...])
// and a top-level "total_commits".

#include <filesystem>

#include "json.hpp"

#include "satd/history.h"

namespace satd {

// Validates every invariant of the history model and throws SchemaViolation
// naming the offending field.
RepositoryHistory FixtureFromJson(const nlohmann::json& doc);
nlohmann::ordered_json FixtureToJson(const RepositoryHistory& history);

RepositoryHistory LoadFixture(const std::filesystem::path& path);
void SaveFixture(const RepositoryHistory& history, const std::filesystem::path& path);

}  // namespace satd

#endif  // SATD_FIXTURE_H_
