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

#ifndef SATD_TRACKER_H_
#define SATD_TRACKER_H_

// Hunk-level SATD tracking. Every file's actions are scanned in mainline
// order; tagged added lines create raw SATDs, a deleted line removes the
// alive SATD sitting at that line, and every other alive SATD has its
// current_line shifted by the net size of the hunks that end above it.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "satd/detector.h"
#include "satd/history.h"
#include "satd/replay.h"

namespace satd {

struct RawSatd {
  std::string raw_id;
  std::string file_id;
  std::string created_in_commit;
  std::string created_in_hunk;  // empty for lines carried in by a copy
  int created_in_line = 0;
  int current_line = 0;
  std::string creation_text;
  std::optional<std::string> deleted_in_commit;
  std::optional<std::string> deleted_in_hunk;

  // Context captured for the matcher: neighbours in the post-image at
  // creation and in the pre-image at deletion ("" past either file end).
  std::string created_prev_line;
  std::string created_next_line;
  std::string deleted_text;
  std::string deleted_prev_line;
  std::string deleted_next_line;

  std::size_t created_seq = 0;
  std::optional<std::size_t> deleted_seq;

  bool alive() const { return !deleted_in_commit.has_value(); }

  bool operator==(const RawSatd&) const = default;
};

struct TrackOptions {
  // kLenient downgrades DanglingDeletion and ReplayMismatch to warnings.
  ReplayPolicy policy = ReplayPolicy::kStrict;
};

// Pre-image of a copy-edit: the content of `file_id` just before the commit
// at `sequence_index`.
using CopySourceFn =
    std::function<std::vector<std::string>(const std::string& file_id, std::size_t sequence_index)>;

// Incremental tracker for a single file identity.
class FileTracker {
 public:
  FileTracker(const Detector& detector, std::string file_id, TrackOptions options = {});

  // Applies one action. `sequence_index` is the mainline position of
  // action.commit_sha. `copy_source` is consulted only for mode C.
  void Apply(const FileAction& action, std::size_t sequence_index,
             const CopySourceFn& copy_source = {});

  const std::vector<RawSatd>& satds() const { return satds_; }
  std::vector<RawSatd> TakeSatds() { return std::move(satds_); }
  const std::vector<std::string>& content() const { return content_; }

 private:
  void MarkDeleted(RawSatd& satd, const FileAction& action, std::size_t seq,
                   const std::string& hunk_id, const std::string& text);
  void Create(const FileAction& action, std::size_t seq, const std::string& hunk_id, int line,
              const std::string& text, const std::vector<std::string>& post);

  const Detector* detector_;
  std::string file_id_;
  TrackOptions options_;
  std::vector<RawSatd> satds_;
  std::vector<std::string> content_;
  std::size_t next_serial_ = 1;
};

// Tracks one file end to end. `commits` maps each action's sha to its
// mainline position.
std::vector<RawSatd> TrackFile(const FileHistory& file, const Detector& detector,
                               const CommitIndex& commits, TrackOptions options = {},
                               const CopySourceFn& copy_source = {});

// Union of TrackFile over every file, keyed by file id. Raw ids are unique
// across the repository. `jobs` > 1 tracks files in parallel; the result
// does not depend on it.
std::map<std::string, std::vector<RawSatd>> TrackRepository(const RepositoryHistory& history,
                                                            const Detector& detector,
                                                            TrackOptions options = {},
                                                            unsigned jobs = 1);

}  // namespace satd

#endif  // SATD_TRACKER_H_
