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

#ifndef SATD_REPLAY_H_
#define SATD_REPLAY_H_

#include <span>
#include <string>
#include <vector>

#include "satd/history.h"

namespace satd {

enum class ReplayPolicy {
  kStrict,   // throw ReplayMismatch on any inconsistency
  kLenient,  // pad missing lines with "" and ignore text mismatches
};

// Applies the zero-context hunks of a single file action to `pre_image`.
// All hunks address the same pre-image frame and must be sorted by
// old_start.
std::vector<std::string> ApplyHunks(const std::vector<std::string>& pre_image,
                                    std::span<const Hunk> hunks,
                                    ReplayPolicy policy = ReplayPolicy::kStrict);

// Content of a file after all of `actions` have been applied to `initial`
// (the copy source for histories that begin with a copy-edit).
std::vector<std::string> ReplayActions(std::span<const FileAction> actions,
                                       std::vector<std::string> initial = {},
                                       ReplayPolicy policy = ReplayPolicy::kStrict);

}  // namespace satd

#endif  // SATD_REPLAY_H_
