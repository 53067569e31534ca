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

#include "satd/replay.h"

#include "satd/errors.h"

namespace satd {
namespace {

[[noreturn]] void Mismatch(const Hunk& hunk, const std::string& what) {
  throw ReplayMismatch("hunk " + hunk.hunk_id + " (@@ -" + std::to_string(hunk.old_start) + "," +
                       std::to_string(hunk.old_lines) + " +" + std::to_string(hunk.new_start) + "," +
                       std::to_string(hunk.new_lines) + " @@): " + what);
}

}  // namespace

std::vector<std::string> ApplyHunks(const std::vector<std::string>& pre_image,
                                    std::span<const Hunk> hunks, ReplayPolicy policy) {
  const bool strict = policy == ReplayPolicy::kStrict;
  std::vector<std::string> post;
  post.reserve(pre_image.size());
  std::size_t next_old = 1;  // 1-based index of the next unconsumed pre-image line

  auto copy_through = [&](std::size_t last, const Hunk& hunk) {
    for (; next_old <= last; ++next_old) {
      if (next_old <= pre_image.size()) {
        post.push_back(pre_image[next_old - 1]);
      } else if (strict) {
        Mismatch(hunk, "pre-image has only " + std::to_string(pre_image.size()) + " lines");
      } else {
        post.emplace_back();
      }
    }
  };

  for (const Hunk& hunk : hunks) {
    const auto start = static_cast<std::size_t>(std::max(hunk.old_start, 0));
    const std::size_t keep_through = hunk.old_lines > 0 ? (start == 0 ? 0 : start - 1) : start;
    if (keep_through + 1 < next_old) {
      if (strict) Mismatch(hunk, "overlaps or precedes the previous hunk");
    } else {
      copy_through(keep_through, hunk);
    }
    for (const auto& line : hunk.deleted) {
      if (line.number != static_cast<int>(next_old) && strict) {
        Mismatch(hunk, "deleted line " + std::to_string(line.number) + " is not contiguous");
      }
      if (strict) {
        if (next_old > pre_image.size()) Mismatch(hunk, "deletes past end of file");
        if (pre_image[next_old - 1] != line.text) {
          Mismatch(hunk, "deleted line " + std::to_string(line.number) +
                             " does not match the reconstructed pre-image");
        }
      }
      ++next_old;
    }
    if (!hunk.added.empty() && strict &&
        hunk.added.front().number != static_cast<int>(post.size()) + 1) {
      Mismatch(hunk, "added lines start at " + std::to_string(hunk.added.front().number) +
                         " but the post-image is at line " + std::to_string(post.size() + 1));
    }
    for (const auto& line : hunk.added) post.push_back(line.text);
  }
  for (; next_old <= pre_image.size(); ++next_old) post.push_back(pre_image[next_old - 1]);
  return post;
}

std::vector<std::string> ReplayActions(std::span<const FileAction> actions,
                                       std::vector<std::string> initial, ReplayPolicy policy) {
  std::vector<std::string> content = std::move(initial);
  for (const auto& action : actions) {
    switch (action.mode) {
      case ActionMode::kAdded:
        content = ApplyHunks({}, action.hunks, policy);
        break;
      case ActionMode::kDeleted:
        content.clear();
        break;
      case ActionMode::kUnmerged:
        break;
      default:
        content = ApplyHunks(content, action.hunks, policy);
        break;
    }
  }
  return content;
}

}  // namespace satd
