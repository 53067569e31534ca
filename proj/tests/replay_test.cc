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

#include <gtest/gtest.h>

#include "satd/errors.h"
#include "test_support.h"

namespace satd {
namespace {

using testing::DiffLines;
using testing::MakeHunk;

using Lines = std::vector<std::string>;

TEST(ReplayTest, AddToEmpty) {
  std::vector<Hunk> hunks = {MakeHunk(0, {}, 1, {"a", "b"})};
  EXPECT_EQ(ApplyHunks({}, hunks), (Lines{"a", "b"}));
}

TEST(ReplayTest, ModifyInsertDelete) {
  const Lines pre = {"1", "2", "3", "4", "5"};
  std::vector<Hunk> hunks = {MakeHunk(0, {}, 1, {"0"}), MakeHunk(2, {"2", "3"}, 3, {"x"}),
                             MakeHunk(5, {}, 6, {"6", "7"})};
  EXPECT_EQ(ApplyHunks(pre, hunks), (Lines{"0", "1", "x", "4", "5", "6", "7"}));
}

TEST(ReplayTest, PureDeletion) {
  std::vector<Hunk> hunks = {MakeHunk(2, {"b"}, 1, {})};
  EXPECT_EQ(ApplyHunks({"a", "b", "c"}, hunks), (Lines{"a", "c"}));
}

TEST(ReplayTest, StrictRejectsWrongPreImage) {
  std::vector<Hunk> hunks = {MakeHunk(2, {"not b"}, 1, {})};
  EXPECT_THROW(ApplyHunks({"a", "b", "c"}, hunks), ReplayMismatch);
  EXPECT_EQ(ApplyHunks({"a", "b", "c"}, hunks, ReplayPolicy::kLenient), (Lines{"a", "c"}));
}

TEST(ReplayTest, StrictRejectsBadAddedPosition) {
  std::vector<Hunk> hunks = {MakeHunk(1, {"a"}, 4, {"z"})};
  EXPECT_THROW(ApplyHunks({"a", "b"}, hunks), ReplayMismatch);
}

TEST(ReplayTest, StrictRejectsOverlap) {
  std::vector<Hunk> hunks = {MakeHunk(2, {"b", "c"}, 2, {}), MakeHunk(3, {"c"}, 2, {})};
  EXPECT_THROW(ApplyHunks({"a", "b", "c", "d"}, hunks), ReplayMismatch);
}

TEST(ReplayTest, StrictRejectsShortPreImage) {
  std::vector<Hunk> hunks = {MakeHunk(5, {}, 6, {"x"})};
  EXPECT_THROW(ApplyHunks({"a"}, hunks), ReplayMismatch);
  EXPECT_EQ(ApplyHunks({"a"}, hunks, ReplayPolicy::kLenient), (Lines{"a", "", "", "", "", "x"}));
}

TEST(ReplayTest, RandomDiffsReplayExactly) {
  testing::HistoryGenerator gen(7);
  for (int round = 0; round < 200; ++round) {
    auto history = gen.Generate(10, 80);
    Lines prev;
    for (const auto& snapshot : history.snapshots) {
      ASSERT_EQ(ApplyHunks(prev, DiffLines(prev, snapshot)), snapshot);
      prev = snapshot;
    }
  }
}

TEST(ReplayTest, ReplayActionsFollowsModes) {
  FileAction add{"c1:f", "c1", "f", ActionMode::kAdded, {}, {MakeHunk(0, {}, 1, {"a"})}};
  FileAction mod{"c2:f", "c2", "f", ActionMode::kModified, {}, {MakeHunk(1, {}, 2, {"b"})}};
  FileAction del{"c3:f", "c3", "f", ActionMode::kDeleted, {}, {MakeHunk(1, {"a", "b"}, 0, {})}};
  std::vector<FileAction> actions = {add, mod};
  EXPECT_EQ(ReplayActions(actions), (Lines{"a", "b"}));
  actions.push_back(del);
  EXPECT_TRUE(ReplayActions(actions).empty());
  std::vector<FileAction> copied = {
      {"c4:g", "c4", "g", ActionMode::kCopied, "f", {MakeHunk(1, {}, 2, {"c"})}}};
  EXPECT_EQ(ReplayActions(copied, {"a", "b"}), (Lines{"a", "c", "b"}));
}

}  // namespace
}  // namespace satd
