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


#include "satd/matcher.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "satd/errors.h"
#include "test_support.h"

namespace satd {
namespace {

TEST(TokenizeTest, LowercasedWordRuns) {
  EXPECT_EQ(Tokenize("// TODO: update, etc"), (std::set<std::string>{"todo", "update", "etc"}));
  EXPECT_EQ(Tokenize("snake_case x1 x1"), (std::set<std::string>{"snake_case", "x1"}));
  EXPECT_EQ(Tokenize("caf\xc3\xa9!"), (std::set<std::string>{"caf\xc3\xa9"}));
  EXPECT_TRUE(Tokenize(" // */ ").empty());
}

TEST(JaccardTest, Identical) { EXPECT_EQ(Jaccard("todo fix this", "todo fix this"), 1.0); }

TEST(JaccardTest, Disjoint) { EXPECT_EQ(Jaccard("todo fix", "hack around"), 0.0); }

TEST(JaccardTest, HandCounted) {
  // {todo, update, etc} vs {todo, update, use, placeholder}: 2 shared of 5.
  EXPECT_EQ(Jaccard("todo update etc", "todo update use placeholder"), 2.0 / 5.0);
}

TEST(JaccardTest, EmptySides) {
  EXPECT_EQ(Jaccard("", ""), 1.0);
  EXPECT_EQ(Jaccard("  ", "{"), 1.0);
  EXPECT_EQ(Jaccard("", "x"), 0.0);
}

TEST(JaccardTest, SymmetricAndBounded) {
  std::mt19937 rng(3);
  const std::vector<std::string> words = {"a", "b", "c", "todo", "fix", "x_y"};
  for (int i = 0; i < 500; ++i) {
    std::string s, t;
    for (int k = 0; k < 4; ++k) {
      s += words[rng() % words.size()] + " ";
      t += words[rng() % words.size()] + ",";
    }
    const double j = Jaccard(s, t);
    EXPECT_EQ(j, Jaccard(t, s));
    EXPECT_GE(j, 0.0);
    EXPECT_LE(j, 1.0);
  }
}

TEST(ScoreTest, CompositeExample) {
  MatchFeatures deleted{"todo update etc", "int a = 0;", "return x;", "h1"};
  MatchFeatures created{"todo update use placeholder", "int a = 0;", "close();", "h1"};
  EXPECT_NEAR(ScorePair(deleted, created, MatchConfig{}), 0.64, 1e-12);
}

TEST(ScoreTest, EmptyHunkIdsNeverMatch) {
  MatchConfig cfg{0, 0, 0, 1, 0.5};
  EXPECT_EQ(ScorePair({"a", "", "", ""}, {"a", "", "", ""}, cfg), 0.0);
  EXPECT_EQ(ScorePair({"a", "", "", "h"}, {"a", "", "", "h"}, cfg), 1.0);
}

TEST(ScoreTest, ThresholdIsInclusive) {
  // 0.6*0 + 0.2*1 + 0*0 + 0.2*1 sits exactly on the default threshold.
  std::vector<MatchCandidate> del = {{"d", {"alpha", "ctx", "", "h"}}};
  std::vector<MatchCandidate> cr = {{"c", {"beta", "ctx", "zz", "h"}}};
  auto pairs = GreedyMatch(del, cr, MatchConfig{});
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_NEAR(pairs[0].score, 0.4, 1e-15);
  cr[0].features.hunk_id = "other";
  EXPECT_TRUE(GreedyMatch(del, cr, MatchConfig{}).empty());
}

TEST(MatchConfigTest, Validation) {
  EXPECT_NO_THROW(MatchConfig{}.Validate());
  EXPECT_THROW((MatchConfig{0.5, 0.5, 0.5, 0, 0.4}.Validate()), Error);
  EXPECT_THROW((MatchConfig{1, 0, 0, 0, 1.5}.Validate()), Error);
  EXPECT_THROW((MatchConfig{1.2, -0.2, 0, 0, 0.4}.Validate()), Error);
  EXPECT_NO_THROW((MatchConfig{0.1, 0.2, 0.3, 0.4, 0}.Validate()));
}

// Four deleted and three created SATDs: the largest cell pairs the second
// deleted with the first created, the second pick follows, and the third
// iteration stops because every remaining score is below the threshold.
TEST(GreedyTest, FourByThreeStructure) {
  ScoreMatrix m(4, 3);
  const double cells[4][3] = {{0.30, 0.45, 0.10}, {0.90, 0.50, 0.20}, {0.35, 0.60, 0.15},
                              {0.10, 0.20, 0.38}};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 3; ++c) m.at(r, c) = cells[r][c];
  }
  auto pairs = GreedySelect(m, 0.4);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0], (std::pair<std::size_t, std::size_t>{1, 0}));
  EXPECT_EQ(pairs[1], (std::pair<std::size_t, std::size_t>{2, 1}));
}

TEST(GreedyTest, TiesGoToLowestRowThenColumn) {
  ScoreMatrix m(2, 2);
  m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = 0.5;
  auto pairs = GreedySelect(m, 0.4);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0], (std::pair<std::size_t, std::size_t>{0, 0}));
  EXPECT_EQ(pairs[1], (std::pair<std::size_t, std::size_t>{1, 1}));
}

TEST(GreedyTest, EmptyShapes) {
  EXPECT_TRUE(GreedySelect(ScoreMatrix(0, 3), 0.0).empty());
  EXPECT_TRUE(GreedySelect(ScoreMatrix(3, 0), 0.0).empty());
}

TEST(GreedyTest, AgreesWithNaiveRescan) {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 2000; ++round) {
    const std::size_t rows = rng() % 9, cols = rng() % 9;
    ScoreMatrix m(rows, cols);
    // Coarse values make ties common.
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = static_cast<double>(rng() % 11) / 10.0;
    }
    const double threshold = static_cast<double>(rng() % 11) / 10.0;
    ASSERT_EQ(GreedySelect(m, threshold), testing::NaiveGreedy(m, threshold));
  }
}

TEST(GreedyTest, RaisingThresholdOnlyDropsPairs) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 500; ++round) {
    ScoreMatrix m(6, 5);
    for (std::size_t r = 0; r < 6; ++r) {
      for (std::size_t c = 0; c < 5; ++c) m.at(r, c) = std::uniform_real_distribution<>(0, 1)(rng);
    }
    std::size_t previous = 99;
    for (int t = 0; t <= 10; ++t) {
      auto pairs = GreedySelect(m, t / 10.0);
      EXPECT_LE(pairs.size(), previous);
      auto lower = GreedySelect(m, std::max(0, t - 1) / 10.0);
      for (const auto& p : pairs) {
        EXPECT_NE(std::find(lower.begin(), lower.end(), p), lower.end());
      }
      previous = pairs.size();
    }
  }
}

RawSatd Raw(const std::string& id, const std::string& file, const std::string& created,
            std::size_t cseq, int line, const std::string& text) {
  RawSatd r;
  r.raw_id = id;
  r.file_id = file;
  r.created_in_commit = created;
  r.created_seq = cseq;
  r.created_in_line = line;
  r.current_line = line;
  r.creation_text = text;
  r.created_in_hunk = created + ":" + file + "#1";
  return r;
}

void Kill(RawSatd& r, const std::string& commit, std::size_t seq, int at_line) {
  r.deleted_in_commit = commit;
  r.deleted_seq = seq;
  r.current_line = at_line;
  r.deleted_in_hunk = commit + ":" + r.file_id + "#1";
  r.deleted_text = r.creation_text;
}

PathResolver FixedPaths() {
  return [](const std::string& id, std::optional<std::size_t> seq) {
    return id + "@" + (seq ? std::to_string(*seq) : std::string("now"));
  };
}

TEST(MergeChainsTest, ThreeLinkChain) {
  std::vector<RawSatd> raw = {Raw("a", "f", "c1", 1, 10, "// TODO one"),
                              Raw("b", "f", "c2", 2, 12, "// TODO one more"),
                              Raw("c", "f", "c5", 5, 20, "// TODO one more again"),
                              Raw("x", "f", "c2", 2, 3, "// FIXME else")};
  Kill(raw[0], "c2", 2, 11);
  Kill(raw[1], "c5", 5, 14);
  std::vector<MatchPair> pairs = {{"b", "c", 0.9}, {"a", "b", 0.8}};
  auto out = MergeChains(raw, pairs, FixedPaths());
  ASSERT_EQ(out.size(), 2u);
  const TrackedSatd& t = out[0];
  EXPECT_EQ(t.created_in_file, "f@1");
  EXPECT_EQ(t.created_in_line, 10);
  EXPECT_EQ(t.created_in_commit, "c1");
  EXPECT_EQ(t.creation_text, "// TODO one");
  EXPECT_EQ(t.update_texts, (std::vector<std::string>{"// TODO one more", "// TODO one more again"}));
  EXPECT_EQ(t.updated_in_lines, (std::vector<std::pair<int, int>>{{11, 12}, {14, 20}}));
  EXPECT_EQ(t.updated_in_commits, (std::vector<std::string>{"c2", "c5"}));
  EXPECT_EQ(t.deleted_in_commit, std::nullopt);
  EXPECT_EQ(t.last_appeared_in_line, 20);
  EXPECT_EQ(t.last_appeared_in_file, "f@now");
  EXPECT_EQ(out[1].creation_text, "// FIXME else");
  EXPECT_TRUE(out[1].update_texts.empty());
}

TEST(MergeChainsTest, DeletedTailUsesDeletionPath) {
  std::vector<RawSatd> raw = {Raw("a", "f", "c1", 1, 10, "// TODO one")};
  Kill(raw[0], "c3", 3, 7);
  auto out = MergeChains(raw, {}, FixedPaths());
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].deleted_in_commit, "c3");
  EXPECT_EQ(out[0].last_appeared_in_line, 7);
  EXPECT_EQ(out[0].last_appeared_in_file, "f@3");
}

TEST(MergeChainsTest, Errors) {
  std::vector<RawSatd> raw = {Raw("a", "f", "c1", 1, 1, "x"), Raw("b", "f", "c2", 2, 1, "y")};
  std::vector<MatchPair> cycle = {{"a", "b", 1}, {"b", "a", 1}};
  EXPECT_THROW(MergeChains(raw, cycle, FixedPaths()), CyclicChain);
  std::vector<MatchPair> unknown = {{"a", "zz", 1}};
  EXPECT_THROW(MergeChains(raw, unknown, FixedPaths()), Error);
  std::vector<MatchPair> twice = {{"a", "b", 1}, {"a", "b", 1}};
  EXPECT_THROW(MergeChains(raw, twice, FixedPaths()), Error);
  raw.push_back(raw[0]);
  EXPECT_THROW(MergeChains(raw, {}, FixedPaths()), Error);
}

TEST(CandidateGroupTest, GroupsByCommitAndFile) {
  std::vector<RawSatd> raw = {Raw("a", "f", "c1", 1, 1, "// TODO a"), Raw("b", "f", "c2", 2, 1, "// TODO b"),
                              Raw("c", "g", "c2", 2, 1, "// TODO c"), Raw("d", "f", "c3", 3, 1, "// TODO d")};
  Kill(raw[0], "c2", 2, 1);
  auto groups = CollectCandidateGroups(raw);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(groups[0].commit_sha, "c2");
  EXPECT_EQ(groups[0].file_id, "f");
  ASSERT_EQ(groups[0].deleted.size(), 1u);
  ASSERT_EQ(groups[0].created.size(), 1u);
  EXPECT_EQ(groups[0].created[0]->raw_id, "b");
}

TEST(Step3Test, CountIdentityAndJobsIndependence) {
  testing::HistoryGenerator gen(77);
  Detector detector;
  for (int round = 0; round < 60; ++round) {
    auto h = testing::HistoryFromSnapshots(gen.Generate(25, 150));
    auto raw = FlattenRaw(TrackRepository(h, detector));
    auto paths = FixedPaths();
    auto one = RunStep3(raw, MatchConfig{}, paths, 1);
    auto many = RunStep3(raw, MatchConfig{}, paths, 3);
    EXPECT_EQ(one.satds.size(), raw.size() - one.pairs.size());
    EXPECT_EQ(one.satds, many.satds);
    EXPECT_EQ(one.pairs, many.pairs);
    std::size_t updates = 0;
    for (const auto& t : one.satds) {
      EXPECT_EQ(t.update_texts.size(), t.updated_in_lines.size());
      EXPECT_EQ(t.update_texts.size(), t.updated_in_commits.size());
      updates += t.update_texts.size();
    }
    EXPECT_EQ(updates, one.pairs.size());
  }
}

TEST(Step3Test, RejectsInvalidConfig) {
  EXPECT_THROW(RunStep3({}, MatchConfig{0.5, 0.6, 0, 0, 0.4}, FixedPaths()), Error);
}

}  // namespace
}  // namespace satd
