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

#ifndef SATD_MATCHER_H_
#define SATD_MATCHER_H_

// Reconciles raw SATDs into tracked SATDs. Within one (commit, file) group
// every deleted raw SATD is scored against every created one; the greedy
// selection below then pairs a deleted SATD with its "following" SATD, and
// chains of such pairs collapse into a single record with update actions.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "satd/tracker.h"

namespace satd {

struct MatchFeatures {
  std::string description;
  std::string previous_line;
  std::string next_line;
  std::string hunk_id;

  bool operator==(const MatchFeatures&) const = default;
};

struct MatchConfig {
  double description_weight = 0.6;
  double prev_line_weight = 0.2;
  double next_line_weight = 0.0;
  double hunk_weight = 0.2;
  double threshold = 0.4;

  // Throws satd::Error unless every value lies in [0, 1] and the weights
  // sum to 1 within 1e-9.
  void Validate() const;

  bool operator==(const MatchConfig&) const = default;
};

// Scores within this distance below the threshold still count as reaching
// it, so tenth-valued weights compare exactly against tenth thresholds.
inline constexpr double kScoreTolerance = 1e-9;

// Lower-cased word tokens: maximal runs of IsWordByte characters.
std::set<std::string> Tokenize(std::string_view text);

// |A ∩ B| / |A ∪ B| over token sets; 1 when both are empty.
double Jaccard(std::string_view a, std::string_view b);

double ScorePair(const MatchFeatures& deleted, const MatchFeatures& created, const MatchConfig& cfg);

class ScoreMatrix {
 public:
  ScoreMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  double& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> cells_;
};

ScoreMatrix BuildScoreMatrix(std::span<const MatchFeatures> deleted,
                             std::span<const MatchFeatures> created, const MatchConfig& cfg);

// Repeatedly takes the highest remaining cell, accepting it while it reaches
// `threshold` and retiring its row and column. Ties go to the lowest row,
// then the lowest column. Returns (row, col) pairs in selection order.
std::vector<std::pair<std::size_t, std::size_t>> GreedySelect(const ScoreMatrix& scores,
                                                              double threshold);

struct MatchCandidate {
  std::string raw_id;
  MatchFeatures features;
};

struct MatchPair {
  std::string deleted_id;
  std::string created_id;
  double score = 0.0;

  bool operator==(const MatchPair&) const = default;
};

std::vector<MatchPair> GreedyMatch(std::span<const MatchCandidate> deleted,
                                   std::span<const MatchCandidate> created, const MatchConfig& cfg);

MatchFeatures DeletionFeatures(const RawSatd& satd);
MatchFeatures CreationFeatures(const RawSatd& satd);

// One distinct SATD over its whole life.
struct TrackedSatd {
  std::string created_in_file;
  std::string last_appeared_in_file;
  int created_in_line = 0;
  int last_appeared_in_line = 0;
  std::string created_in_commit;
  std::optional<std::string> deleted_in_commit;
  std::string creation_text;
  std::vector<std::string> update_texts;
  std::vector<std::pair<int, int>> updated_in_lines;  // (old line, new line)
  std::vector<std::string> updated_in_commits;

  bool operator==(const TrackedSatd&) const = default;
};

// Path of `file_id` after the commit at the given sequence index; nullopt
// asks for the latest known path.
using PathResolver =
    std::function<std::string(const std::string& file_id, std::optional<std::size_t> seq)>;

// Collapses following-SATD chains. `raw` fixes the output order (by chain
// head). Throws satd::Error when `pairs` is not injective on either side
// and CyclicChain when a chain has no head.
std::vector<TrackedSatd> MergeChains(std::span<const RawSatd> raw, std::span<const MatchPair> pairs,
                                     const PathResolver& paths);

// Raw SATDs that share a commit and a file: the deletions and creations that
// compete for each other in the greedy selection.
struct CandidateGroup {
  std::string commit_sha;
  std::size_t sequence_index = 0;
  std::string file_id;
  std::vector<const RawSatd*> deleted;
  std::vector<const RawSatd*> created;
};

// Groups with at least one deletion and one creation, ordered by
// (sequence_index, file_id).
std::vector<CandidateGroup> CollectCandidateGroups(std::span<const RawSatd> raw);

struct Step3Result {
  std::vector<TrackedSatd> satds;
  std::vector<MatchPair> pairs;
};

Step3Result RunStep3(std::span<const RawSatd> raw, const MatchConfig& cfg, const PathResolver& paths,
                     unsigned jobs = 1);

// Flattens tracker output in (file_id, creation order).
std::vector<RawSatd> FlattenRaw(const std::map<std::string, std::vector<RawSatd>>& by_file);

}  // namespace satd

#endif  // SATD_MATCHER_H_
