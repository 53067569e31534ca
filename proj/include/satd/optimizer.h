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

#ifndef SATD_OPTIMIZER_H_
#define SATD_OPTIMIZER_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "satd/matcher.h"

namespace satd {

// A deleted raw SATD, the SATDs created in the same commit and file, and
// the human answer: which candidate (if any) is its following SATD.
struct LabeledCase {
  std::string group_commit;
  std::string group_file;
  MatchCandidate deleted;
  std::vector<MatchCandidate> candidates;
  std::optional<std::string> gold;  // nullopt: a true deletion
};

// Grid coordinates in integer tenths.
struct GridPoint {
  std::array<int, 4> weights{};  // description, previous line, next line, hunk
  int threshold = 0;

  MatchConfig ToConfig() const;
  bool operator==(const GridPoint&) const = default;
};

// Every weight tuple in tenths summing to 10 (286 of them) times the eleven
// thresholds 0..10: 3,146 points, weights enumerated lexicographically.
std::vector<GridPoint> EnumerateGrid();

// Fraction of cases whose predicted following SATD (possibly none) equals
// the gold answer. Greedy matching runs per group, so candidates compete.
// Throws EmptyLabelSet for no cases.
double EvaluateConfig(std::span<const LabeledCase> cases, const MatchConfig& cfg);

struct GridSearchResult {
  GridPoint best;
  MatchConfig config;
  double accuracy = 0.0;
  std::size_t correct = 0;
  std::size_t evaluations = 0;
};

// Exhaustive search over EnumerateGrid(). Among equally accurate points the
// higher threshold wins, then the lexicographically smaller weight tuple.
GridSearchResult GridSearch(std::span<const LabeledCase> cases, unsigned jobs = 1);

// Checks the label invariants: non-empty candidates, gold among them.
void ValidateCases(std::span<const LabeledCase> cases);

// Unlabeled cases (gold = nullopt) for every deletion that has at least one
// candidate, for export as an annotation template.
std::vector<LabeledCase> CandidateCases(std::span<const RawSatd> raw);

}  // namespace satd

#endif  // SATD_OPTIMIZER_H_
