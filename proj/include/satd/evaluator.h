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

#ifndef SATD_EVALUATOR_H_
#define SATD_EVALUATOR_H_

// SATD-level scoring: a tracked SATD is correct only when its creation, its
// deletion and every update action all match.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "satd/matcher.h"

namespace satd {

struct SatdKey {
  std::string created_in_commit;
  std::string created_in_file;
  int created_in_line = 0;
  std::optional<std::string> deleted_in_commit;
  std::vector<std::tuple<std::string, int, int>> updates;  // (commit, old line, new line)

  auto operator<=>(const SatdKey&) const = default;
};

SatdKey KeyOf(const TrackedSatd& satd);

struct EvaluationReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
};

// A ratio whose denominator is zero is 1 when the opposing error count is
// also zero (nothing predicted, nothing expected) and 0 otherwise.
EvaluationReport MetricsFromCounts(std::size_t tp, std::size_t fp, std::size_t fn);

// Throws DuplicateGoldKey when two gold records share a key.
EvaluationReport Evaluate(std::span<const TrackedSatd> predicted, std::span<const TrackedSatd> gold);

// Head-to-head audit of two tools. Precision comes from this tool's audited
// output; recall is the share of the other tool's correct SATDs that this
// tool also got right.
struct PairwiseCounts {
  std::size_t correct = 0;             // audited correct in this tool's output
  std::size_t incorrect = 0;           // audited wrong in this tool's output
  std::size_t opponent_correct = 0;    // correct SATDs of the other tool
  std::size_t missed_of_opponent = 0;  // of those, not correctly identified here
};

EvaluationReport MetricsFromPairwise(const PairwiseCounts& counts);

// List form of the head-to-head audit: `audited_correct` is the set of
// SATDs judged correct (by either tool), `opponent_correct` the other tool's
// correct output.
EvaluationReport EvaluatePairwise(std::span<const TrackedSatd> predicted,
                                  std::span<const TrackedSatd> audited_correct,
                                  std::span<const TrackedSatd> opponent_correct);

}  // namespace satd

#endif  // SATD_EVALUATOR_H_
