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

#include "satd/evaluator.h"

#include <map>
#include <set>

#include "satd/errors.h"

namespace satd {
namespace {

double Ratio(std::size_t hits, std::size_t misses, std::size_t opposing) {
  if (hits + misses == 0) return opposing == 0 ? 1.0 : 0.0;
  return static_cast<double>(hits) / static_cast<double>(hits + misses);
}

double F1(double p, double r) { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

std::set<SatdKey> UniqueKeys(std::span<const TrackedSatd> records, const char* what) {
  std::set<SatdKey> keys;
  for (const auto& r : records) {
    if (!keys.insert(KeyOf(r)).second) {
      throw DuplicateGoldKey(std::string(what) + " contains two records for the SATD created in " +
                             r.created_in_commit + " at " + r.created_in_file + ":" +
                             std::to_string(r.created_in_line));
    }
  }
  return keys;
}

}  // namespace

SatdKey KeyOf(const TrackedSatd& satd) {
  SatdKey key{satd.created_in_commit, satd.created_in_file, satd.created_in_line,
              satd.deleted_in_commit, {}};
  const std::size_t n = std::min(satd.updated_in_commits.size(), satd.updated_in_lines.size());
  for (std::size_t i = 0; i < n; ++i) {
    key.updates.emplace_back(satd.updated_in_commits[i], satd.updated_in_lines[i].first,
                             satd.updated_in_lines[i].second);
  }
  return key;
}

EvaluationReport MetricsFromCounts(std::size_t tp, std::size_t fp, std::size_t fn) {
  EvaluationReport r;
  r.tp = tp;
  r.fp = fp;
  r.fn = fn;
  r.precision = Ratio(tp, fp, fn);
  r.recall = Ratio(tp, fn, fp);
  r.f1 = F1(r.precision, r.recall);
  return r;
}

EvaluationReport Evaluate(std::span<const TrackedSatd> predicted, std::span<const TrackedSatd> gold) {
  std::set<SatdKey> unclaimed = UniqueKeys(gold, "gold list");
  std::size_t tp = 0;
  for (const auto& p : predicted) {
    auto it = unclaimed.find(KeyOf(p));
    if (it == unclaimed.end()) continue;
    unclaimed.erase(it);
    ++tp;
  }
  return MetricsFromCounts(tp, predicted.size() - tp, gold.size() - tp);
}

EvaluationReport MetricsFromPairwise(const PairwiseCounts& c) {
  if (c.missed_of_opponent > c.opponent_correct) {
    throw Error("cannot miss more of the opponent's SATDs than it identified");
  }
  EvaluationReport r;
  r.tp = c.correct;
  r.fp = c.incorrect;
  r.fn = c.missed_of_opponent;
  r.precision = Ratio(c.correct, c.incorrect, c.missed_of_opponent);
  r.recall = Ratio(c.opponent_correct - c.missed_of_opponent, c.missed_of_opponent, c.incorrect);
  r.f1 = F1(r.precision, r.recall);
  return r;
}

EvaluationReport EvaluatePairwise(std::span<const TrackedSatd> predicted,
                                  std::span<const TrackedSatd> audited_correct,
                                  std::span<const TrackedSatd> opponent_correct) {
  const std::set<SatdKey> correct = UniqueKeys(audited_correct, "audited list");
  std::set<SatdKey> mine;
  PairwiseCounts counts;
  for (const auto& p : predicted) {
    auto key = KeyOf(p);
    if (correct.contains(key)) {
      ++counts.correct;
      mine.insert(std::move(key));
    } else {
      ++counts.incorrect;
    }
  }
  for (const auto& key : UniqueKeys(opponent_correct, "opponent list")) {
    ++counts.opponent_correct;
    if (!mine.contains(key)) ++counts.missed_of_opponent;
  }
  return MetricsFromPairwise(counts);
}

}  // namespace satd
