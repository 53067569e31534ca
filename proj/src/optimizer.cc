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

#include "satd/optimizer.h"

#include <map>
#include <unordered_map>

#include "satd/errors.h"
#include "satd/parallel.h"

namespace satd {
namespace {

// Cases of one (commit, file) group with the union of their candidates.
struct CaseGroup {
  std::vector<std::size_t> case_indices;
  std::vector<MatchCandidate> deleted;
  std::vector<MatchCandidate> created;
};

std::vector<CaseGroup> GroupCases(std::span<const LabeledCase> cases) {
  std::map<std::pair<std::string, std::string>, std::size_t> slot;
  std::vector<CaseGroup> groups;
  std::vector<std::unordered_map<std::string, bool>> seen;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    auto [it, inserted] = slot.emplace(std::pair{c.group_commit, c.group_file}, groups.size());
    if (inserted) {
      groups.emplace_back();
      seen.emplace_back();
    }
    CaseGroup& g = groups[it->second];
    g.case_indices.push_back(i);
    g.deleted.push_back(c.deleted);
    for (const auto& cand : c.candidates) {
      if (seen[it->second].emplace(cand.raw_id, true).second) g.created.push_back(cand);
    }
  }
  return groups;
}

std::size_t CountCorrect(std::span<const LabeledCase> cases, const CaseGroup& group,
                         const std::vector<std::pair<std::size_t, std::size_t>>& selected) {
  std::vector<const std::string*> predicted(group.deleted.size(), nullptr);
  for (auto [r, c] : selected) predicted[r] = &group.created[c].raw_id;
  std::size_t correct = 0;
  for (std::size_t k = 0; k < group.case_indices.size(); ++k) {
    const auto& gold = cases[group.case_indices[k]].gold;
    const bool ok = gold ? (predicted[k] && *predicted[k] == *gold) : predicted[k] == nullptr;
    correct += ok ? 1 : 0;
  }
  return correct;
}

// Per-feature factor matrices, computed once per group for the whole grid.
struct FactorMatrices {
  ScoreMatrix description, prev, next, hunk;
};

FactorMatrices Factors(const CaseGroup& g) {
  auto r = g.deleted.size(), c = g.created.size();
  FactorMatrices f{ScoreMatrix(r, c), ScoreMatrix(r, c), ScoreMatrix(r, c), ScoreMatrix(r, c)};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      const auto& d = g.deleted[i].features;
      const auto& k = g.created[j].features;
      f.description.at(i, j) = Jaccard(d.description, k.description);
      f.prev.at(i, j) = Jaccard(d.previous_line, k.previous_line);
      f.next.at(i, j) = Jaccard(d.next_line, k.next_line);
      f.hunk.at(i, j) = !d.hunk_id.empty() && d.hunk_id == k.hunk_id ? 1.0 : 0.0;
    }
  }
  return f;
}

}  // namespace

MatchConfig GridPoint::ToConfig() const {
  return {weights[0] / 10.0, weights[1] / 10.0, weights[2] / 10.0, weights[3] / 10.0,
          threshold / 10.0};
}

std::vector<GridPoint> EnumerateGrid() {
  std::vector<GridPoint> grid;
  for (int d = 0; d <= 10; ++d) {
    for (int p = 0; p <= 10 - d; ++p) {
      for (int n = 0; n <= 10 - d - p; ++n) {
        for (int t = 0; t <= 10; ++t) grid.push_back({{d, p, n, 10 - d - p - n}, t});
      }
    }
  }
  return grid;
}

void ValidateCases(std::span<const LabeledCase> cases) {
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    if (c.candidates.empty()) {
      throw Error("label case " + std::to_string(i) + " (" + c.deleted.raw_id + ") has no candidates");
    }
    if (c.gold) {
      bool found = false;
      for (const auto& cand : c.candidates) found = found || cand.raw_id == *c.gold;
      if (!found) {
        throw Error("label case " + std::to_string(i) + ": gold " + *c.gold +
                    " is not one of its candidates");
      }
    }
  }
}

double EvaluateConfig(std::span<const LabeledCase> cases, const MatchConfig& cfg) {
  if (cases.empty()) throw EmptyLabelSet("no labeled cases");
  std::size_t correct = 0;
  for (const CaseGroup& g : GroupCases(cases)) {
    std::vector<MatchFeatures> df, cf;
    for (const auto& d : g.deleted) df.push_back(d.features);
    for (const auto& c : g.created) cf.push_back(c.features);
    correct += CountCorrect(cases, g, GreedySelect(BuildScoreMatrix(df, cf, cfg), cfg.threshold));
  }
  return static_cast<double>(correct) / static_cast<double>(cases.size());
}

GridSearchResult GridSearch(std::span<const LabeledCase> cases, unsigned jobs) {
  if (cases.empty()) throw EmptyLabelSet("no labeled cases");
  ValidateCases(cases);
  const auto groups = GroupCases(cases);
  std::vector<FactorMatrices> factors;
  factors.reserve(groups.size());
  for (const auto& g : groups) factors.push_back(Factors(g));

  const auto grid = EnumerateGrid();
  std::vector<std::size_t> correct(grid.size());
  ParallelFor(grid.size(), jobs, [&](std::size_t i) {
    const MatchConfig cfg = grid[i].ToConfig();
    std::size_t total = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const auto& f = factors[g];
      ScoreMatrix m(f.description.rows(), f.description.cols());
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
          // Same operation order as ScorePair, so scores are bit-identical.
          m.at(r, c) = cfg.description_weight * f.description.at(r, c) +
                       cfg.prev_line_weight * f.prev.at(r, c) +
                       cfg.next_line_weight * f.next.at(r, c) + cfg.hunk_weight * f.hunk.at(r, c);
        }
      }
      total += CountCorrect(cases, groups[g], GreedySelect(m, cfg.threshold));
    }
    correct[i] = total;
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (correct[i] != correct[best]) {
      if (correct[i] > correct[best]) best = i;
      continue;
    }
    if (grid[i].threshold != grid[best].threshold) {
      if (grid[i].threshold > grid[best].threshold) best = i;
      continue;
    }
    if (grid[i].weights < grid[best].weights) best = i;
  }
  GridSearchResult result;
  result.best = grid[best];
  result.config = grid[best].ToConfig();
  result.correct = correct[best];
  result.accuracy = static_cast<double>(correct[best]) / static_cast<double>(cases.size());
  result.evaluations = grid.size();
  return result;
}

std::vector<LabeledCase> CandidateCases(std::span<const RawSatd> raw) {
  std::vector<LabeledCase> cases;
  for (const CandidateGroup& g : CollectCandidateGroups(raw)) {
    std::vector<MatchCandidate> candidates;
    for (const RawSatd* c : g.created) candidates.push_back({c->raw_id, CreationFeatures(*c)});
    for (const RawSatd* d : g.deleted) {
      cases.push_back({g.commit_sha, g.file_id, {d->raw_id, DeletionFeatures(*d)}, candidates, {}});
    }
  }
  return cases;
}

}  // namespace satd
