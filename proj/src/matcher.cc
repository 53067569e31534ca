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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "satd/errors.h"
#include "satd/parallel.h"
#include "satd/text.h"

namespace satd {

void MatchConfig::Validate() const {
  for (double v : {description_weight, prev_line_weight, next_line_weight, hunk_weight, threshold}) {
    if (!(v >= 0.0 && v <= 1.0)) throw Error("match weights and threshold must lie in [0, 1]");
  }
  const double sum = description_weight + prev_line_weight + next_line_weight + hunk_weight;
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error("match weights must sum to 1.0 (got " + std::to_string(sum) + ")");
  }
}

std::set<std::string> Tokenize(std::string_view text) {
  std::set<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && !IsWordByte(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && IsWordByte(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.insert(AsciiLower(text.substr(start, i - start)));
  }
  return tokens;
}

double Jaccard(std::string_view a, std::string_view b) {
  const auto ta = Tokenize(a);
  const auto tb = Tokenize(b);
  if (ta.empty() && tb.empty()) return 1.0;
  std::size_t common = 0;
  for (const auto& t : ta) common += tb.count(t);
  const std::size_t together = ta.size() + tb.size() - common;
  return static_cast<double>(common) / static_cast<double>(together);
}

double ScorePair(const MatchFeatures& deleted, const MatchFeatures& created, const MatchConfig& cfg) {
  const bool same_hunk = !deleted.hunk_id.empty() && deleted.hunk_id == created.hunk_id;
  return cfg.description_weight * Jaccard(deleted.description, created.description) +
         cfg.prev_line_weight * Jaccard(deleted.previous_line, created.previous_line) +
         cfg.next_line_weight * Jaccard(deleted.next_line, created.next_line) +
         cfg.hunk_weight * (same_hunk ? 1.0 : 0.0);
}

ScoreMatrix BuildScoreMatrix(std::span<const MatchFeatures> deleted,
                             std::span<const MatchFeatures> created, const MatchConfig& cfg) {
  ScoreMatrix m(deleted.size(), created.size());
  for (std::size_t r = 0; r < deleted.size(); ++r) {
    for (std::size_t c = 0; c < created.size(); ++c) m.at(r, c) = ScorePair(deleted[r], created[c], cfg);
  }
  return m;
}

std::vector<std::pair<std::size_t, std::size_t>> GreedySelect(const ScoreMatrix& scores,
                                                              double threshold) {
  // Visiting cells in (score desc, row, col) order and skipping retired rows
  // and columns is the same as re-taking the maximum of the shrinking matrix.
  std::vector<std::size_t> order(scores.rows() * scores.cols());
  std::iota(order.begin(), order.end(), 0);
  const std::size_t cols = scores.cols();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double sa = scores.at(a / cols, a % cols);
    const double sb = scores.at(b / cols, b % cols);
    if (sa != sb) return sa > sb;
    return a < b;
  });

  std::vector<bool> row_used(scores.rows()), col_used(scores.cols());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t cell : order) {
    const std::size_t r = cell / cols, c = cell % cols;
    if (row_used[r] || col_used[c]) continue;
    if (scores.at(r, c) < threshold - kScoreTolerance) break;
    row_used[r] = col_used[c] = true;
    pairs.emplace_back(r, c);
  }
  return pairs;
}

std::vector<MatchPair> GreedyMatch(std::span<const MatchCandidate> deleted,
                                   std::span<const MatchCandidate> created, const MatchConfig& cfg) {
  std::vector<MatchFeatures> df, cf;
  for (const auto& d : deleted) df.push_back(d.features);
  for (const auto& c : created) cf.push_back(c.features);
  const ScoreMatrix scores = BuildScoreMatrix(df, cf, cfg);
  std::vector<MatchPair> out;
  for (auto [r, c] : GreedySelect(scores, cfg.threshold)) {
    out.push_back({deleted[r].raw_id, created[c].raw_id, scores.at(r, c)});
  }
  return out;
}

MatchFeatures DeletionFeatures(const RawSatd& satd) {
  return {satd.deleted_text, satd.deleted_prev_line, satd.deleted_next_line,
          satd.deleted_in_hunk.value_or("")};
}

MatchFeatures CreationFeatures(const RawSatd& satd) {
  return {satd.creation_text, satd.created_prev_line, satd.created_next_line, satd.created_in_hunk};
}

std::vector<TrackedSatd> MergeChains(std::span<const RawSatd> raw, std::span<const MatchPair> pairs,
                                     const PathResolver& paths) {
  std::unordered_map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!by_id.emplace(raw[i].raw_id, i).second) throw Error("duplicate raw id " + raw[i].raw_id);
  }
  std::vector<std::optional<std::size_t>> following(raw.size());
  std::vector<bool> is_follower(raw.size());
  for (const auto& p : pairs) {
    auto d = by_id.find(p.deleted_id);
    auto c = by_id.find(p.created_id);
    if (d == by_id.end() || c == by_id.end()) {
      throw Error("match pair references unknown raw SATD " + p.deleted_id + " -> " + p.created_id);
    }
    if (following[d->second] || is_follower[c->second]) {
      throw Error("raw SATD matched twice: " + p.deleted_id + " -> " + p.created_id);
    }
    following[d->second] = c->second;
    is_follower[c->second] = true;
  }

  std::vector<TrackedSatd> out;
  std::size_t visited = 0;
  for (std::size_t head = 0; head < raw.size(); ++head) {
    if (is_follower[head]) continue;
    const RawSatd& first = raw[head];
    TrackedSatd t;
    t.created_in_file = paths(first.file_id, first.created_seq);
    t.created_in_line = first.created_in_line;
    t.created_in_commit = first.created_in_commit;
    t.creation_text = first.creation_text;

    std::size_t tail = head;
    ++visited;
    while (following[tail]) {
      const std::size_t next = *following[tail];
      if (++visited > raw.size()) throw CyclicChain("following chain from " + first.raw_id + " loops");
      t.update_texts.push_back(raw[next].creation_text);
      t.updated_in_lines.emplace_back(raw[tail].current_line, raw[next].created_in_line);
      t.updated_in_commits.push_back(raw[next].created_in_commit);
      tail = next;
    }
    const RawSatd& last = raw[tail];
    t.deleted_in_commit = last.deleted_in_commit;
    t.last_appeared_in_line = last.current_line;
    t.last_appeared_in_file = paths(last.file_id, last.deleted_seq);
    out.push_back(std::move(t));
  }
  if (visited != raw.size()) throw CyclicChain("following pairs contain a cycle without a head");
  return out;
}

std::vector<CandidateGroup> CollectCandidateGroups(std::span<const RawSatd> raw) {
  using Key = std::pair<std::size_t, std::string>;
  std::map<Key, CandidateGroup> groups;
  for (const RawSatd& r : raw) {
    if (r.deleted_seq) {
      auto& g = groups[{*r.deleted_seq, r.file_id}];
      g.commit_sha = *r.deleted_in_commit;
      g.deleted.push_back(&r);
    }
    auto& g = groups[{r.created_seq, r.file_id}];
    g.commit_sha = r.created_in_commit;
    g.created.push_back(&r);
  }
  std::vector<CandidateGroup> out;
  for (auto& [key, g] : groups) {
    if (g.deleted.empty() || g.created.empty()) continue;
    g.sequence_index = key.first;
    g.file_id = key.second;
    out.push_back(std::move(g));
  }
  return out;
}

Step3Result RunStep3(std::span<const RawSatd> raw, const MatchConfig& cfg, const PathResolver& paths,
                     unsigned jobs) {
  cfg.Validate();
  const auto groups = CollectCandidateGroups(raw);
  std::vector<std::vector<MatchPair>> per_group(groups.size());
  ParallelFor(groups.size(), jobs, [&](std::size_t g) {
    std::vector<MatchCandidate> deleted, created;
    for (const RawSatd* r : groups[g].deleted) deleted.push_back({r->raw_id, DeletionFeatures(*r)});
    for (const RawSatd* r : groups[g].created) created.push_back({r->raw_id, CreationFeatures(*r)});
    per_group[g] = GreedyMatch(deleted, created, cfg);
  });
  Step3Result result;
  for (auto& pairs : per_group) {
    result.pairs.insert(result.pairs.end(), pairs.begin(), pairs.end());
  }
  result.satds = MergeChains(raw, result.pairs, paths);
  return result;
}

std::vector<RawSatd> FlattenRaw(const std::map<std::string, std::vector<RawSatd>>& by_file) {
  std::vector<RawSatd> out;
  for (const auto& [id, list] : by_file) out.insert(out.end(), list.begin(), list.end());
  return out;
}

}  // namespace satd
