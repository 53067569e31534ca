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


#ifndef SATD_PIPELINE_H_
#define SATD_PIPELINE_H_

// End-to-end run: file histories -> raw SATDs -> tracked SATDs.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "satd/detector.h"
#include "satd/history.h"
#include "satd/matcher.h"
#include "satd/tracker.h"

namespace satd {

struct PipelineOptions {
  MatchConfig match;
  TrackOptions track;
  unsigned jobs = 1;
};

// Row names follow the usual mining summary table.
struct RunSummary {
  std::size_t commits = 0;
  std::size_t master_branch_commits = 0;
  std::size_t raw_satds = 0;
  std::size_t final_satds = 0;
  std::size_t updates = 0;
};

struct PipelineResult {
  std::vector<RawSatd> raw;
  std::vector<MatchPair> pairs;
  std::vector<TrackedSatd> satds;
  RunSummary summary;
};

// Resolves a file id to the path it had at a mainline position (the file's
// current path when the position is unset).
PathResolver MakePathResolver(const RepositoryHistory& history);

PipelineResult RunPipeline(const RepositoryHistory& history, const Detector& detector,
                           const PipelineOptions& options = {});

}  // namespace satd

#endif  // SATD_PIPELINE_H_
