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


#include "satd/pipeline.h"

#include <algorithm>
#include <memory>

namespace satd {

PathResolver MakePathResolver(const RepositoryHistory& history) {
  auto index = std::make_shared<const CommitIndex>(history.commits);
  return [&history, index](const std::string& file_id, std::optional<std::size_t> seq) {
    auto it = history.files.find(file_id);
    if (it == history.files.end()) return file_id;
    const FileIdentity& id = it->second.identity;
    return seq ? PathAt(id, *index, *seq) : id.current_path;
  };
}

PipelineResult RunPipeline(const RepositoryHistory& history, const Detector& detector,
                           const PipelineOptions& options) {
  PipelineResult result;
  result.raw = FlattenRaw(TrackRepository(history, detector, options.track, options.jobs));
  Step3Result step3 = RunStep3(result.raw, options.match, MakePathResolver(history), options.jobs);
  result.pairs = std::move(step3.pairs);
  result.satds = std::move(step3.satds);
  result.summary.commits = std::max(history.total_commits, history.commits.size());
  result.summary.master_branch_commits = history.commits.size();
  result.summary.raw_satds = result.raw.size();
  result.summary.final_satds = result.satds.size();
  result.summary.updates = result.pairs.size();
  return result;
}

}  // namespace satd
