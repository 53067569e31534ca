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

#include "satd/tracker.h"

#include <unordered_map>

#include "satd/errors.h"
#include "satd/log.h"
#include "satd/parallel.h"
#include "satd/text.h"

namespace satd {
namespace {

std::string LineOrEmpty(const std::vector<std::string>& image, int line) {
  if (line < 1 || static_cast<std::size_t>(line) > image.size()) return {};
  return image[static_cast<std::size_t>(line) - 1];
}

}  // namespace

FileTracker::FileTracker(const Detector& detector, std::string file_id, TrackOptions options)
    : detector_(&detector), file_id_(std::move(file_id)), options_(options) {}

void FileTracker::MarkDeleted(RawSatd& satd, const FileAction& action, std::size_t seq,
                              const std::string& hunk_id, const std::string& text) {
  satd.deleted_in_commit = action.commit_sha;
  satd.deleted_in_hunk = hunk_id;
  satd.deleted_seq = seq;
  satd.deleted_text = std::string(Trim(text));
  satd.deleted_prev_line = LineOrEmpty(content_, satd.current_line - 1);
  satd.deleted_next_line = LineOrEmpty(content_, satd.current_line + 1);
}

void FileTracker::Create(const FileAction& action, std::size_t seq, const std::string& hunk_id,
                         int line, const std::string& text, const std::vector<std::string>& post) {
  RawSatd satd;
  satd.raw_id = file_id_ + ":" + std::to_string(next_serial_++);
  satd.file_id = file_id_;
  satd.created_in_commit = action.commit_sha;
  satd.created_in_hunk = hunk_id;
  satd.created_in_line = line;
  satd.current_line = line;
  satd.creation_text = std::string(Trim(text));
  satd.created_prev_line = LineOrEmpty(post, line - 1);
  satd.created_next_line = LineOrEmpty(post, line + 1);
  satd.created_seq = seq;
  satds_.push_back(std::move(satd));
}

void FileTracker::Apply(const FileAction& action, std::size_t seq, const CopySourceFn& copy_source) {
  if (action.mode == ActionMode::kUnmerged) {
    spdlog::warn("skipping unmerged action {} on {}", action.action_id, file_id_);
    return;
  }
  const bool lenient = options_.policy == ReplayPolicy::kLenient;

  if (action.mode == ActionMode::kAdded) {
    content_.clear();
  } else if (action.mode == ActionMode::kCopied) {
    if (!copy_source || !action.old_file_id) {
      throw Error("copy-edit " + action.action_id + " has no resolvable source");
    }
    content_ = copy_source(*action.old_file_id, seq);
  }

  // Phase 1: deletions, matched by pre-image line number.
  const std::size_t existing = satds_.size();
  std::unordered_map<int, std::size_t> alive_at;
  for (std::size_t i = 0; i < existing; ++i) {
    if (satds_[i].alive()) alive_at.emplace(satds_[i].current_line, i);
  }
  for (const Hunk& hunk : action.hunks) {
    for (const auto& line : hunk.deleted) {
      auto it = alive_at.find(line.number);
      if (it != alive_at.end()) {
        MarkDeleted(satds_[it->second], action, seq, hunk.hunk_id, line.text);
        alive_at.erase(it);
      } else if (detector_->IsSatd(line.text)) {
        std::string message = "file " + file_id_ + ", commit " + action.commit_sha +
                              ": tagged line " + std::to_string(line.number) +
                              " deleted but no alive SATD is tracked there";
        if (!lenient) throw DanglingDeletion(message);
        spdlog::warn("{}", message);
      }
    }
  }
  if (action.mode == ActionMode::kDeleted) {
    const std::string hunk_id = action.hunks.empty() ? std::string() : action.hunks.front().hunk_id;
    for (auto& [line, index] : alive_at) {
      MarkDeleted(satds_[index], action, seq, hunk_id, LineOrEmpty(content_, line));
    }
    content_.clear();
    return;
  }

  std::vector<std::string> post;
  try {
    post = ApplyHunks(content_, action.hunks, options_.policy);
  } catch (const ReplayMismatch& e) {
    throw ReplayMismatch("file " + file_id_ + ", commit " + action.commit_sha + ": " + e.what());
  }

  // Phase 2: creations, in post-image coordinates.
  if (action.mode == ActionMode::kCopied) {
    std::unordered_map<int, const std::string*> added_by;
    for (const Hunk& hunk : action.hunks) {
      for (const auto& line : hunk.added) added_by.emplace(line.number, &hunk.hunk_id);
    }
    for (std::size_t i = 0; i < post.size(); ++i) {
      const int line = static_cast<int>(i) + 1;
      if (!detector_->IsSatd(post[i])) continue;
      auto it = added_by.find(line);
      Create(action, seq, it == added_by.end() ? std::string() : *it->second, line, post[i], post);
    }
  } else {
    for (const Hunk& hunk : action.hunks) {
      for (const auto& line : hunk.added) {
        if (detector_->IsSatd(line.text)) {
          Create(action, seq, hunk.hunk_id, line.number, line.text, post);
        }
      }
    }
  }

  // Phase 3: shift survivors by every hunk that ends at or above them.
  for (auto& [line, index] : alive_at) {
    int delta = 0;
    for (const Hunk& hunk : action.hunks) {
      if (hunk.OldEnd() > line) break;
      delta += hunk.Delta();
    }
    satds_[index].current_line = line + delta;
  }
  content_ = std::move(post);
}

std::vector<RawSatd> TrackFile(const FileHistory& file, const Detector& detector,
                               const CommitIndex& commits, TrackOptions options,
                               const CopySourceFn& copy_source) {
  FileTracker tracker(detector, file.identity.file_id, options);
  for (const auto& action : file.actions) {
    tracker.Apply(action, commits.at(action.commit_sha), copy_source);
  }
  return tracker.TakeSatds();
}

std::map<std::string, std::vector<RawSatd>> TrackRepository(const RepositoryHistory& history,
                                                            const Detector& detector,
                                                            TrackOptions options, unsigned jobs) {
  const CommitIndex commits(history.commits);
  std::vector<const FileHistory*> files;
  files.reserve(history.files.size());
  for (const auto& [id, file] : history.files) files.push_back(&file);

  CopySourceFn copy_source;
  copy_source = [&](const std::string& source_id, std::size_t seq) {
    auto it = history.files.find(source_id);
    if (it == history.files.end()) throw Error("copy source " + source_id + " is unknown");
    const auto& actions = it->second.actions;
    std::size_t end = 0;
    while (end < actions.size() && commits.at(actions[end].commit_sha) < seq) ++end;
    std::vector<std::string> initial;
    if (end > 0 && actions.front().mode == ActionMode::kCopied && actions.front().old_file_id) {
      initial = copy_source(*actions.front().old_file_id, commits.at(actions.front().commit_sha));
    }
    return ReplayActions(std::span(actions).first(end), std::move(initial), options.policy);
  };

  std::vector<std::vector<RawSatd>> results(files.size());
  ParallelFor(files.size(), jobs, [&](std::size_t i) {
    results[i] = TrackFile(*files[i], detector, commits, options, copy_source);
  });

  std::map<std::string, std::vector<RawSatd>> out;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!results[i].empty()) out.emplace(files[i]->identity.file_id, std::move(results[i]));
  }
  return out;
}

}  // namespace satd
