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

#ifndef SATD_GIT_REPOSITORY_H_
#define SATD_GIT_REPOSITORY_H_

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satd/history.h"
#include "satd/process.h"

namespace satd {

// Read-only handle on a local git repository, backed by the `git`
// executable. All member functions are const and spawn independent child
// processes, so a handle may be shared between threads.
class GitRepository {
 public:
  // Throws NotARepository when `path` is not the top of a work tree (or a
  // bare repository), BareOrCorrupt when the object store cannot be read.
  static GitRepository Open(const std::filesystem::path& path);

  const std::filesystem::path& path() const { return path_; }

  bool HasCommits() const;
  std::optional<std::string> ResolveCommit(const std::string& rev) const;

  // `requested` resolves exactly or throws UnknownBranch. With no request
  // "master" is tried, then "main". Returns nullopt for a repository that
  // has no commits at all.
  std::optional<std::string> SelectBranch(const std::optional<std::string>& requested) const;

  // First-parent history ending at `branch`, oldest first.
  std::vector<CommitRecord> MainlineWalk(const std::string& branch) const;

  std::size_t CountAllCommits() const;
  std::vector<std::string> ListTree(const std::string& commit_sha) const;
  std::string ReadBlob(const std::string& commit_sha, const std::string& path) const;

  // Runs `git <args>` against this repository.
  ProcessResult Git(const std::vector<std::string>& args,
                    const std::function<void(std::string_view)>& on_line = {}) const;

 private:
  explicit GitRepository(std::filesystem::path path) : path_(std::move(path)) {}

  std::filesystem::path path_;
};

}  // namespace satd

#endif  // SATD_GIT_REPOSITORY_H_
