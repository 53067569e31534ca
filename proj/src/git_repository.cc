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

#include "satd/git_repository.h"

#include <charconv>
#include <sstream>
#include <system_error>

#include "satd/errors.h"
#include "satd/text.h"

namespace satd {
namespace fs = std::filesystem;
namespace {

std::string FirstLine(const std::string& s) {
  return std::string(Trim(std::string_view(s).substr(0, s.find('\n'))));
}

bool LooksLikeGitDir(const fs::path& p) {
  std::error_code ec;
  return fs::exists(p / "HEAD", ec) && fs::is_directory(p / "objects", ec);
}

fs::path Canonical(const fs::path& p) {
  std::error_code ec;
  auto c = fs::weakly_canonical(p, ec);
  return ec ? p : c;
}

}  // namespace

ProcessResult GitRepository::Git(const std::vector<std::string>& args,
                                 const std::function<void(std::string_view)>& on_line) const {
  std::vector<std::string> argv = {"git", "-C", path_.string(), "-c", "core.quotePath=false"};
  argv.insert(argv.end(), args.begin(), args.end());
  return RunProcess(argv, on_line);
}

GitRepository GitRepository::Open(const fs::path& path) {
  std::error_code ec;
  if (!fs::is_directory(path, ec)) {
    throw NotARepository(path.string() + ": not a directory");
  }
  GitRepository repo(Canonical(path));

  auto git_dir = repo.Git({"rev-parse", "--absolute-git-dir"});
  if (git_dir.exit_code != 0) {
    if (LooksLikeGitDir(repo.path_) || fs::exists(repo.path_ / ".git", ec)) {
      throw BareOrCorrupt(path.string() + ": " + FirstLine(git_dir.err));
    }
    throw NotARepository(path.string() + ": no git repository found");
  }
  const fs::path resolved_git_dir = Canonical(FirstLine(git_dir.out));
  // Refuse to silently pick up an enclosing repository.
  if (resolved_git_dir != repo.path_) {
    auto top = repo.Git({"rev-parse", "--show-toplevel"});
    if (top.exit_code != 0 || Canonical(FirstLine(top.out)) != repo.path_) {
      throw NotARepository(path.string() + ": not the top level of a git work tree");
    }
  }

  if (auto head = repo.ResolveCommit("HEAD")) {
    auto probe = repo.Git({"cat-file", "-e", *head + "^{tree}"});
    if (probe.exit_code != 0) {
      throw BareOrCorrupt(path.string() + ": object store unreadable: " + FirstLine(probe.err));
    }
  }
  return repo;
}

std::optional<std::string> GitRepository::ResolveCommit(const std::string& rev) const {
  auto r = Git({"rev-parse", "--verify", "--quiet", "--end-of-options", rev + "^{commit}"});
  if (r.exit_code != 0) return std::nullopt;
  return FirstLine(r.out);
}

bool GitRepository::HasCommits() const {
  auto r = Git({"rev-list", "-n", "1", "--all"});
  return r.exit_code == 0 && !Trim(r.out).empty();
}

std::optional<std::string> GitRepository::SelectBranch(
    const std::optional<std::string>& requested) const {
  auto resolves = [&](const std::string& name) {
    return ResolveCommit("refs/heads/" + name).has_value() || ResolveCommit(name).has_value();
  };
  if (!HasCommits()) return std::nullopt;
  if (requested) {
    if (!resolves(*requested)) throw UnknownBranch("branch '" + *requested + "' does not resolve");
    return requested;
  }
  for (const char* name : {"master", "main"}) {
    if (resolves(name)) return std::string(name);
  }
  throw UnknownBranch("neither 'master' nor 'main' exists; pass --branch");
}

std::vector<CommitRecord> GitRepository::MainlineWalk(const std::string& branch) const {
  auto tip = ResolveCommit("refs/heads/" + branch);
  if (!tip) tip = ResolveCommit(branch);
  if (!tip) throw UnknownBranch("branch '" + branch + "' does not resolve");

  std::vector<CommitRecord> commits;
  auto r = Git({"log", "--first-parent", "--reverse", "--no-show-signature",
                "--format=%H%x09%P%x09%at", *tip},
               [&](std::string_view line) {
                 if (line.empty()) return;
                 CommitRecord c;
                 auto tab1 = line.find('\t');
                 auto tab2 = line.find('\t', tab1 + 1);
                 c.sha = std::string(line.substr(0, tab1));
                 std::istringstream parents{std::string(line.substr(tab1 + 1, tab2 - tab1 - 1))};
                 for (std::string p; parents >> p;) c.parents.push_back(p);
                 auto ts = line.substr(tab2 + 1);
                 std::from_chars(ts.data(), ts.data() + ts.size(), c.timestamp);
                 c.sequence_index = commits.size();
                 commits.push_back(std::move(c));
               });
  if (r.exit_code != 0) throw DiffFailure("git log failed: " + FirstLine(r.err));
  return commits;
}

std::size_t GitRepository::CountAllCommits() const {
  if (!HasCommits()) return 0;
  auto r = Git({"rev-list", "--all", "--count"});
  if (r.exit_code != 0) throw BareOrCorrupt("git rev-list failed: " + FirstLine(r.err));
  return std::stoull(FirstLine(r.out));
}

std::vector<std::string> GitRepository::ListTree(const std::string& commit_sha) const {
  auto r = Git({"ls-tree", "-r", "-z", commit_sha});
  if (r.exit_code != 0) throw DiffFailure("git ls-tree " + commit_sha + ": " + FirstLine(r.err));
  std::vector<std::string> paths;
  std::string_view rest = r.out;
  while (!rest.empty()) {
    auto nul = rest.find('\0');
    auto entry = rest.substr(0, nul);
    auto tab = entry.find('\t');
    // Submodule entries ("160000 commit ...") are not part of the history model.
    if (tab != std::string_view::npos && entry.substr(0, tab).find(" blob ") != std::string_view::npos) {
      paths.push_back(SanitizeUtf8(entry.substr(tab + 1)));
    }
    if (nul == std::string_view::npos) break;
    rest.remove_prefix(nul + 1);
  }
  return paths;
}

std::string GitRepository::ReadBlob(const std::string& commit_sha, const std::string& path) const {
  auto r = Git({"cat-file", "blob", commit_sha + ":" + path});
  if (r.exit_code != 0) {
    throw DiffFailure("git cat-file " + commit_sha + ":" + path + ": " + FirstLine(r.err));
  }
  return r.out;
}

}  // namespace satd
