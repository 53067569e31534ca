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

#include "satd/ingest.h"

#include <charconv>
#include <cstdio>
#include <unordered_map>

#include "satd/errors.h"
#include "satd/text.h"

namespace satd {
namespace {

constexpr std::string_view kCommitMarker = "\x01satd-commit ";

bool StartsWith(std::string_view s, std::string_view prefix) { return s.starts_with(prefix); }

// Parses "<start>[,<count>]"; a missing count means 1.
bool ParseRange(std::string_view s, int& start, int& count) {
  auto comma = s.find(',');
  auto head = s.substr(0, comma);
  if (std::from_chars(head.data(), head.data() + head.size(), start).ec != std::errc{}) return false;
  count = 1;
  if (comma != std::string_view::npos) {
    auto tail = s.substr(comma + 1);
    if (std::from_chars(tail.data(), tail.data() + tail.size(), count).ec != std::errc{}) return false;
  }
  return true;
}

// Reads one possibly quoted path token from the front of `s`.
std::string TakePathToken(std::string_view& s) {
  if (!s.empty() && s.front() == '"') {
    std::size_t i = 1;
    for (; i < s.size() && s[i] != '"'; ++i) {
      if (s[i] == '\\') ++i;
    }
    std::string token = UnquoteGitPath(s.substr(0, i + 1));
    s.remove_prefix(std::min(s.size(), i + 1));
    if (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    return token;
  }
  std::string token(s);
  s = {};
  return token;
}

std::string StripPrefix(std::string path, std::string_view prefix) {
  if (StartsWith(path, prefix)) path.erase(0, prefix.size());
  return path;
}

// Path from a "--- a/x" / "+++ b/x" line; empty for /dev/null.
std::string MarkerPath(std::string_view rest, std::string_view prefix) {
  if (rest.ends_with('\t')) rest.remove_suffix(1);
  std::string path = rest.starts_with('"') ? UnquoteGitPath(rest) : std::string(rest);
  if (path == "/dev/null") return {};
  return StripPrefix(std::move(path), prefix);
}

}  // namespace

std::string UnquoteGitPath(std::string_view s) {
  if (s.size() < 2 || s.front() != '"' || s.back() != '"') return std::string(s);
  std::string out;
  s = s.substr(1, s.size() - 2);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\' || i + 1 == s.size()) {
      out.push_back(s[i]);
      continue;
    }
    char c = s[++i];
    switch (c) {
      case 'a': out.push_back('\a'); break;
      case 'b': out.push_back('\b'); break;
      case 'f': out.push_back('\f'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      case 't': out.push_back('\t'); break;
      case 'v': out.push_back('\v'); break;
      case '0': case '1': case '2': case '3': {
        int value = 0;
        std::size_t k = 0;
        for (; k < 3 && i + k < s.size() && s[i + k] >= '0' && s[i + k] <= '7'; ++k) {
          value = value * 8 + (s[i + k] - '0');
        }
        out.push_back(static_cast<char>(value));
        i += k - 1;
        break;
      }
      default: out.push_back(c); break;
    }
  }
  return SanitizeUtf8(out);
}

FilePatch& PatchStreamParser::CurrentFile() {
  if (!file_) throw DiffFailure("patch line outside of a file section");
  return *file_;
}

void PatchStreamParser::StartFile(std::string_view header) {
  FinishFile();
  if (commits_.empty()) throw DiffFailure("file patch before any commit marker");
  file_.emplace();
  std::string_view rest = header;
  if (rest.starts_with('"')) {
    file_->old_path = StripPrefix(TakePathToken(rest), "a/");
    file_->new_path = StripPrefix(TakePathToken(rest), "b/");
    return;
  }
  // Unquoted "a/<p> b/<q>": symmetric when p == q, which covers everything
  // but renames and copies, whose paths come from later header lines.
  if (rest.size() >= 5 && (rest.size() - 5) % 2 == 0) {
    const std::size_t n = (rest.size() - 5) / 2;
    if (rest.substr(0, 2) == "a/" && rest.substr(2 + n, 3) == " b/" &&
        rest.substr(2, n) == rest.substr(5 + n)) {
      file_->old_path = file_->new_path = SanitizeUtf8(rest.substr(2, n));
      return;
    }
  }
  auto split = rest.find(" b/");
  file_->old_path = SanitizeUtf8(StripPrefix(std::string(rest.substr(0, split)), "a/"));
  if (split != std::string_view::npos) {
    file_->new_path = SanitizeUtf8(rest.substr(split + 3));
  } else if (rest.find(" \"b/") != std::string_view::npos) {
    auto q = rest.find(" \"b/");
    file_->old_path = SanitizeUtf8(StripPrefix(std::string(rest.substr(0, q)), "a/"));
    file_->new_path = StripPrefix(UnquoteGitPath(rest.substr(q + 1)), "b/");
  }
}

void PatchStreamParser::FinishFile() {
  if (state_ == State::kHunk) throw DiffFailure("truncated hunk in patch stream");
  if (!file_) return;
  if (!file_->submodule) commits_.back().files.push_back(std::move(*file_));
  file_.reset();
}

void PatchStreamParser::Feed(std::string_view line) {
  if (state_ == State::kHunk) {
    FilePatch& f = CurrentFile();
    Hunk& h = f.hunks.back();
    if (!line.empty() && line.front() == '\\') return;  // "\ No newline at end of file"
    if (!line.empty() && line.front() == '-' && pending_old_ > 0) {
      h.deleted.push_back({h.old_start + static_cast<int>(h.deleted.size()),
                           SanitizeUtf8(line.substr(1))});
      --pending_old_;
    } else if (!line.empty() && line.front() == '+' && pending_new_ > 0) {
      h.added.push_back({h.new_start + static_cast<int>(h.added.size()),
                         SanitizeUtf8(line.substr(1))});
      --pending_new_;
    } else {
      throw DiffFailure("unexpected line inside hunk: " + SanitizeUtf8(line.substr(0, 80)));
    }
    if (pending_old_ == 0 && pending_new_ == 0) state_ = State::kHeader;
    return;
  }

  if (StartsWith(line, marker_)) {
    FinishFile();
    commits_.push_back({std::string(Trim(line.substr(marker_.size()))), {}});
    return;
  }
  if (StartsWith(line, "diff --git ")) {
    StartFile(line.substr(11));
    return;
  }
  if (line.empty() || !file_) return;

  FilePatch& f = CurrentFile();
  auto rest_after = [&](std::string_view prefix) { return line.substr(prefix.size()); };
  if (StartsWith(line, "@@ ")) {
    // @@ -a[,b] +c[,d] @@ [section heading]
    auto body = line.substr(3);
    auto end = body.find(" @@");
    if (end == std::string_view::npos) throw DiffFailure("malformed hunk header");
    body = body.substr(0, end);
    auto space = body.find(' ');
    Hunk h;
    if (space == std::string_view::npos || body.front() != '-' || body[space + 1] != '+' ||
        !ParseRange(body.substr(1, space - 1), h.old_start, h.old_lines) ||
        !ParseRange(body.substr(space + 2), h.new_start, h.new_lines)) {
      throw DiffFailure("malformed hunk header: " + std::string(line));
    }
    pending_old_ = h.old_lines;
    pending_new_ = h.new_lines;
    f.hunks.push_back(std::move(h));
    if (pending_old_ > 0 || pending_new_ > 0) state_ = State::kHunk;
  } else if (StartsWith(line, "new file mode ")) {
    f.mode = ActionMode::kAdded;
    if (rest_after("new file mode ") == "160000") f.submodule = true;
  } else if (StartsWith(line, "deleted file mode ")) {
    f.mode = ActionMode::kDeleted;
    if (rest_after("deleted file mode ") == "160000") f.submodule = true;
  } else if (StartsWith(line, "old mode ") || StartsWith(line, "new mode ")) {
    if (line.ends_with("160000")) f.submodule = true;
  } else if (StartsWith(line, "index ")) {
    if (line.ends_with(" 160000")) f.submodule = true;
  } else if (StartsWith(line, "rename from ")) {
    f.mode = ActionMode::kRenamed;
    f.old_path = UnquoteGitPath(rest_after("rename from "));
  } else if (StartsWith(line, "rename to ")) {
    f.mode = ActionMode::kRenamed;
    f.new_path = UnquoteGitPath(rest_after("rename to "));
  } else if (StartsWith(line, "copy from ")) {
    f.mode = ActionMode::kCopied;
    f.old_path = UnquoteGitPath(rest_after("copy from "));
  } else if (StartsWith(line, "copy to ")) {
    f.mode = ActionMode::kCopied;
    f.new_path = UnquoteGitPath(rest_after("copy to "));
  } else if (StartsWith(line, "--- ")) {
    if (auto p = MarkerPath(rest_after("--- "), "a/"); !p.empty()) f.old_path = p;
  } else if (StartsWith(line, "+++ ")) {
    if (auto p = MarkerPath(rest_after("+++ "), "b/"); !p.empty()) f.new_path = p;
  } else if (StartsWith(line, "Binary files ") || StartsWith(line, "GIT binary patch")) {
    f.binary = true;
  }
}

std::vector<CommitPatch> PatchStreamParser::Finish() {
  FinishFile();
  return std::move(commits_);
}

std::vector<FilePatch> ParseUnifiedDiff(std::string_view text) {
  PatchStreamParser parser("\x01");
  parser.Feed("\x01-");
  for (const auto& line : SplitLines(text)) parser.Feed(line);
  auto commits = parser.Finish();
  return std::move(commits.front().files);
}

std::map<std::string, FileHistory> BuildFileHistories(const std::vector<CommitRecord>& commits,
                                                      std::vector<CommitPatch> patches) {
  if (patches.size() != commits.size()) {
    throw DiffFailure("patch stream has " + std::to_string(patches.size()) + " commits, walk has " +
                      std::to_string(commits.size()));
  }
  std::map<std::string, FileHistory> files;
  std::unordered_map<std::string, std::string> live;  // path -> file_id
  std::size_t next_id = 1;
  auto mint = [&] {
    char buf[32];
    std::snprintf(buf, sizeof buf, "f%06zu", next_id++);
    return std::string(buf);
  };

  for (std::size_t i = 0; i < commits.size(); ++i) {
    const std::string& sha = commits[i].sha;
    if (patches[i].sha != sha) {
      throw DiffFailure("patch stream out of order at " + sha + " (got " + patches[i].sha + ")");
    }
    auto lookup = [&](const std::string& path) {
      auto it = live.find(path);
      if (it == live.end()) {
        throw DiffFailure("commit " + sha + " touches untracked path '" + path + "'");
      }
      return it->second;
    };

    // Resolve all sources against the pre-commit state first, so that e.g. a
    // rename a -> b plus a fresh a in the same commit cannot collide.
    std::vector<std::string> ids(patches[i].files.size());
    std::vector<std::optional<std::string>> old_ids(patches[i].files.size());
    for (std::size_t k = 0; k < patches[i].files.size(); ++k) {
      const FilePatch& p = patches[i].files[k];
      switch (p.mode) {
        case ActionMode::kDeleted:
        case ActionMode::kModified:
        case ActionMode::kUnmerged:
          ids[k] = lookup(p.old_path.empty() ? p.new_path : p.old_path);
          break;
        case ActionMode::kRenamed:
          ids[k] = lookup(p.old_path);
          old_ids[k] = ids[k];
          break;
        case ActionMode::kCopied:
          old_ids[k] = lookup(p.old_path);
          break;
        case ActionMode::kAdded:
          break;
      }
    }
    for (std::size_t k = 0; k < patches[i].files.size(); ++k) {
      FilePatch& p = patches[i].files[k];
      if (p.mode == ActionMode::kDeleted || p.mode == ActionMode::kRenamed) live.erase(p.old_path);
    }
    for (std::size_t k = 0; k < patches[i].files.size(); ++k) {
      FilePatch& p = patches[i].files[k];
      if (p.mode == ActionMode::kAdded || p.mode == ActionMode::kCopied) ids[k] = mint();
      FileHistory& history = files[ids[k]];
      if (history.identity.file_id.empty()) history.identity.file_id = ids[k];
      if (p.mode == ActionMode::kAdded || p.mode == ActionMode::kCopied ||
          p.mode == ActionMode::kRenamed) {
        history.identity.current_path = p.new_path;
        history.identity.path_history.push_back({sha, p.new_path});
        live[p.new_path] = ids[k];
      }

      FileAction action;
      action.commit_sha = sha;
      action.file_id = ids[k];
      action.action_id = MakeActionId(sha, ids[k]);
      action.mode = p.mode;
      action.old_file_id = old_ids[k];
      action.hunks = std::move(p.hunks);
      for (std::size_t h = 0; h < action.hunks.size(); ++h) {
        action.hunks[h].hunk_id = action.action_id + "#" + std::to_string(h + 1);
      }
      history.actions.push_back(std::move(action));
    }
  }
  return files;
}

std::map<std::string, FileHistory> ExtractFileActions(const GitRepository& repo,
                                                      const std::vector<CommitRecord>& commits,
                                                      const IngestOptions& options) {
  if (commits.empty()) return {};
  PatchStreamParser parser{std::string(kCommitMarker)};
  const std::string similarity = "--find-renames=" + std::to_string(options.rename_similarity) + "%";
  auto r = repo.Git({"-c", "diff.renameLimit=32767",
                     "log", "--first-parent", "--reverse", "--diff-merges=first-parent", "--root",
                     "-p", "-U0", similarity, "--no-color", "--no-ext-diff", "--no-textconv",
                     "--diff-algorithm=myers", "--src-prefix=a/", "--dst-prefix=b/",
                     "--no-show-signature", "--format=%x01satd-commit %H", commits.back().sha},
                    [&](std::string_view line) { parser.Feed(line); });
  if (r.exit_code != 0) {
    throw DiffFailure("git log -p failed: " + std::string(Trim(r.err)));
  }
  return BuildFileHistories(commits, parser.Finish());
}

RepositoryHistory IngestRepository(const GitRepository& repo, const IngestOptions& options) {
  RepositoryHistory history;
  auto branch = repo.SelectBranch(options.branch);
  if (!branch) return history;
  history.commits = repo.MainlineWalk(*branch);
  history.files = ExtractFileActions(repo, history.commits, options);
  history.total_commits = repo.CountAllCommits();
  return history;
}

}  // namespace satd
