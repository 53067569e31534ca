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


#ifndef SATD_TESTS_TEST_SUPPORT_H_
#define SATD_TESTS_TEST_SUPPORT_H_

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "satd/history.h"
#include "satd/matcher.h"
#include "satd/optimizer.h"
#include "satd/process.h"

namespace satd::testing {

class TempDir {
 public:
  TempDir() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "satd-test-XXXXXX").string();
    if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
    path_ = tmpl;
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline void WriteText(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

inline std::string JoinLines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

// A scratch repository driven through the git CLI with pinned identity and
// dates, isolated from the user's git configuration.
class ScratchRepo {
 public:
  explicit ScratchRepo(const std::filesystem::path& dir, const std::string& branch = "master")
      : dir_(dir) {
    std::filesystem::create_directories(dir_);
    Git({"init", "-q", "-b", branch});
  }

  const std::filesystem::path& dir() const { return dir_; }

  ProcessResult Git(const std::vector<std::string>& args) {
    const std::string date = "GIT_AUTHOR_DATE=" + std::to_string(1600000000 + ticks_) + " +0000";
    const std::string cdate = "GIT_COMMITTER_DATE=" + std::to_string(1600000000 + ticks_) + " +0000";
    std::vector<std::string> argv = {"env",          "GIT_CONFIG_GLOBAL=/dev/null",
                                     "GIT_CONFIG_NOSYSTEM=1", date,
                                     cdate,          "git",
                                     "-C",           dir_.string(),
                                     "-c",           "user.name=Test",
                                     "-c",           "user.email=test@example.com",
                                     "-c",           "commit.gpgsign=false"};
    argv.insert(argv.end(), args.begin(), args.end());
    auto r = RunProcess(argv);
    if (r.exit_code != 0) {
      throw std::runtime_error("git failed: " + r.err);
    }
    return r;
  }

  void Write(const std::string& path, const std::string& content) { WriteText(dir_ / path, content); }
  void Write(const std::string& path, const std::vector<std::string>& lines) {
    Write(path, JoinLines(lines));
  }

  // Stages everything and commits; returns the new sha.
  std::string Commit(const std::string& message) {
    ++ticks_;
    Git({"add", "-A"});
    Git({"commit", "-q", "--allow-empty", "-m", message});
    return Head();
  }

  std::string Head() {
    auto out = Git({"rev-parse", "HEAD"}).out;
    while (!out.empty() && (out.back() == '\n' || out.back() == '\r')) out.pop_back();
    return out;
  }

 private:
  std::filesystem::path dir_;
  int ticks_ = 0;
};

inline NumberedLine Line(int number, std::string text) { return {number, std::move(text)}; }

// Builds a zero-context hunk. `old_start`/`new_start` follow git's header
// convention (line before the change when the side is empty).
inline Hunk MakeHunk(int old_start, std::vector<std::string> deleted, int new_start,
                     std::vector<std::string> added, std::string id = {}) {
  Hunk h;
  h.hunk_id = std::move(id);
  h.old_start = old_start;
  h.old_lines = static_cast<int>(deleted.size());
  h.new_start = new_start;
  h.new_lines = static_cast<int>(added.size());
  for (std::size_t i = 0; i < deleted.size(); ++i) {
    h.deleted.push_back(Line(old_start + static_cast<int>(i), std::move(deleted[i])));
  }
  for (std::size_t i = 0; i < added.size(); ++i) {
    h.added.push_back(Line(new_start + static_cast<int>(i), std::move(added[i])));
  }
  return h;
}

// Zero-context hunks turning `a` into `b`, from a longest-common-subsequence
// alignment. Quadratic; meant for small generated files.
inline std::vector<Hunk> DiffLines(const std::vector<std::string>& a,
                                   const std::vector<std::string>& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }
  std::vector<Hunk> hunks;
  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && a[i] == b[j]) {
      ++i;
      ++j;
      continue;
    }
    std::vector<std::string> del, add;
    const std::size_t i0 = i, j0 = j;
    while ((i < n || j < m) && !(i < n && j < m && a[i] == b[j])) {
      if (j < m && (i == n || lcs[i][j + 1] >= lcs[i + 1][j])) {
        add.push_back(b[j++]);
      } else {
        del.push_back(a[i++]);
      }
    }
    const int old_start = del.empty() ? static_cast<int>(i0) : static_cast<int>(i0) + 1;
    const int new_start = add.empty() ? static_cast<int>(j0) : static_cast<int>(j0) + 1;
    hunks.push_back(MakeHunk(old_start, std::move(del), new_start, std::move(add)));
  }
  return hunks;
}

// File histories with uniquely salted SATD lines.
struct GeneratedHistory {
  std::vector<std::vector<std::string>> snapshots;  // file content after each commit
  bool deleted_at_end = false;
};

class HistoryGenerator {
 public:
  explicit HistoryGenerator(std::uint64_t seed) : rng_(seed) {}

  std::string CodeLine() {
    static const char* kWords[] = {"int x = 0;", "return y;", "}", "", "foo(bar);", "i++;",
                                   "if (ok) {", "// plain comment", "# note", "call();"};
    return kWords[Uniform(0, 9)];
  }

  std::string SatdLine() {
    static const char* kTags[] = {"TODO", "FIXME", "XXX", "HACK", "todo"};
    static const char* kMarkers[] = {"// ", "# ", "/* ", " * ", "-- "};
    std::string indent(static_cast<std::size_t>(Uniform(0, 3)) * 2, ' ');
    return indent + kMarkers[Uniform(0, 4)] + kTags[Uniform(0, 4)] + ": item " +
           std::to_string(salt_++);
  }

  std::string RandomLine() { return Uniform(0, 4) == 0 ? SatdLine() : CodeLine(); }

  GeneratedHistory Generate(int max_commits = 30, int max_lines = 200) {
    GeneratedHistory h;
    std::vector<std::string> file;
    const int initial = Uniform(0, std::min(60, max_lines));
    for (int k = 0; k < initial; ++k) file.push_back(RandomLine());
    h.snapshots.push_back(file);
    const int commits = Uniform(1, max_commits);
    for (int c = 1; c < commits; ++c) {
      const int ops = Uniform(1, 4);
      for (int o = 0; o < ops; ++o) Mutate(file, max_lines);
      h.snapshots.push_back(file);
    }
    h.deleted_at_end = Uniform(0, 9) == 0;
    return h;
  }

  int Uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937_64& rng() { return rng_; }

 private:
  void Mutate(std::vector<std::string>& file, int max_lines) {
    const int size = static_cast<int>(file.size());
    switch (Uniform(0, 3)) {
      case 0: {  // insert a block
        const int at = Uniform(0, size);
        const int count = std::min(Uniform(1, 8), max_lines - size);
        std::vector<std::string> block;
        for (int k = 0; k < count; ++k) block.push_back(RandomLine());
        file.insert(file.begin() + at, block.begin(), block.end());
        break;
      }
      case 1: {  // delete a block
        if (size == 0) return;
        const int at = Uniform(0, size - 1);
        const int count = std::min(Uniform(1, 6), size - at);
        file.erase(file.begin() + at, file.begin() + at + count);
        break;
      }
      case 2: {  // rewrite a block
        if (size == 0) return;
        const int at = Uniform(0, size - 1);
        const int count = std::min(Uniform(1, 4), size - at);
        for (int k = 0; k < count; ++k) file[static_cast<std::size_t>(at + k)] = RandomLine();
        break;
      }
      default: {  // rewrite a single SATD in place
        for (int tries = 0; tries < 5 && size > 0; ++tries) {
          auto& line = file[static_cast<std::size_t>(Uniform(0, size - 1))];
          if (line.find("item ") != std::string::npos) {
            line = SatdLine();
            break;
          }
        }
      }
    }
  }

  std::mt19937_64 rng_;
  long salt_ = 0;
};

// One-file repository history built from snapshots via DiffLines.
inline RepositoryHistory HistoryFromSnapshots(const GeneratedHistory& g,
                                              const std::string& file_id = "f000001",
                                              const std::string& path = "src/File.java") {
  RepositoryHistory history;
  FileHistory file;
  file.identity.file_id = file_id;
  file.identity.current_path = path;
  std::vector<std::string> prev;
  const std::size_t commits = g.snapshots.size() + (g.deleted_at_end ? 1 : 0);
  for (std::size_t c = 0; c < commits; ++c) {
    CommitRecord rec;
    rec.sha = "c" + std::to_string(1000 + c);
    if (c > 0) rec.parents.push_back(history.commits.back().sha);
    rec.timestamp = static_cast<std::int64_t>(c);
    rec.sequence_index = c;
    history.commits.push_back(rec);

    FileAction action;
    action.commit_sha = rec.sha;
    action.file_id = file_id;
    action.action_id = MakeActionId(rec.sha, file_id);
    if (c == g.snapshots.size()) {
      action.mode = ActionMode::kDeleted;
      action.hunks = DiffLines(prev, {});
      prev.clear();
    } else {
      action.mode = c == 0 ? ActionMode::kAdded : ActionMode::kModified;
      action.hunks = DiffLines(prev, g.snapshots[c]);
      prev = g.snapshots[c];
    }
    if (c == 0) file.identity.path_history.push_back({rec.sha, path});
    for (std::size_t k = 0; k < action.hunks.size(); ++k) {
      action.hunks[k].hunk_id = action.action_id + "#" + std::to_string(k + 1);
    }
    // An unchanged file produces no action.
    if (action.hunks.empty() && action.mode == ActionMode::kModified) continue;
    file.actions.push_back(std::move(action));
  }
  history.total_commits = history.commits.size();
  history.files.emplace(file_id, std::move(file));
  return history;
}

// The IOChannel TODO rewrite: a TODO at line 39 is removed while 35 lines
// are inserted above its replacement, which lands on line 74.
inline std::vector<std::string> RewriteBefore() {
  std::vector<std::string> lines;
  for (int i = 1; i <= 37; ++i) lines.push_back("    int field" + std::to_string(i) + ";");
  lines.push_back("");
  lines.push_back("    // TODO: update, etc");
  lines.push_back("    public void close() throws IOException {");
  for (int i = 0; i < 5; ++i) lines.push_back("        step" + std::to_string(i) + "();");
  lines.push_back("    }");
  return lines;
}

inline std::vector<std::string> RewriteAfter() {
  auto before = RewriteBefore();
  std::vector<std::string> lines(before.begin(), before.begin() + 38);
  for (int i = 0; i < 34; ++i) lines.push_back("    private int added" + std::to_string(i) + ";");
  lines.push_back("");
  lines.push_back("    // TODO: update and use it (placeholder)");
  lines.insert(lines.end(), before.begin() + 39, before.end());
  return lines;
}

// Reference greedy assignment: rescans every live cell for the maximum on
// each iteration; ties go to the lowest (row, column).
inline std::vector<std::pair<std::size_t, std::size_t>> NaiveGreedy(const ScoreMatrix& m,
                                                                    double threshold) {
  std::vector<bool> row_used(m.rows()), col_used(m.cols());
  std::vector<std::pair<std::size_t, std::size_t>> out;
  while (true) {
    bool found = false;
    std::size_t br = 0, bc = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (row_used[r]) continue;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (col_used[c]) continue;
        if (m.at(r, c) < threshold - kScoreTolerance) continue;
        if (!found || m.at(r, c) > m.at(br, bc)) {
          found = true;
          br = r;
          bc = c;
        }
      }
    }
    if (!found) return out;
    out.emplace_back(br, bc);
    row_used[br] = true;
    col_used[bc] = true;
  }
}

// Label sets whose only best grid point is a planted one. Cases are drawn
// at random and labeled by the planted config; whenever the search prefers
// another point, a case on which the two disagree is added.
class PlantedLabels {
 public:
  PlantedLabels(GridPoint planted, std::uint64_t seed) : planted_(planted), rng_(seed) {}

  MatchFeatures RandomFeatures(const MatchFeatures* near) {
    MatchFeatures f;
    f.description = near && Coin() ? Mutate(near->description) : Words(1, 5);
    f.previous_line = near && Coin() ? Mutate(near->previous_line) : Words(0, 3);
    f.next_line = near && Coin() ? Mutate(near->next_line) : Words(0, 3);
    f.hunk_id = near && Coin() ? near->hunk_id : "h" + std::to_string(rng_() % 3);
    return f;
  }

  LabeledCase RandomCase() {
    LabeledCase c;
    c.group_commit = "g" + std::to_string(serial_++);
    c.group_file = "f";
    c.deleted = {c.group_commit + ":d", RandomFeatures(nullptr)};
    const int n = 1 + static_cast<int>(rng_() % 3);
    for (int k = 0; k < n; ++k) {
      c.candidates.push_back({c.group_commit + ":c" + std::to_string(k), RandomFeatures(&c.deleted.features)});
    }
    c.gold = Predict(c, planted_.ToConfig());
    return c;
  }

  static std::optional<std::string> Predict(const LabeledCase& c, const MatchConfig& cfg) {
    std::vector<MatchCandidate> del = {c.deleted};
    auto pairs = GreedyMatch(del, c.candidates, cfg);
    if (pairs.empty()) return std::nullopt;
    return pairs[0].created_id;
  }

  // Grows the label set until every grid point other than the planted one
  // mislabels at least one case.
  std::vector<LabeledCase> Build(std::size_t initial) {
    std::vector<LabeledCase> cases;
    for (std::size_t i = 0; i < initial; ++i) cases.push_back(RandomCase());
    const auto grid = EnumerateGrid();
    for (int round = 0; round < 500; ++round) {
      const GridPoint* rival = nullptr;
      for (const auto& p : grid) {
        if (p == planted_) continue;
        if (EvaluateConfig(cases, p.ToConfig()) == 1.0) {
          rival = &p;
          break;
        }
      }
      if (!rival) return cases;
      bool added = false;
      for (int tries = 0; tries < 100000 && !added; ++tries) {
        LabeledCase c = RandomCase();
        if (Predict(c, rival->ToConfig()) != c.gold) {
          cases.push_back(std::move(c));
          added = true;
        }
      }
      if (!added) break;
    }
    return cases;
  }

 private:
  bool Coin() { return rng_() % 2 == 0; }

  std::string Words(int lo, int hi) {
    static const char* kVocab[] = {"todo", "fix", "update", "use", "parser", "cache", "later", "x"};
    const int n = lo + static_cast<int>(rng_() % static_cast<unsigned>(hi - lo + 1));
    std::string s;
    for (int i = 0; i < n; ++i) s += std::string(kVocab[rng_() % 8]) + " ";
    return s;
  }

  std::string Mutate(const std::string& s) {
    switch (rng_() % 3) {
      case 0:
        return s;
      case 1:
        return s + Words(1, 2);
      default: {
        auto cut = s.find(' ');
        return cut == std::string::npos ? Words(1, 2) : s.substr(cut + 1);
      }
    }
  }

  GridPoint planted_;
  std::mt19937_64 rng_;
  int serial_ = 0;
};

}  // namespace satd::testing

#endif  // SATD_TESTS_TEST_SUPPORT_H_
