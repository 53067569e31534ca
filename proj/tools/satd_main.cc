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


// satd: track self-admitted technical debt through a repository's history.

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "satd/detector.h"
#include "satd/errors.h"
#include "satd/evaluator.h"
#include "satd/file_io.h"
#include "satd/fixture.h"
#include "satd/git_repository.h"
#include "satd/ingest.h"
#include "satd/log.h"
#include "satd/optimizer.h"
#include "satd/pipeline.h"
#include "satd/records_io.h"
#include "satd/text.h"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kRuntimeError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TrackArgs {
  std::string repo;
  std::string fixture;
  std::string branch;
  std::string output = "-";
  std::string format;
  std::string weights;
  std::optional<double> threshold;
  std::string comment_markers;
  bool no_comment_filter = false;
  std::string tags;
  std::string emit_raw;
  std::string emit_candidates;
  std::string config;
  bool lenient = false;
  int rename_similarity = 50;
};

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    auto item = satd::Trim(std::string_view(s).substr(start, end - start));
    if (!item.empty()) out.emplace_back(item);
    start = end + 1;
  }
  return out;
}

double ParseNumber(const std::string& text, const std::string& what) {
  auto t = satd::Trim(text);
  double v = 0;
  auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc{} || res.ptr != t.data() + t.size()) {
    throw UsageError(what + ": not a number: '" + text + "'");
  }
  return v;
}

void SetWeights(satd::MatchConfig& cfg, const std::vector<double>& w) {
  if (w.size() != 4) throw UsageError("weights: expected four values d,p,n,h");
  cfg.description_weight = w[0];
  cfg.prev_line_weight = w[1];
  cfg.next_line_weight = w[2];
  cfg.hunk_weight = w[3];
}

std::vector<std::string> JsonStrings(const json& v, const char* key) {
  if (!v.is_array()) throw UsageError(std::string("config: ") + key + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw UsageError(std::string("config: ") + key + " must be a list of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

// Config file values first, then command-line flags on top.
void ApplyConfigFile(const std::string& path, TrackArgs& args, satd::MatchConfig& match,
                     satd::DetectorOptions& detector, unsigned& jobs) {
  json doc;
  try {
    doc = json::parse(satd::ReadFile(path));
  } catch (const json::parse_error& e) {
    throw satd::SchemaViolation(path, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw satd::SchemaViolation(path, "expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "weights") {
      if (!value.is_array()) throw UsageError("config: weights must be a list of four numbers");
      std::vector<double> w;
      for (const auto& x : value) {
        if (!x.is_number()) throw UsageError("config: weights must be a list of four numbers");
        w.push_back(x.get<double>());
      }
      SetWeights(match, w);
    } else if (key == "threshold") {
      if (!value.is_number()) throw UsageError("config: threshold must be a number");
      match.threshold = value.get<double>();
    } else if (key == "comment_markers") {
      detector.comment_markers = JsonStrings(value, "comment_markers");
    } else if (key == "tags") {
      detector.tags = JsonStrings(value, "tags");
    } else if (key == "require_comment_marker") {
      if (!value.is_boolean()) throw UsageError("config: require_comment_marker must be a boolean");
      detector.require_comment_marker = value.get<bool>();
    } else if (key == "branch") {
      if (!value.is_string()) throw UsageError("config: branch must be a string");
      if (args.branch.empty()) args.branch = value.get<std::string>();
    } else if (key == "format") {
      if (!value.is_string()) throw UsageError("config: format must be a string");
      if (args.format.empty()) args.format = value.get<std::string>();
    } else if (key == "jobs") {
      if (!value.is_number_unsigned() || value.get<unsigned>() == 0) {
        throw UsageError("config: jobs must be a positive integer");
      }
      jobs = value.get<unsigned>();
    } else if (key == "lenient") {
      if (!value.is_boolean()) throw UsageError("config: lenient must be a boolean");
      args.lenient = args.lenient || value.get<bool>();
    } else {
      throw UsageError("config: unknown key '" + key + "'");
    }
  }
}

void WriteOutput(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content << std::flush;
  } else {
    satd::WriteFileAtomically(path, content);
  }
}

satd::RepositoryHistory LoadHistory(const std::string& repo, const std::string& fixture,
                                    const std::string& branch, int rename_similarity) {
  if (!fixture.empty()) return satd::LoadFixture(fixture);
  satd::IngestOptions options;
  if (!branch.empty()) options.branch = branch;
  options.rename_similarity = rename_similarity;
  return satd::IngestRepository(satd::GitRepository::Open(repo), options);
}

int RunTrack(TrackArgs& args, unsigned jobs, bool jobs_given) {
  satd::MatchConfig match;
  satd::DetectorOptions detector;
  unsigned config_jobs = jobs;
  if (!args.config.empty()) ApplyConfigFile(args.config, args, match, detector, config_jobs);
  if (!jobs_given) jobs = config_jobs;
  if (!args.weights.empty()) {
    std::vector<double> w;
    for (const auto& part : SplitList(args.weights)) w.push_back(ParseNumber(part, "--weights"));
    SetWeights(match, w);
  }
  if (args.threshold) match.threshold = *args.threshold;
  if (!args.comment_markers.empty()) detector.comment_markers = SplitList(args.comment_markers);
  if (!args.tags.empty()) detector.tags = SplitList(args.tags);
  if (args.no_comment_filter) detector.require_comment_marker = false;
  if (args.format.empty()) args.format = "jsonl";
  if (args.format != "jsonl" && args.format != "csv") {
    throw UsageError("--format: expected jsonl or csv, got '" + args.format + "'");
  }
  if (detector.tags.empty()) throw UsageError("--tags: at least one tag is required");
  if (detector.require_comment_marker && detector.comment_markers.empty()) {
    throw UsageError("--comment-markers: at least one marker is required");
  }
  try {
    match.Validate();
  } catch (const satd::Error& e) {
    throw UsageError(e.what());
  }

  const satd::RepositoryHistory history =
      LoadHistory(args.repo, args.fixture, args.branch, args.rename_similarity);
  satd::PipelineOptions options;
  options.match = match;
  options.track.policy = args.lenient ? satd::ReplayPolicy::kLenient : satd::ReplayPolicy::kStrict;
  options.jobs = jobs;
  const satd::PipelineResult result = satd::RunPipeline(history, satd::Detector(detector), options);

  if (!args.emit_raw.empty()) WriteOutput(args.emit_raw, satd::WriteRawJsonl(result.raw));
  if (!args.emit_candidates.empty()) {
    WriteOutput(args.emit_candidates, satd::WriteCasesJsonl(satd::CandidateCases(result.raw)));
  }
  WriteOutput(args.output, args.format == "csv" ? satd::WriteTrackedCsv(result.satds)
                                                : satd::WriteTrackedJsonl(result.satds));

  const auto& s = result.summary;
  ordered_json summary = {{"commits", s.commits},
                          {"master_branch_commits", s.master_branch_commits},
                          {"raw_satds", s.raw_satds},
                          {"final_satds", s.final_satds},
                          {"updates", s.updates}};
  // Keep stdout clean when it carries the records.
  (args.output == "-" ? std::cerr : std::cout) << summary.dump() << std::endl;
  return 0;
}

int RunExportFixture(const std::string& repo, const std::string& branch, const std::string& output,
                     int rename_similarity) {
  const auto history = LoadHistory(repo, "", branch, rename_similarity);
  WriteOutput(output, satd::FixtureToJson(history).dump(1) + "\n");
  return 0;
}

int RunOptimize(const std::string& labels, unsigned jobs) {
  const auto cases = satd::ReadCasesJsonl(satd::ReadFile(labels));
  const auto result = satd::GridSearch(cases, jobs);
  ordered_json out = {{"weights",
                       {{"description", result.config.description_weight},
                        {"previous_line", result.config.prev_line_weight},
                        {"next_line", result.config.next_line_weight},
                        {"hunk", result.config.hunk_weight}}},
                      {"threshold", result.config.threshold},
                      {"accuracy", result.accuracy},
                      {"correct", result.correct},
                      {"cases", cases.size()},
                      {"evaluations", result.evaluations}};
  std::cout << out.dump(2) << std::endl;
  return 0;
}

std::vector<satd::TrackedSatd> ReadRecords(const std::string& path) {
  const std::string text = satd::ReadFile(path);
  try {
    return fs::path(path).extension() == ".csv" ? satd::ReadTrackedCsv(text)
                                                : satd::ReadTrackedJsonl(text);
  } catch (const satd::SchemaViolation& e) {
    throw satd::SchemaViolation(path, e.what());
  }
}

int RunEval(const std::string& pred, const std::string& gold, const std::string& opponent) {
  const auto predicted = ReadRecords(pred);
  const auto expected = ReadRecords(gold);
  const satd::EvaluationReport r =
      opponent.empty() ? satd::Evaluate(predicted, expected)
                       : satd::EvaluatePairwise(predicted, expected, ReadRecords(opponent));
  ordered_json out = {{"precision", r.precision}, {"recall", r.recall}, {"f1", r.f1},
                      {"tp", r.tp},               {"fp", r.fp},         {"fn", r.fn}};
  std::cout << out.dump(2) << std::endl;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  satd::InitLogging();

  CLI::App app{"Track self-admitted technical debt comments through a git history."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "satd 0.1.0");

  unsigned jobs = 1;
  auto add_jobs = [&](CLI::App* cmd) {
    return cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  TrackArgs track;
  CLI::App* track_cmd = app.add_subcommand("track", "Mine a repository and emit tracked SATDs");
  auto* repo_opt = track_cmd->add_option("--repo", track.repo, "Path to a git working tree");
  auto* fixture_opt = track_cmd->add_option("--fixture", track.fixture, "Replay a JSON history fixture")
                          ->check(CLI::ExistingFile);
  repo_opt->excludes(fixture_opt);
  fixture_opt->excludes(repo_opt);
  track_cmd->add_option("--branch", track.branch, "Mainline branch (default: master, then main)");
  track_cmd->add_option("--output,-o", track.output, "Output file, '-' for stdout")
      ->capture_default_str();
  track_cmd->add_option("--format", track.format, "jsonl or csv (default jsonl)");
  track_cmd->add_option("--weights", track.weights,
                        "Matcher weights d,p,n,h (description, previous, next, hunk)");
  track_cmd->add_option("--threshold", track.threshold, "Matcher acceptance threshold");
  track_cmd->add_option("--comment-markers", track.comment_markers, "Comma-separated comment markers");
  track_cmd->add_flag("--no-comment-filter", track.no_comment_filter,
                      "Match tags anywhere on a line, not only after a comment marker");
  track_cmd->add_option("--tags", track.tags, "Comma-separated SATD tags");
  track_cmd->add_option("--emit-raw", track.emit_raw, "Also write raw SATDs as JSONL");
  track_cmd->add_option("--emit-candidates", track.emit_candidates,
                        "Also write an unlabeled candidate file for annotation");
  track_cmd->add_option("--config", track.config, "JSON config file")->check(CLI::ExistingFile);
  track_cmd->add_flag("--lenient", track.lenient, "Warn instead of failing on inconsistent diffs");
  track_cmd->add_option("--rename-similarity", track.rename_similarity,
                        "Rename detection threshold in percent")
      ->check(CLI::Range(0, 100))
      ->capture_default_str();
  auto* track_jobs = add_jobs(track_cmd);

  std::string repo, branch, output = "-";
  int rename_similarity = 50;
  CLI::App* export_cmd =
      app.add_subcommand("export-fixture", "Write a repository's file histories as a JSON fixture");
  export_cmd->add_option("--repo", repo, "Path to a git working tree")->required();
  export_cmd->add_option("--branch", branch, "Mainline branch (default: master, then main)");
  export_cmd->add_option("--output,-o", output, "Output file, '-' for stdout")->capture_default_str();
  export_cmd->add_option("--rename-similarity", rename_similarity,
                         "Rename detection threshold in percent")
      ->check(CLI::Range(0, 100))
      ->capture_default_str();

  std::string labels;
  CLI::App* optimize_cmd = app.add_subcommand("optimize", "Grid-search matcher weights on labels");
  optimize_cmd->add_option("--labels", labels, "Labeled cases (JSONL)")->required();
  add_jobs(optimize_cmd);

  std::string pred, gold, opponent;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Score predicted SATDs against a gold list");
  eval_cmd->add_option("--pred", pred, "Predicted records (.jsonl or .csv)")->required();
  eval_cmd->add_option("--gold", gold, "Gold records (.jsonl or .csv)")->required();
  eval_cmd->add_option("--opponent-correct", opponent,
                       "Another tool's correct records; switches to a head-to-head score where "
                       "--gold holds every record audited as correct");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*track_cmd) {
      if (track.repo.empty() && track.fixture.empty()) {
        throw UsageError("track: one of --repo or --fixture is required");
      }
      return RunTrack(track, jobs, track_jobs->count() > 0);
    }
    if (*export_cmd) return RunExportFixture(repo, branch, output, rename_similarity);
    if (*optimize_cmd) return RunOptimize(labels, jobs);
    if (*eval_cmd) return RunEval(pred, gold, opponent);
  } catch (const UsageError& e) {
    std::cerr << "satd: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "satd: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kUsageError;
}
