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

#ifndef SATD_DETECTOR_H_
#define SATD_DETECTOR_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace satd {

struct SatdHit {
  std::string tag;  // canonical (upper-case) spelling of the matched tag
  std::string normalized_text;

  bool operator==(const SatdHit&) const = default;
};

struct DetectorOptions {
  std::vector<std::string> tags = {"TODO", "FIXME", "XXX", "HACK"};
  std::vector<std::string> comment_markers = {"//", "/*", "*",  "#",  "<!--",
                                              ";",  "--", "\"\"\"", "'''"};
  // When false any standalone tag counts, comment opener or not.
  bool require_comment_marker = true;
};

// Task-annotation-tag matcher. A line is a SATD when, after some comment
// opener, it contains one of the tags case-insensitively as a standalone
// word (not part of a longer identifier). Thread-safe; holds no mutable
// state.
class Detector {
 public:
  Detector() : Detector(DetectorOptions{}) {}
  explicit Detector(DetectorOptions options);

  // `line` must not contain a newline.
  std::optional<SatdHit> Detect(std::string_view line) const;
  bool IsSatd(std::string_view line) const { return Detect(line).has_value(); }

  const DetectorOptions& options() const { return options_; }

 private:
  DetectorOptions options_;
  std::vector<std::string> lowered_tags_;
};

}  // namespace satd

#endif  // SATD_DETECTOR_H_
