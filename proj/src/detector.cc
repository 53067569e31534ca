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

#include "satd/detector.h"

#include <algorithm>
#include <limits>

#include "satd/text.h"

namespace satd {

Detector::Detector(DetectorOptions options) : options_(std::move(options)) {
  for (auto& tag : options_.tags) {
    tag = AsciiUpper(tag);
    lowered_tags_.push_back(AsciiLower(tag));
  }
  std::erase_if(options_.comment_markers, [](const std::string& m) { return m.empty(); });
}

std::optional<SatdHit> Detector::Detect(std::string_view line) const {
  const std::string lowered = AsciiLower(line);

  // Earliest column at which a comment can have started.
  std::size_t comment_start = 0;
  if (options_.require_comment_marker) {
    comment_start = std::numeric_limits<std::size_t>::max();
    for (const auto& marker : options_.comment_markers) {
      auto pos = lowered.find(AsciiLower(marker));
      if (pos != std::string::npos) comment_start = std::min(comment_start, pos + marker.size());
    }
    if (comment_start == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  }

  std::size_t best_pos = std::string::npos;
  std::size_t best_tag = 0;
  for (std::size_t t = 0; t < lowered_tags_.size(); ++t) {
    const std::string& tag = lowered_tags_[t];
    if (tag.empty()) continue;
    for (auto pos = lowered.find(tag, comment_start); pos != std::string::npos;
         pos = lowered.find(tag, pos + 1)) {
      if (pos >= best_pos) break;
      const bool left_ok = pos == 0 || !IsWordByte(static_cast<unsigned char>(lowered[pos - 1]));
      const std::size_t end = pos + tag.size();
      const bool right_ok =
          end == lowered.size() || !IsWordByte(static_cast<unsigned char>(lowered[end]));
      if (left_ok && right_ok) {
        best_pos = pos;
        best_tag = t;
        break;
      }
    }
  }
  if (best_pos == std::string::npos) return std::nullopt;
  return SatdHit{options_.tags[best_tag], std::string(Trim(line))};
}

}  // namespace satd
