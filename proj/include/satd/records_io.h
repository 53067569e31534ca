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

#ifndef SATD_RECORDS_IO_H_
#define SATD_RECORDS_IO_H_

// Serialization of tracked SATDs (JSONL and CSV), raw SATD dumps and label
// files. Readers throw SchemaViolation whose field path starts with
// "line <n>" (1-based).

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "satd/matcher.h"
#include "satd/optimizer.h"
#include "satd/tracker.h"

namespace satd {

// Column order shared by the JSONL object keys and the CSV header.
inline constexpr std::string_view kTrackedColumns[] = {
    "created_in_file",   "last_appeared_in_file", "created_in_line", "last_appeared_in_line",
    "created_in_commit", "deleted_in_commit",     "creation_text",   "update_texts",
    "updated_in_lines",  "updated_in_commits"};

nlohmann::ordered_json TrackedToJson(const TrackedSatd& satd);
TrackedSatd TrackedFromJson(const nlohmann::json& obj, const std::string& where);

std::string WriteTrackedJsonl(std::span<const TrackedSatd> satds);
std::vector<TrackedSatd> ReadTrackedJsonl(std::string_view text);

// RFC 4180 CSV. List-valued columns hold their JSON encoding; an absent
// deleted_in_commit is an empty cell.
std::string WriteTrackedCsv(std::span<const TrackedSatd> satds);
std::vector<TrackedSatd> ReadTrackedCsv(std::string_view text);

std::vector<std::vector<std::string>> ParseCsv(std::string_view text);

nlohmann::ordered_json RawToJson(const RawSatd& satd);
std::string WriteRawJsonl(std::span<const RawSatd> satds);

nlohmann::ordered_json CaseToJson(const LabeledCase& c);
std::string WriteCasesJsonl(std::span<const LabeledCase> cases);
std::vector<LabeledCase> ReadCasesJsonl(std::string_view text);

}  // namespace satd

#endif  // SATD_RECORDS_IO_H_
