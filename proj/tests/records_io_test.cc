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


#include "satd/records_io.h"

#include <gtest/gtest.h>

#include <random>

#include "satd/errors.h"

namespace satd {
namespace {

TrackedSatd Sample() {
  TrackedSatd t;
  t.created_in_file = "src/IOChannel.java";
  t.last_appeared_in_file = "src/IOChannel.java";
  t.created_in_line = 39;
  t.last_appeared_in_line = 74;
  t.created_in_commit = "e2f543b515";
  t.creation_text = "// TODO: update, etc";
  t.update_texts = {"// TODO: update and use it (placeholder)"};
  t.updated_in_lines = {{39, 74}};
  t.updated_in_commits = {"fb3b1a48c6"};
  return t;
}

TEST(RecordsIoTest, JsonlFieldOrderAndNull) {
  const std::vector<TrackedSatd> v = {Sample()};
  EXPECT_EQ(WriteTrackedJsonl(v),
            R"j({"created_in_file":"src/IOChannel.java","last_appeared_in_file":"src/IOChannel.java",)j"
            R"j("created_in_line":39,"last_appeared_in_line":74,"created_in_commit":"e2f543b515",)j"
            R"j("deleted_in_commit":null,"creation_text":"// TODO: update, etc",)j"
            R"j("update_texts":["// TODO: update and use it (placeholder)"],)j"
            R"j("updated_in_lines":[[39,74]],"updated_in_commits":["fb3b1a48c6"]})j"
            "\n");
}

TEST(RecordsIoTest, JsonlRoundTrip) {
  std::vector<TrackedSatd> v = {Sample(), Sample()};
  v[1].deleted_in_commit = "abc";
  v[1].update_texts.clear();
  v[1].updated_in_lines.clear();
  v[1].updated_in_commits.clear();
  EXPECT_EQ(ReadTrackedJsonl(WriteTrackedJsonl(v)), v);
  EXPECT_TRUE(ReadTrackedJsonl("").empty());
  EXPECT_TRUE(WriteTrackedJsonl({}).empty());
}

TEST(RecordsIoTest, CsvHeader) {
  auto text = WriteTrackedCsv({});
  EXPECT_EQ(text,
            "created_in_file,last_appeared_in_file,created_in_line,last_appeared_in_line,"
            "created_in_commit,deleted_in_commit,creation_text,update_texts,updated_in_lines,"
            "updated_in_commits\r\n");
}

// Random awkward text: quotes, commas, newlines, non-ASCII.
std::string Awkward(std::mt19937& rng) {
  static const std::vector<std::string> parts = {"a", ",", "\"", "\n", "\r\n", " ", "\xc3\xa9",
                                                 "TODO", "\\", "[1,2]", "''"};
  std::string s;
  const int n = static_cast<int>(rng() % 6);
  for (int i = 0; i < n; ++i) s += parts[rng() % parts.size()];
  return s;
}

TEST(RecordsIoTest, CsvRoundTripsLikeJsonl) {
  std::mt19937 rng(9);
  std::vector<TrackedSatd> v;
  for (int i = 0; i < 200; ++i) {
    TrackedSatd t;
    t.created_in_file = Awkward(rng);
    t.last_appeared_in_file = Awkward(rng);
    t.created_in_line = static_cast<int>(rng() % 1000);
    t.last_appeared_in_line = static_cast<int>(rng() % 1000);
    t.created_in_commit = "c" + std::to_string(i);
    if (rng() % 2) t.deleted_in_commit = "d" + std::to_string(i);
    t.creation_text = Awkward(rng);
    for (int k = static_cast<int>(rng() % 3); k > 0; --k) {
      t.update_texts.push_back(Awkward(rng));
      t.updated_in_lines.emplace_back(static_cast<int>(rng() % 50), static_cast<int>(rng() % 50));
      t.updated_in_commits.push_back(Awkward(rng) + "x");
    }
    v.push_back(std::move(t));
  }
  const auto from_csv = ReadTrackedCsv(WriteTrackedCsv(v));
  EXPECT_EQ(from_csv, v);
  EXPECT_EQ(WriteTrackedJsonl(from_csv), WriteTrackedJsonl(v));
}

TEST(RecordsIoTest, ParseCsv) {
  auto rows = ParseCsv("a,\"b,c\",\"d\"\"e\"\r\n,x\n\"multi\nline\",\n");
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"a", "b,c", "d\"e"}));
  EXPECT_EQ(rows[1], (std::vector<std::string>{"", "x"}));
  EXPECT_EQ(rows[2], (std::vector<std::string>{"multi\nline", ""}));
  EXPECT_EQ(ParseCsv("a,b").size(), 1u);
  EXPECT_THROW(ParseCsv("\"open"), SchemaViolation);
}

std::string PathOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const SchemaViolation& e) {
    return e.field_path();
  }
  return "<accepted>";
}

TEST(RecordsIoTest, ReaderErrorsCarryLineNumbers) {
  const std::string good = WriteTrackedJsonl(std::vector<TrackedSatd>{Sample()});
  EXPECT_EQ(PathOf([&] { ReadTrackedJsonl(good + "{oops\n"); }), "line 2");
  EXPECT_EQ(PathOf([&] { ReadTrackedJsonl(good + "\n" + R"({"created_in_file":1})" + "\n"); }),
            "line 3.created_in_file");
  EXPECT_EQ(PathOf([&] { ReadTrackedCsv("x,y\r\n"); }), "line 1");
  auto csv = WriteTrackedCsv(std::vector<TrackedSatd>{Sample()});
  csv.replace(csv.find(",39,"), 4, ",3x,");
  EXPECT_EQ(PathOf([&] { ReadTrackedCsv(csv); }), "row 1.created_in_line");
}

TEST(RecordsIoTest, UpdateListsMustAgree) {
  auto j = TrackedToJson(Sample());
  j["updated_in_commits"] = nlohmann::ordered_json::array();
  EXPECT_THROW(ReadTrackedJsonl(j.dump()), SchemaViolation);
}

LabeledCase Case() {
  LabeledCase c;
  c.group_commit = "c2";
  c.group_file = "f000001";
  c.deleted = {"f000001:1", {"// TODO a", "prev", "next", "c2:f000001#1"}};
  c.candidates = {{"f000001:2", {"// TODO a b", "prev", "", "c2:f000001#1"}},
                  {"f000001:3", {"// FIXME", "", "", "c2:f000001#2"}}};
  c.gold = "f000001:2";
  return c;
}

TEST(RecordsIoTest, LabelFormat) {
  auto j = CaseToJson(Case());
  EXPECT_EQ(j.dump(),
            R"({"group":{"commit":"c2","file_id":"f000001"},)"
            R"("deleted":{"id":"f000001:1","description":"// TODO a","prev":"prev","next":"next","hunk_id":"c2:f000001#1"},)"
            R"("candidates":[{"id":"f000001:2","description":"// TODO a b","prev":"prev","next":"","hunk_id":"c2:f000001#1"},)"
            R"({"id":"f000001:3","description":"// FIXME","prev":"","next":"","hunk_id":"c2:f000001#2"}],)"
            R"("gold":"f000001:2"})");
  std::vector<LabeledCase> cases = {Case(), Case()};
  cases[1].gold.reset();
  auto back = ReadCasesJsonl(WriteCasesJsonl(cases));
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].gold, "f000001:2");
  EXPECT_EQ(back[1].gold, std::nullopt);
  EXPECT_EQ(back[0].candidates[1].features, cases[0].candidates[1].features);
  EXPECT_EQ(back[0].deleted.raw_id, "f000001:1");
}

TEST(RecordsIoTest, LabelErrors) {
  auto line = CaseToJson(Case());
  auto bad_gold = line;
  bad_gold["gold"] = "nobody";
  EXPECT_EQ(PathOf([&] { ReadCasesJsonl(line.dump() + "\n" + bad_gold.dump()); }), "line 2.gold");
  auto no_prev = line;
  no_prev["candidates"][1].erase("prev");
  EXPECT_EQ(PathOf([&] { ReadCasesJsonl(no_prev.dump()); }), "line 1.candidates[1].prev");
  EXPECT_EQ(PathOf([&] { ReadCasesJsonl("[]"); }), "line 1");
}

TEST(RecordsIoTest, RawDumpHasTypeFields) {
  RawSatd r;
  r.raw_id = "f1:1";
  r.file_id = "f1";
  r.created_in_commit = "c1";
  r.created_in_hunk = "c1:f1#1";
  r.created_in_line = 3;
  r.current_line = 4;
  r.creation_text = "// TODO";
  auto j = RawToJson(r);
  for (const char* key : {"raw_id", "file_id", "created_in_commit", "created_in_hunk",
                          "created_in_line", "current_line", "creation_text", "deleted_in_commit",
                          "deleted_in_hunk", "alive"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_TRUE(j["alive"].get<bool>());
  EXPECT_TRUE(j["deleted_in_commit"].is_null());
}

}  // namespace
}  // namespace satd
