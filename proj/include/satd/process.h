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

#ifndef SATD_PROCESS_H_
#define SATD_PROCESS_H_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace satd {

struct ProcessResult {
  int exit_code = -1;
  std::string out;  // empty when a line callback consumed stdout
  std::string err;
};

// Runs argv[0] (looked up on PATH) without a shell. If `on_line` is set,
// stdout is streamed to it one line at a time (newline stripped) and not
// buffered in the result.
ProcessResult RunProcess(const std::vector<std::string>& argv,
                         const std::function<void(std::string_view)>& on_line = {});

}  // namespace satd

#endif  // SATD_PROCESS_H_
