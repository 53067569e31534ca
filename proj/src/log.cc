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

#include "satd/log.h"

#include <spdlog/sinks/stdout_sinks.h>

#include <cstdlib>

namespace satd {

void InitLogging() {
  spdlog::drop("satd");
  auto logger = spdlog::stderr_logger_mt("satd");
  logger->set_pattern("satd: %l: %v");
  const char* level = std::getenv("SATD_LOG");
  logger->set_level(level ? spdlog::level::from_str(level) : spdlog::level::warn);
  spdlog::set_default_logger(std::move(logger));
}

}  // namespace satd
