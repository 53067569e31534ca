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

#ifndef SATD_LOG_H_
#define SATD_LOG_H_

#include <spdlog/spdlog.h>

namespace satd {

// Routes the default spdlog logger to stderr at the level named by the
// SATD_LOG environment variable (trace, debug, info, warn, error, off;
// default warn).
void InitLogging();

}  // namespace satd

#endif  // SATD_LOG_H_
