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

#ifndef SATD_TEXT_H_
#define SATD_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace satd {

// Replaces every byte that is not part of a well-formed UTF-8 sequence
// with U+FFFD.
std::string SanitizeUtf8(std::string_view bytes);

std::string_view Trim(std::string_view s);

// ASCII-only case folding; bytes >= 0x80 pass through untouched.
std::string AsciiLower(std::string_view s);
std::string AsciiUpper(std::string_view s);

// Identifier characters for word-boundary purposes: ASCII alphanumerics,
// '_' and any non-ASCII byte.
bool IsWordByte(unsigned char c);

std::vector<std::string> SplitLines(std::string_view content);

}  // namespace satd

#endif  // SATD_TEXT_H_
