// Copyright 2026 mtscore authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MTSCORE_CORE_UNICODE_HPP_
#define MTSCORE_CORE_UNICODE_HPP_

#include <string>
#include <string_view>

namespace mts {

// Strict UTF-8 validation (RFC 3629: no overlongs, surrogates or > U+10FFFF).
bool utf8_valid(std::string_view bytes);

// Throws Error(InvalidUtf8) naming the byte offset of the first bad sequence.
void utf8_check(std::string_view bytes);

// Decode/encode between UTF-8 and code points. decode throws on invalid input.
std::u32string utf8_decode(std::string_view bytes);
std::string utf8_encode(std::u32string_view cps);

// Full Unicode lowercasing (1:N mappings and final-sigma handling included).
// Throws Error(InvalidUtf8) on bad input.
std::string lowercase(std::string_view text);

// Unicode white space (the set a Python-style \s matches for text).
bool is_space(char32_t cp);

bool is_letter(char32_t cp);

}  // namespace mts

#endif  // MTSCORE_CORE_UNICODE_HPP_
