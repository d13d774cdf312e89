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

#ifndef MTSCORE_CORE_SGML_HPP_
#define MTSCORE_CORE_SGML_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace mts {

// Returns the trimmed text of every <seg ...>...</seg> element in file
// order. Deliberately line-oriented pattern matching, not a markup parser:
// the test-set wrappers are frequently not well-formed. Entity references
// are preserved verbatim; the metric tokenizer decodes them later.
// Throws Error(Extraction) when no segments are found.
std::vector<std::string> extract_segments(std::string_view sgml_text);

}  // namespace mts

#endif  // MTSCORE_CORE_SGML_HPP_
