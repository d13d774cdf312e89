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

#ifndef MTSCORE_CORE_TOKENIZER_HPP_
#define MTSCORE_CORE_TOKENIZER_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mts {

enum class TokenizerKind {
  ThirteenA,  // WMT official scorer's language-independent scheme
  None,       // whitespace splitting only, for pre-tokenized input
};

// Signature token values: "13a" and "none".
const char* tokenizer_name(TokenizerKind kind);
std::optional<TokenizerKind> tokenizer_from_name(std::string_view name);

using Tokens = std::vector<std::string>;

// Language-independent normalization of the WMT scorer: removes <skipped>
// tags, joins hyphenated line wraps, flattens newlines and decodes the four
// SGML entities. Total on any byte string.
std::string normalize_v13a(std::string_view text);

// normalize_v13a followed by the scorer's punctuation-padding and the
// digit-context rules for '.', ',' and '-', then whitespace splitting.
// Rule order is load-bearing; do not reorder.
Tokens tokenize_13a(std::string_view text);

// Splits on runs of ASCII whitespace, nothing else.
Tokens tokenize_none(std::string_view text);

Tokens tokenize(TokenizerKind kind, std::string_view text);

// Unicode-aware full lowercasing, applied before tokenization when the
// lowercase scoring option is active.
std::string fold_case(std::string_view text);

// Joins tokens with single spaces (inverse of splitting for valid tokens).
std::string join_tokens(const Tokens& tokens);

}  // namespace mts

#endif  // MTSCORE_CORE_TOKENIZER_HPP_
