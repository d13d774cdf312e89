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

#ifndef MTSCORE_CORE_SIGNATURE_HPP_
#define MTSCORE_CORE_SIGNATURE_HPP_

#include <optional>
#include <string>
#include <string_view>

namespace mts {

// The version string embedded in every score report: '+'-delimited KEY.VALUE
// pairs recording each parameter that affects the score. The grammar is
// documented in docs/signature.md.
struct Signature {
  std::string metric = "BLEU";  // "BLEU" or "chrF"
  std::string case_name = "mixed";  // "mixed" | "lc"
  std::optional<std::string> langpair;  // absent when scoring user files
  int numrefs = 1;
  // BLEU entries.
  std::optional<std::string> smoothing;  // "exp" | "floor" | "none"
  std::optional<std::string> tokenizer;  // "13a" | "none"
  // chrF entries.
  std::optional<int> char_order;
  std::optional<double> beta;
  std::optional<bool> whitespace_kept;
  // Common tail.
  std::optional<std::string> test_set;  // absent when scoring user files
  std::string version;

  bool operator==(const Signature&) const = default;
};

// Renders the fixed entry order; short form uses the abbreviated keys
// (c, l, #, s, t, v), long form the spelled-out ones. numrefs >= 1 required.
std::string build_signature(const Signature& sig, bool short_form);

// Inverse of build_signature for either rendering. Throws
// Error(SignatureParse) on malformed structure, duplicate, unknown or
// missing keys, naming the offender.
Signature parse_signature(std::string_view text);

}  // namespace mts

#endif  // MTSCORE_CORE_SIGNATURE_HPP_
