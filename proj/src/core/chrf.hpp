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

#ifndef MTSCORE_CORE_CHRF_HPP_
#define MTSCORE_CORE_CHRF_HPP_

#include <span>
#include <string>
#include <vector>

#include "core/bleu.hpp"
#include "core/signature.hpp"

namespace mts {

struct ChrfParams {
  int char_order = 6;
  double beta = 2.0;
  bool remove_whitespace = true;
  bool lowercase = false;

  void validate() const;
};

struct ChrfResult {
  double score = 0.0;  // 0..100
  int char_order = 6;
  double beta = 2.0;
  Signature signature;
  std::string diagnostic;
};

// Corpus-level character n-gram F-score. Same stream-length contract as
// corpus_bleu. Precision and recall are averaged over all orders, an order
// with no n-grams contributing 0.
ChrfResult corpus_chrf(std::span<const std::string> hyps,
                       const std::vector<std::vector<std::string>>& ref_streams,
                       const ChrfParams& params, const ScoreContext& ctx = {});

}  // namespace mts

#endif  // MTSCORE_CORE_CHRF_HPP_
