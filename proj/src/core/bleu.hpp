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

#ifndef MTSCORE_CORE_BLEU_HPP_
#define MTSCORE_CORE_BLEU_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/signature.hpp"
#include "core/tokenizer.hpp"

namespace mts {

enum class Smoothing { Exp, Floor, None };

const char* smoothing_name(Smoothing s);

// Multi-reference length selection for the brevity penalty.
enum class RefLenPolicy {
  Closest,   // per segment, the reference length nearest the hypothesis
             // length, ties to the shorter (the original best-match length)
  Shortest,  // per segment, the minimum reference length
};

// Every knob that changes a BLEU score.
struct BleuParams {
  int max_order = 4;
  Smoothing smoothing = Smoothing::Exp;
  double smooth_floor = 0.1;  // pseudo-count used by Smoothing::Floor
  RefLenPolicy ref_len_policy = RefLenPolicy::Closest;
  bool lowercase = false;
  TokenizerKind tokenizer = TokenizerKind::ThirteenA;

  void validate() const;  // throws Error(InvalidArgument)
};

// Additive sufficient statistics at corpus level. correct[n-1]/total[n-1]
// hold the clipped match and hypothesis n-gram counts for order n.
struct CorpusStats {
  std::vector<std::int64_t> correct;
  std::vector<std::int64_t> total;
  std::int64_t hyp_len = 0;
  std::int64_t ref_len = 0;

  explicit CorpusStats(int max_order)
      : correct(static_cast<std::size_t>(max_order), 0),
        total(static_cast<std::size_t>(max_order), 0) {}

  int max_order() const { return static_cast<int>(correct.size()); }
  void add(const CorpusStats& other);  // throws on order mismatch
  bool operator==(const CorpusStats&) const = default;
};

// Occurrence counts for every n-gram of orders 1..max_order. Keys are
// space-joined tokens, which is unambiguous because tokens never contain
// whitespace.
std::unordered_map<std::string, std::int64_t> extract_ngrams(
    const Tokens& segment, int max_order);

CorpusStats segment_stats(const Tokens& hyp, const std::vector<Tokens>& refs,
                          const BleuParams& params);

CorpusStats aggregate(std::span<const CorpusStats> stats_list);

// Post-smoothing precisions in [0,1]. Orders with total == 0 (hypothesis
// shorter than n everywhere) are left at 0 and excluded from the geometric
// mean by the caller. Throws Error(EmptyCorpus) when total[0] == 0.
std::vector<double> smooth_precisions(const CorpusStats& stats,
                                      Smoothing scheme, double floor_value);

// 1 when hyp_len >= ref_len, exp(1 - r/c) otherwise. Throws on zero lengths.
double brevity_penalty(std::int64_t hyp_len, std::int64_t ref_len);

struct BleuResult {
  double score = 0.0;            // 0..100
  std::vector<double> precisions;  // post-smoothing, [0,1]
  double brevity_penalty = 0.0;
  double ratio = 0.0;  // hyp_len / ref_len
  CorpusStats stats;
  Signature signature;
  std::string diagnostic;  // non-empty for degenerate warning cases

  explicit BleuResult(int max_order)
      : precisions(static_cast<std::size_t>(max_order), 0.0),
        stats(max_order) {}
};

// Optional reporting context recorded in the result signature.
struct ScoreContext {
  std::string langpair;  // empty = unknown
  std::string test_set;  // empty = user-supplied references
};

// Corpus-level BLEU over raw (untokenized) segment streams. Each reference
// stream must have exactly one line per hypothesis line.
BleuResult corpus_bleu(std::span<const std::string> hyps,
                       const std::vector<std::vector<std::string>>& ref_streams,
                       const BleuParams& params, const ScoreContext& ctx = {});

}  // namespace mts

#endif  // MTSCORE_CORE_BLEU_HPP_
