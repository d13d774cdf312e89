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

#include "core/chrf.hpp"

#include <cstdint>
#include <unordered_map>

#include "core/errors.hpp"
#include "core/unicode.hpp"
#include "core/version.hpp"

namespace mts {
namespace {

struct OrderCounts {
  std::int64_t matched = 0;
  std::int64_t hyp_total = 0;
  std::int64_t ref_total = 0;
};

using SegmentCounts = std::vector<OrderCounts>;  // one entry per order

std::u32string prepare_chars(std::string_view line, const ChrfParams& params,
                             const char* role, std::size_t line_no) {
  if (!utf8_valid(line))
    throw Error(ErrorCode::InvalidUtf8,
                std::string(role) + " line " + std::to_string(line_no + 1) +
                    " is not valid UTF-8");
  std::u32string cps =
      utf8_decode(params.lowercase ? fold_case(line) : std::string(line));
  if (!params.remove_whitespace) return cps;
  std::u32string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (!is_space(cp)) out.push_back(cp);
  }
  return out;
}

SegmentCounts segment_counts(const std::u32string& hyp,
                             const std::u32string& ref, int order) {
  SegmentCounts counts(static_cast<std::size_t>(order));
  for (int n = 1; n <= order; ++n) {
    OrderCounts& c = counts[static_cast<std::size_t>(n - 1)];
    if (static_cast<std::size_t>(n) <= hyp.size())
      c.hyp_total = static_cast<std::int64_t>(hyp.size() - n + 1);
    if (static_cast<std::size_t>(n) <= ref.size())
      c.ref_total = static_cast<std::int64_t>(ref.size() - n + 1);
    if (c.hyp_total == 0 || c.ref_total == 0) continue;
    std::unordered_map<std::u32string, std::int64_t> ref_ngrams;
    for (std::size_t i = 0; i + n <= ref.size(); ++i)
      ++ref_ngrams[ref.substr(i, static_cast<std::size_t>(n))];
    std::unordered_map<std::u32string, std::int64_t> hyp_ngrams;
    for (std::size_t i = 0; i + n <= hyp.size(); ++i)
      ++hyp_ngrams[hyp.substr(i, static_cast<std::size_t>(n))];
    for (const auto& [gram, count] : hyp_ngrams) {
      auto it = ref_ngrams.find(gram);
      if (it != ref_ngrams.end())
        c.matched += std::min(count, it->second);
    }
  }
  return counts;
}

// Averaged precision/recall with empty orders contributing 0, then F-beta.
double fscore(const SegmentCounts& counts, double beta) {
  double precision = 0.0;
  double recall = 0.0;
  for (const OrderCounts& c : counts) {
    if (c.hyp_total > 0)
      precision += static_cast<double>(c.matched) /
                   static_cast<double>(c.hyp_total);
    if (c.ref_total > 0)
      recall += static_cast<double>(c.matched) /
                static_cast<double>(c.ref_total);
  }
  precision /= static_cast<double>(counts.size());
  recall /= static_cast<double>(counts.size());
  if (precision + recall == 0.0) return 0.0;
  const double b2 = beta * beta;
  return (1.0 + b2) * precision * recall / (b2 * precision + recall);
}

Signature make_chrf_signature(const ChrfParams& params, std::size_t numrefs,
                              const ScoreContext& ctx) {
  Signature sig;
  sig.metric = "chrF";
  sig.case_name = params.lowercase ? "lc" : "mixed";
  if (!ctx.langpair.empty()) sig.langpair = ctx.langpair;
  sig.numrefs = static_cast<int>(numrefs);
  sig.char_order = params.char_order;
  sig.beta = params.beta;
  sig.whitespace_kept = !params.remove_whitespace;
  if (!ctx.test_set.empty()) sig.test_set = ctx.test_set;
  sig.version = kVersion;
  return sig;
}

}  // namespace

void ChrfParams::validate() const {
  if (char_order < 1)
    throw Error(ErrorCode::InvalidArgument, "char_order must be >= 1");
  if (!(beta > 0))
    throw Error(ErrorCode::InvalidArgument, "beta must be > 0");
}

ChrfResult corpus_chrf(std::span<const std::string> hyps,
                       const std::vector<std::vector<std::string>>& ref_streams,
                       const ChrfParams& params, const ScoreContext& ctx) {
  params.validate();
  if (hyps.empty())
    throw Error(ErrorCode::EmptyCorpus, "hypothesis corpus is empty");
  if (ref_streams.empty())
    throw Error(ErrorCode::InvalidArgument,
                "at least one reference stream is required");
  for (std::size_t s = 0; s < ref_streams.size(); ++s) {
    if (ref_streams[s].size() != hyps.size())
      throw Error(ErrorCode::LengthMismatch,
                  "reference stream " + std::to_string(s) + " has " +
                      std::to_string(ref_streams[s].size()) +
                      " segments but the hypothesis has " +
                      std::to_string(hyps.size()));
  }

  ChrfResult result;
  result.char_order = params.char_order;
  result.beta = params.beta;
  result.signature = make_chrf_signature(params, ref_streams.size(), ctx);

  SegmentCounts corpus(static_cast<std::size_t>(params.char_order));
  bool any_hyp_chars = false;
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    std::u32string hyp = prepare_chars(hyps[i], params, "hypothesis", i);
    if (!hyp.empty()) any_hyp_chars = true;
    // With several references, keep the counts of the one scoring best for
    // this segment.
    SegmentCounts best;
    double best_f = -1.0;
    for (const auto& stream : ref_streams) {
      std::u32string ref = prepare_chars(stream[i], params, "reference", i);
      SegmentCounts counts = segment_counts(hyp, ref, params.char_order);
      double f = fscore(counts, params.beta);
      if (f > best_f) {
        best_f = f;
        best = std::move(counts);
      }
    }
    for (std::size_t n = 0; n < corpus.size(); ++n) {
      corpus[n].matched += best[n].matched;
      corpus[n].hyp_total += best[n].hyp_total;
      corpus[n].ref_total += best[n].ref_total;
    }
  }

  result.score = 100.0 * fscore(corpus, params.beta);
  if (!any_hyp_chars) {
    result.diagnostic =
        "every hypothesis segment is empty after preprocessing; score is 0";
  }
  return result;
}

}  // namespace mts
