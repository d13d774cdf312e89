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

#include "core/bleu.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "core/errors.hpp"
#include "core/unicode.hpp"
#include "core/version.hpp"

namespace mts {

const char* smoothing_name(Smoothing s) {
  switch (s) {
    case Smoothing::Exp:
      return "exp";
    case Smoothing::Floor:
      return "floor";
    case Smoothing::None:
      return "none";
  }
  return "exp";
}

void BleuParams::validate() const {
  if (max_order < 1)
    throw Error(ErrorCode::InvalidArgument, "max_order must be >= 1");
  if (smoothing == Smoothing::Floor && !(smooth_floor > 0))
    throw Error(ErrorCode::InvalidArgument, "smoothing floor must be > 0");
}

void CorpusStats::add(const CorpusStats& other) {
  if (other.max_order() != max_order())
    throw Error(ErrorCode::InvalidArgument,
                "cannot aggregate stats with different max_order (" +
                    std::to_string(max_order()) + " vs " +
                    std::to_string(other.max_order()) + ")");
  for (std::size_t n = 0; n < correct.size(); ++n) {
    correct[n] += other.correct[n];
    total[n] += other.total[n];
  }
  hyp_len += other.hyp_len;
  ref_len += other.ref_len;
}

std::unordered_map<std::string, std::int64_t> extract_ngrams(
    const Tokens& segment, int max_order) {
  if (max_order < 1)
    throw Error(ErrorCode::InvalidArgument, "max_order must be >= 1");
  std::unordered_map<std::string, std::int64_t> counts;
  const std::size_t len = segment.size();
  for (std::size_t start = 0; start < len; ++start) {
    std::string key;
    for (std::size_t n = 1; n <= static_cast<std::size_t>(max_order); ++n) {
      if (start + n > len) break;
      if (n > 1) key += ' ';
      key += segment[start + n - 1];
      ++counts[key];
    }
  }
  return counts;
}

CorpusStats segment_stats(const Tokens& hyp, const std::vector<Tokens>& refs,
                          const BleuParams& params) {
  params.validate();
  if (refs.empty())
    throw Error(ErrorCode::InvalidArgument,
                "segment needs at least one reference");

  const int order = params.max_order;
  CorpusStats stats(order);
  stats.hyp_len = static_cast<std::int64_t>(hyp.size());

  // Selected reference length per policy.
  std::int64_t selected = -1;
  std::int64_t selected_diff = std::numeric_limits<std::int64_t>::max();
  for (const Tokens& ref : refs) {
    auto len = static_cast<std::int64_t>(ref.size());
    if (params.ref_len_policy == RefLenPolicy::Shortest) {
      if (selected < 0 || len < selected) selected = len;
    } else {
      std::int64_t diff = std::llabs(len - stats.hyp_len);
      if (diff < selected_diff || (diff == selected_diff && len < selected)) {
        selected_diff = diff;
        selected = len;
      }
    }
  }
  stats.ref_len = selected;

  for (int n = 1; n <= order; ++n) {
    stats.total[n - 1] =
        std::max<std::int64_t>(0, stats.hyp_len - (n - 1));
  }

  auto hyp_ngrams = extract_ngrams(hyp, order);
  if (hyp_ngrams.empty()) return stats;

  // Clip each hypothesis n-gram type at its best count over all references.
  std::unordered_map<std::string, std::int64_t> clip;
  for (const Tokens& ref : refs) {
    auto ref_ngrams = extract_ngrams(ref, order);
    for (const auto& [gram, count] : ref_ngrams) {
      auto it = clip.find(gram);
      if (it == clip.end()) {
        clip.emplace(gram, count);
      } else {
        it->second = std::max(it->second, count);
      }
    }
  }
  for (const auto& [gram, count] : hyp_ngrams) {
    auto it = clip.find(gram);
    if (it == clip.end()) continue;
    auto n = static_cast<std::size_t>(
        std::count(gram.begin(), gram.end(), ' '));
    stats.correct[n] += std::min(count, it->second);
  }
  return stats;
}

CorpusStats aggregate(std::span<const CorpusStats> stats_list) {
  if (stats_list.empty())
    throw Error(ErrorCode::InvalidArgument, "nothing to aggregate");
  CorpusStats out(stats_list.front().max_order());
  for (const CorpusStats& s : stats_list) out.add(s);
  return out;
}

std::vector<double> smooth_precisions(const CorpusStats& stats,
                                      Smoothing scheme, double floor_value) {
  if (stats.total.empty() || stats.total[0] == 0)
    throw Error(ErrorCode::EmptyCorpus,
                "cannot compute precisions for an empty hypothesis corpus");
  std::vector<double> precisions(stats.total.size(), 0.0);
  double smooth_k = 1.0;
  for (std::size_t n = 0; n < stats.total.size(); ++n) {
    if (stats.total[n] == 0) continue;  // order excluded from the mean
    const auto total = static_cast<double>(stats.total[n]);
    if (stats.correct[n] == 0) {
      switch (scheme) {
        case Smoothing::Exp:
          smooth_k *= 2.0;
          precisions[n] = 1.0 / (smooth_k * total);
          break;
        case Smoothing::Floor:
          precisions[n] = floor_value / total;
          break;
        case Smoothing::None:
          precisions[n] = 0.0;
          break;
      }
    } else {
      double correct = static_cast<double>(stats.correct[n]);
      if (scheme == Smoothing::Floor)
        correct = std::max(correct, floor_value);
      precisions[n] = correct / total;
    }
  }
  return precisions;
}

double brevity_penalty(std::int64_t hyp_len, std::int64_t ref_len) {
  if (hyp_len <= 0)
    throw Error(ErrorCode::EmptyCorpus,
                "brevity penalty undefined for an empty hypothesis");
  if (ref_len <= 0)
    throw Error(ErrorCode::EmptyReference,
                "brevity penalty undefined for an empty reference");
  if (hyp_len >= ref_len) return 1.0;
  return std::exp(1.0 - static_cast<double>(ref_len) /
                            static_cast<double>(hyp_len));
}

namespace {

Signature make_bleu_signature(const BleuParams& params, std::size_t numrefs,
                              const ScoreContext& ctx) {
  Signature sig;
  sig.metric = "BLEU";
  sig.case_name = params.lowercase ? "lc" : "mixed";
  if (!ctx.langpair.empty()) sig.langpair = ctx.langpair;
  sig.numrefs = static_cast<int>(numrefs);
  sig.smoothing = smoothing_name(params.smoothing);
  sig.tokenizer = tokenizer_name(params.tokenizer);
  if (!ctx.test_set.empty()) sig.test_set = ctx.test_set;
  sig.version = kVersion;
  return sig;
}

Tokens prepare(std::string_view line, const BleuParams& params,
               const char* role, std::size_t line_no) {
  if (!utf8_valid(line))
    throw Error(ErrorCode::InvalidUtf8,
                std::string(role) + " line " + std::to_string(line_no + 1) +
                    " is not valid UTF-8");
  if (params.lowercase) return tokenize(params.tokenizer, fold_case(line));
  return tokenize(params.tokenizer, line);
}

}  // namespace

BleuResult corpus_bleu(std::span<const std::string> hyps,
                       const std::vector<std::vector<std::string>>& ref_streams,
                       const BleuParams& params, const ScoreContext& ctx) {
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

  BleuResult result(params.max_order);
  result.signature = make_bleu_signature(params, ref_streams.size(), ctx);

  for (std::size_t i = 0; i < hyps.size(); ++i) {
    Tokens hyp = prepare(hyps[i], params, "hypothesis", i);
    std::vector<Tokens> refs;
    refs.reserve(ref_streams.size());
    for (const auto& stream : ref_streams)
      refs.push_back(prepare(stream[i], params, "reference", i));
    result.stats.add(segment_stats(hyp, refs, params));
  }

  const CorpusStats& stats = result.stats;
  if (stats.hyp_len == 0) {
    // Scoreable by convention, but meaningless; flag it instead of throwing.
    result.score = 0.0;
    result.brevity_penalty = 0.0;
    result.ratio = 0.0;
    result.diagnostic =
        "every hypothesis segment tokenized to nothing; score is 0";
    return result;
  }
  if (stats.ref_len == 0)
    throw Error(ErrorCode::EmptyReference,
                "every reference segment tokenized to nothing");

  result.precisions =
      smooth_precisions(stats, params.smoothing, params.smooth_floor);
  result.brevity_penalty = brevity_penalty(stats.hyp_len, stats.ref_len);
  result.ratio = static_cast<double>(stats.hyp_len) /
                 static_cast<double>(stats.ref_len);

  double log_sum = 0.0;
  int effective_orders = 0;
  bool zero_precision = false;
  for (std::size_t n = 0; n < result.precisions.size(); ++n) {
    if (stats.total[n] == 0) continue;  // shorter than n everywhere
    ++effective_orders;
    if (result.precisions[n] <= 0.0) {
      zero_precision = true;
    } else {
      log_sum += std::log(result.precisions[n]);
    }
  }
  if (zero_precision || effective_orders == 0) {
    result.score = 0.0;
  } else {
    result.score = 100.0 * result.brevity_penalty *
                   std::exp(log_sum / effective_orders);
  }
  return result;
}

}  // namespace mts
