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

#include "core/unicode.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>

#include "core/errors.hpp"

namespace mts {
namespace {

#include "core/unicode_tables.inc"

bool in_ranges(const char32_t (*ranges)[2], std::size_t n, char32_t cp) {
  std::size_t lo = 0, hi = n;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (cp < ranges[mid][0]) {
      hi = mid;
    } else if (cp > ranges[mid][1]) {
      lo = mid + 1;
    } else {
      return true;
    }
  }
  return false;
}

bool is_cased(char32_t cp) {
  return in_ranges(kCasedRanges, std::size(kCasedRanges), cp);
}

bool is_case_ignorable(char32_t cp) {
  return in_ranges(kCaseIgnorableRanges, std::size(kCaseIgnorableRanges), cp);
}

const LowerEntry* lower_entry(char32_t cp) {
  auto it = std::lower_bound(
      std::begin(kLowerTable), std::end(kLowerTable), cp,
      [](const LowerEntry& e, char32_t c) { return e.cp < c; });
  if (it != std::end(kLowerTable) && it->cp == cp) return it;
  return nullptr;
}

// Returns the decoded code point and advances i, or returns false at the
// first invalid sequence (leaving i at its start).
bool next_cp(std::string_view s, std::size_t& i, char32_t& out) {
  const auto* b = reinterpret_cast<const unsigned char*>(s.data());
  std::size_t n = s.size();
  unsigned char c = b[i];
  if (c < 0x80) {
    out = c;
    i += 1;
    return true;
  }
  if (c < 0xC2) return false;  // continuation byte or overlong lead
  if (c < 0xE0) {
    if (i + 1 >= n || (b[i + 1] & 0xC0) != 0x80) return false;
    out = (char32_t(c & 0x1F) << 6) | (b[i + 1] & 0x3F);
    i += 2;
    return true;
  }
  if (c < 0xF0) {
    if (i + 2 >= n || (b[i + 1] & 0xC0) != 0x80 || (b[i + 2] & 0xC0) != 0x80)
      return false;
    char32_t cp = (char32_t(c & 0x0F) << 12) | (char32_t(b[i + 1] & 0x3F) << 6) |
                  (b[i + 2] & 0x3F);
    if (cp < 0x800) return false;
    if (cp >= 0xD800 && cp <= 0xDFFF) return false;
    out = cp;
    i += 3;
    return true;
  }
  if (c < 0xF5) {
    if (i + 3 >= n || (b[i + 1] & 0xC0) != 0x80 || (b[i + 2] & 0xC0) != 0x80 ||
        (b[i + 3] & 0xC0) != 0x80)
      return false;
    char32_t cp = (char32_t(c & 0x07) << 18) | (char32_t(b[i + 1] & 0x3F) << 12) |
                  (char32_t(b[i + 2] & 0x3F) << 6) | (b[i + 3] & 0x3F);
    if (cp < 0x10000 || cp > 0x10FFFF) return false;
    out = cp;
    i += 4;
    return true;
  }
  return false;
}

constexpr char32_t kCapitalSigma = 0x03A3;
constexpr char32_t kSmallSigma = 0x03C3;
constexpr char32_t kFinalSigma = 0x03C2;

// U+03A3 lowers to final sigma when preceded by a cased letter (ignoring
// case-ignorable characters) and not followed by one.
bool sigma_is_final(const std::u32string& cps, std::size_t i) {
  bool preceded = false;
  for (std::size_t j = i; j > 0;) {
    --j;
    if (is_case_ignorable(cps[j])) continue;
    preceded = is_cased(cps[j]);
    break;
  }
  if (!preceded) return false;
  for (std::size_t k = i + 1; k < cps.size(); ++k) {
    if (!is_case_ignorable(cps[k])) return !is_cased(cps[k]);
  }
  return true;
}

}  // namespace

bool utf8_valid(std::string_view bytes) {
  std::size_t i = 0;
  char32_t cp;
  while (i < bytes.size()) {
    if (!next_cp(bytes, i, cp)) return false;
  }
  return true;
}

void utf8_check(std::string_view bytes) {
  std::size_t i = 0;
  char32_t cp;
  while (i < bytes.size()) {
    if (!next_cp(bytes, i, cp)) {
      throw Error(ErrorCode::InvalidUtf8,
                  "invalid UTF-8 sequence at byte offset " + std::to_string(i));
    }
  }
}

std::u32string utf8_decode(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  char32_t cp;
  while (i < bytes.size()) {
    if (!next_cp(bytes, i, cp)) {
      throw Error(ErrorCode::InvalidUtf8,
                  "invalid UTF-8 sequence at byte offset " + std::to_string(i));
    }
    out.push_back(cp);
  }
  return out;
}

std::string utf8_encode(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::string lowercase(std::string_view text) {
  std::u32string cps = utf8_decode(text);
  std::u32string lowered;
  lowered.reserve(cps.size());
  for (std::size_t i = 0; i < cps.size(); ++i) {
    char32_t cp = cps[i];
    if (cp == kCapitalSigma) {
      lowered.push_back(sigma_is_final(cps, i) ? kFinalSigma : kSmallSigma);
      continue;
    }
    const LowerEntry* e = lower_entry(cp);
    if (!e) {
      lowered.push_back(cp);
      continue;
    }
    for (char32_t to : e->to) {
      if (to != 0) lowered.push_back(to);
    }
  }
  return utf8_encode(lowered);
}

bool is_space(char32_t cp) {
  return in_ranges(kSpaceRanges, std::size(kSpaceRanges), cp);
}

bool is_letter(char32_t cp) {
  return in_ranges(kLetterRanges, std::size(kLetterRanges), cp);
}

}  // namespace mts
