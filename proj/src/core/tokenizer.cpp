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

#include "core/tokenizer.hpp"

#include <array>
#include <cstddef>

#include "core/unicode.hpp"

namespace mts {
namespace {

// The whitespace class of the reference scorer's collapse/split step.
bool ascii_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool ascii_digit(unsigned char c) { return c >= '0' && c <= '9'; }

// Characters padded with spaces unconditionally. The ranges deliberately
// exclude '.' ',' '-' (split contextually below) and the apostrophe, and
// cover only ASCII, so multi-byte UTF-8 sequences pass through untouched.
constexpr std::array<bool, 256> make_pad_table() {
  std::array<bool, 256> t{};
  auto mark = [&t](unsigned char lo, unsigned char hi) {
    for (int c = lo; c <= hi; ++c) t[static_cast<std::size_t>(c)] = true;
  };
  mark(' ', '&');
  mark('(', '+');
  mark(':', '@');
  mark('[', '`');
  mark('{', '~');
  t[static_cast<std::size_t>('/')] = true;
  return t;
}

constexpr std::array<bool, 256> kPadTable = make_pad_table();

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
}

std::string pad_punctuation(const std::string& s) {
  std::string out;
  out.reserve(s.size() * 2);
  for (unsigned char c : s) {
    if (kPadTable[c]) {
      out.push_back(' ');
      out.push_back(static_cast<char>(c));
      out.push_back(' ');
    } else {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

// Left-to-right non-overlapping rewriting of two-byte windows, matching the
// scorer's sequential regex substitutions: on a match both bytes are
// consumed, scanning resumes after them.
template <typename Match, typename Emit>
std::string rewrite_pairs(const std::string& s, Match match, Emit emit) {
  std::string out;
  out.reserve(s.size() + s.size() / 4);
  std::size_t i = 0;
  while (i < s.size()) {
    if (i + 1 < s.size() && match(static_cast<unsigned char>(s[i]),
                                  static_cast<unsigned char>(s[i + 1]))) {
      emit(out, s[i], s[i + 1]);
      i += 2;
    } else {
      out.push_back(s[i]);
      i += 1;
    }
  }
  return out;
}

Tokens split_ascii_ws(std::string_view s) {
  Tokens tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && ascii_space(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !ascii_space(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) tokens.emplace_back(s.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

const char* tokenizer_name(TokenizerKind kind) {
  switch (kind) {
    case TokenizerKind::ThirteenA:
      return "13a";
    case TokenizerKind::None:
      return "none";
  }
  return "13a";
}

std::optional<TokenizerKind> tokenizer_from_name(std::string_view name) {
  if (name == "13a") return TokenizerKind::ThirteenA;
  if (name == "none") return TokenizerKind::None;
  return std::nullopt;
}

std::string normalize_v13a(std::string_view text) {
  std::string s(text);
  replace_all(s, "<skipped>", "");
  replace_all(s, "-\n", "");
  replace_all(s, "\n", " ");
  if (s.find('&') != std::string::npos) {
    replace_all(s, "&quot;", "\"");
    replace_all(s, "&amp;", "&");
    replace_all(s, "&lt;", "<");
    replace_all(s, "&gt;", ">");
  }
  return s;
}

Tokens tokenize_13a(std::string_view text) {
  // The reference scorer wraps the segment in spaces before the rewrite
  // rules, which is visible for '.' and ',' at the segment edges.
  std::string s = " " + normalize_v13a(text) + " ";

  s = pad_punctuation(s);

  // Split '.' and ',' from a non-digit on the left: c1 c2 -> c1 SP c2 SP.
  s = rewrite_pairs(
      s,
      [](unsigned char a, unsigned char b) {
        return !ascii_digit(a) && (b == '.' || b == ',');
      },
      [](std::string& out, char a, char b) {
        out.push_back(a);
        out.push_back(' ');
        out.push_back(b);
        out.push_back(' ');
      });

  // Split '.' and ',' from a non-digit on the right: c1 c2 -> SP c1 SP c2.
  s = rewrite_pairs(
      s,
      [](unsigned char a, unsigned char b) {
        return (a == '.' || a == ',') && !ascii_digit(b);
      },
      [](std::string& out, char a, char b) {
        out.push_back(' ');
        out.push_back(a);
        out.push_back(' ');
        out.push_back(b);
      });

  // Split '-' from a digit on the left: c1 c2 -> c1 SP c2 SP.
  s = rewrite_pairs(
      s,
      [](unsigned char a, unsigned char b) {
        return ascii_digit(a) && b == '-';
      },
      [](std::string& out, char a, char b) {
        out.push_back(a);
        out.push_back(' ');
        out.push_back(b);
        out.push_back(' ');
      });

  return split_ascii_ws(s);
}

Tokens tokenize_none(std::string_view text) { return split_ascii_ws(text); }

Tokens tokenize(TokenizerKind kind, std::string_view text) {
  switch (kind) {
    case TokenizerKind::ThirteenA:
      return tokenize_13a(text);
    case TokenizerKind::None:
      return tokenize_none(text);
  }
  return tokenize_13a(text);
}

std::string fold_case(std::string_view text) { return lowercase(text); }

std::string join_tokens(const Tokens& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace mts
