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

#include "core/signature.hpp"

#include <cstdio>
#include <cstdlib>
#include <set>
#include <vector>

#include "core/errors.hpp"

namespace mts {
namespace {

[[noreturn]] void fail(const std::string& message) {
  throw Error(ErrorCode::SignatureParse, "signature: " + message);
}

// Canonical beta rendering: shortest decimal form that parses back to the
// same double ("2", not "2.0"), so round-trips are byte-identical.
std::string render_beta(double beta) {
  char buf[40];
  for (int precision = 6; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, beta);
    if (std::strtod(buf, nullptr) == beta) break;
  }
  return buf;
}

void check_value(std::string_view key, std::string_view value) {
  if (value.empty()) fail("empty value for key '" + std::string(key) + "'");
  if (value.find('+') != std::string_view::npos)
    fail("value for key '" + std::string(key) + "' contains '+'");
}

int parse_positive_int(std::string_view key, const std::string& value) {
  char* end = nullptr;
  long v = std::strtol(value.c_str(), &end, 10);
  if (end != value.c_str() + value.size() || v < 1)
    fail("key '" + std::string(key) + "' needs a positive integer, got '" +
         value + "'");
  return static_cast<int>(v);
}

double parse_positive_real(std::string_view key, const std::string& value) {
  char* end = nullptr;
  double v = std::strtod(value.c_str(), &end);
  if (end != value.c_str() + value.size() || !(v > 0))
    fail("key '" + std::string(key) + "' needs a positive number, got '" +
         value + "'");
  return v;
}

}  // namespace

std::string build_signature(const Signature& sig, bool short_form) {
  if (sig.numrefs < 1)
    throw Error(ErrorCode::InvalidArgument, "signature: numrefs must be >= 1");
  auto key = [short_form](const char* s, const char* l) {
    return std::string(short_form ? s : l);
  };
  std::string out = sig.metric;
  auto add = [&out](const std::string& k, const std::string& v) {
    out += '+';
    out += k;
    out += '.';
    out += v;
  };
  add(key("c", "case"), sig.case_name);
  if (sig.langpair) add(key("l", "lang"), *sig.langpair);
  add(key("#", "numrefs"), std::to_string(sig.numrefs));
  if (sig.smoothing) add(key("s", "smooth"), *sig.smoothing);
  if (sig.char_order) add(key("o", "order"), std::to_string(*sig.char_order));
  if (sig.beta) add(key("b", "beta"), render_beta(*sig.beta));
  if (sig.whitespace_kept)
    add(key("ws", "whitespace"), *sig.whitespace_kept ? "yes" : "no");
  if (sig.test_set) add(key("t", "test"), *sig.test_set);
  if (sig.tokenizer) add(key("tok", "tok"), *sig.tokenizer);
  add(key("v", "version"), sig.version);
  return out;
}

Signature parse_signature(std::string_view text) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t plus = text.find('+', start);
    if (plus == std::string_view::npos) {
      fields.emplace_back(text.substr(start));
      break;
    }
    fields.emplace_back(text.substr(start, plus - start));
    start = plus + 1;
  }
  if (fields.empty() || fields.front().empty()) fail("missing metric name");

  Signature sig;
  sig.metric = fields.front();
  if (sig.metric != "BLEU" && sig.metric != "chrF")
    fail("unknown metric '" + sig.metric + "'");

  std::set<std::string> seen;
  for (std::size_t i = 1; i < fields.size(); ++i) {
    const std::string& field = fields[i];
    std::size_t dot = field.find('.');  // values keep any later dots
    if (dot == std::string::npos || dot == 0)
      fail("malformed entry '" + field + "' (expected KEY.VALUE)");
    std::string key = field.substr(0, dot);
    std::string value = field.substr(dot + 1);
    check_value(key, value);

    std::string canon;
    if (key == "c" || key == "case") canon = "case";
    else if (key == "l" || key == "lang") canon = "lang";
    else if (key == "#" || key == "numrefs") canon = "numrefs";
    else if (key == "s" || key == "smooth") canon = "smooth";
    else if (key == "o" || key == "order") canon = "order";
    else if (key == "b" || key == "beta") canon = "beta";
    else if (key == "ws" || key == "whitespace") canon = "whitespace";
    else if (key == "t" || key == "test") canon = "test";
    else if (key == "tok") canon = "tok";
    else if (key == "v" || key == "version") canon = "version";
    else fail("unknown key '" + key + "'");

    if (!seen.insert(canon).second) fail("duplicate key '" + key + "'");

    if (canon == "case") {
      if (value != "mixed" && value != "lc")
        fail("case must be 'mixed' or 'lc', got '" + value + "'");
      sig.case_name = value;
    } else if (canon == "lang") {
      sig.langpair = value;
    } else if (canon == "numrefs") {
      sig.numrefs = parse_positive_int(key, value);
    } else if (canon == "smooth") {
      if (value != "exp" && value != "floor" && value != "none")
        fail("smooth must be exp|floor|none, got '" + value + "'");
      sig.smoothing = value;
    } else if (canon == "order") {
      sig.char_order = parse_positive_int(key, value);
    } else if (canon == "beta") {
      sig.beta = parse_positive_real(key, value);
    } else if (canon == "whitespace") {
      if (value != "yes" && value != "no")
        fail("whitespace must be yes|no, got '" + value + "'");
      sig.whitespace_kept = (value == "yes");
    } else if (canon == "test") {
      sig.test_set = value;
    } else if (canon == "tok") {
      if (value != "13a" && value != "none")
        fail("tok must be 13a|none, got '" + value + "'");
      sig.tokenizer = value;
    } else if (canon == "version") {
      sig.version = value;
    }
  }

  for (const char* required : {"case", "numrefs", "version"}) {
    if (!seen.count(required)) fail(std::string("missing required key '") + required + "'");
  }
  if (sig.metric == "BLEU") {
    if (!sig.smoothing) fail("missing required key 's/smooth'");
    if (!sig.tokenizer) fail("missing required key 'tok'");
    if (sig.char_order || sig.beta || sig.whitespace_kept)
      fail("chrF keys are not valid in a BLEU signature");
  } else {
    if (!sig.char_order) fail("missing required key 'o/order'");
    if (!sig.beta) fail("missing required key 'b/beta'");
    if (!sig.whitespace_kept) fail("missing required key 'ws/whitespace'");
    if (sig.smoothing || sig.tokenizer)
      fail("BLEU keys are not valid in a chrF signature");
  }
  return sig;
}

}  // namespace mts
