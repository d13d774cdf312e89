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

#include "core/sgml.hpp"

#include "core/errors.hpp"

namespace mts {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<std::string> extract_segments(std::string_view sgml_text) {
  std::vector<std::string> segments;
  std::size_t pos = 0;
  while (pos <= sgml_text.size()) {
    std::size_t eol = sgml_text.find('\n', pos);
    std::string_view line =
        eol == std::string_view::npos
            ? sgml_text.substr(pos)
            : sgml_text.substr(pos, eol - pos);
    line = trim(line);
    if (line.substr(0, 4) == "<seg" &&
        (line.size() == 4 || line[4] == ' ' || line[4] == '>' ||
         line[4] == '\t')) {
      std::size_t gt = line.find('>');
      if (gt != std::string_view::npos) {
        std::size_t close = line.find("</seg>", gt + 1);
        if (close != std::string_view::npos) {
          segments.emplace_back(trim(line.substr(gt + 1, close - gt - 1)));
        }
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  if (segments.empty())
    throw Error(ErrorCode::Extraction,
                "no <seg> elements found; not a test-set SGML file?");
  return segments;
}

}  // namespace mts
