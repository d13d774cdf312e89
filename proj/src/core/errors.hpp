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

#ifndef MTSCORE_CORE_ERRORS_HPP_
#define MTSCORE_CORE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mts {

// Stable failure categories; the C API maps these 1:1 onto mts_errc.
enum class ErrorCode {
  InvalidArgument,
  LengthMismatch,
  EmptyCorpus,
  EmptyReference,
  InvalidUtf8,
  UnknownTestSet,
  UnknownLangpair,
  RefIndexOutOfRange,
  Network,
  ChecksumMismatch,
  Extraction,
  Io,
  SignatureParse,
  RegistryParse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mts

#endif  // MTSCORE_CORE_ERRORS_HPP_
