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

#ifndef MTSCORE_CORE_VERSION_HPP_
#define MTSCORE_CORE_VERSION_HPP_

namespace mts {

// Recorded in every signature's v/version entry; bump on any change to the
// signature grammar or scoring behavior.
inline constexpr const char* kVersion = "1.0.0";

}  // namespace mts

#endif  // MTSCORE_CORE_VERSION_HPP_
