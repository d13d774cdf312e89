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

#ifndef MTSCORE_CORE_ARCHIVE_HPP_
#define MTSCORE_CORE_ARCHIVE_HPP_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>

namespace mts {

// True when the URL/file name looks like a gzipped tarball.
bool is_tarball_name(std::string_view name);

// Decompresses a gzip (or plain zlib) stream. Throws Error(Extraction).
std::string gunzip(std::string_view compressed);

// Reads `wanted` members from an uncompressed ustar/GNU tar image. Member
// names are matched after stripping a leading "./". Returns the members
// found; callers decide whether missing ones are an error.
std::map<std::string, std::string> tar_members(
    std::string_view tar_bytes, const std::set<std::string>& wanted);

std::string read_file(const std::filesystem::path& path);

}  // namespace mts

#endif  // MTSCORE_CORE_ARCHIVE_HPP_
