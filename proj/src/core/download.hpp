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

#ifndef MTSCORE_CORE_DOWNLOAD_HPP_
#define MTSCORE_CORE_DOWNLOAD_HPP_

#include <filesystem>
#include <string>

namespace mts {

// Fetches a URL into dest. https:// and http:// use a GET honoring the
// standard https_proxy/HTTPS_PROXY environment variable; file:// and bare
// filesystem paths are copied, which is how private registry entries and
// the offline tests work. Throws Error(Network) or Error(Io).
void download_to(const std::string& url, const std::filesystem::path& dest);

// Last path component of a URL, with query string removed.
std::string url_basename(const std::string& url);

std::string md5_hex(std::string_view bytes);
std::string md5_file_hex(const std::filesystem::path& path);

}  // namespace mts

#endif  // MTSCORE_CORE_DOWNLOAD_HPP_
