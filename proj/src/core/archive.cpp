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

#include "core/archive.hpp"

#include <zlib.h>

#include <array>
#include <cstring>
#include <fstream>

#include "core/errors.hpp"

namespace mts {
namespace {

constexpr std::size_t kTarBlock = 512;

std::string_view strip_dot_slash(std::string_view name) {
  while (name.substr(0, 2) == "./") name.remove_prefix(2);
  return name;
}

// Octal field; may be space/NUL padded.
std::uint64_t parse_octal(const char* field, std::size_t len) {
  std::uint64_t value = 0;
  std::size_t i = 0;
  while (i < len && (field[i] == ' ' || field[i] == '\0')) ++i;
  for (; i < len && field[i] >= '0' && field[i] <= '7'; ++i)
    value = value * 8 + static_cast<std::uint64_t>(field[i] - '0');
  return value;
}

bool block_is_zero(const char* block) {
  for (std::size_t i = 0; i < kTarBlock; ++i)
    if (block[i] != '\0') return false;
  return true;
}

// "N key=value\n" records; we only care about the path override.
std::string pax_path_override(std::string_view data) {
  std::string path;
  std::size_t pos = 0;
  while (pos < data.size()) {
    std::size_t space = data.find(' ', pos);
    if (space == std::string_view::npos) break;
    std::uint64_t record_len =
        std::strtoull(std::string(data.substr(pos, space - pos)).c_str(),
                      nullptr, 10);
    if (record_len == 0 || pos + record_len > data.size()) break;
    std::string_view record = data.substr(space + 1, pos + record_len - space - 2);
    if (record.substr(0, 5) == "path=") path = std::string(record.substr(5));
    pos += record_len;
  }
  return path;
}

}  // namespace

bool is_tarball_name(std::string_view name) {
  auto ends_with = [&name](std::string_view suffix) {
    return name.size() >= suffix.size() &&
           name.substr(name.size() - suffix.size()) == suffix;
  };
  return ends_with(".tgz") || ends_with(".tar.gz") || ends_with(".tar");
}

std::string gunzip(std::string_view compressed) {
  if (compressed.size() >= 2 &&
      !(static_cast<unsigned char>(compressed[0]) == 0x1f &&
        static_cast<unsigned char>(compressed[1]) == 0x8b)) {
    // Not gzip; assume the caller handed us already-uncompressed data.
    return std::string(compressed);
  }
  z_stream zs;
  std::memset(&zs, 0, sizeof(zs));
  // 15+32: accept gzip or zlib headers.
  if (inflateInit2(&zs, 15 + 32) != Z_OK)
    throw Error(ErrorCode::Extraction, "zlib initialization failed");
  std::string out;
  std::array<char, 1 << 16> buffer;
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(compressed.data()));
  zs.avail_in = static_cast<uInt>(compressed.size());
  int rc = Z_OK;
  do {
    zs.next_out = reinterpret_cast<Bytef*>(buffer.data());
    zs.avail_out = static_cast<uInt>(buffer.size());
    rc = inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&zs);
      throw Error(ErrorCode::Extraction,
                  std::string("gzip decompression failed: ") +
                      (zs.msg ? zs.msg : "corrupt stream"));
    }
    out.append(buffer.data(), buffer.size() - zs.avail_out);
    // Concatenated gzip members: restart after each stream end.
    if (rc == Z_STREAM_END && zs.avail_in > 0) {
      if (inflateReset2(&zs, 15 + 32) != Z_OK) break;
      rc = Z_OK;
    }
  } while (rc != Z_STREAM_END && zs.avail_in > 0);
  inflateEnd(&zs);
  return out;
}

std::map<std::string, std::string> tar_members(
    std::string_view tar_bytes, const std::set<std::string>& wanted) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  std::string pending_longname;
  std::string pending_pax_path;
  while (pos + kTarBlock <= tar_bytes.size()) {
    const char* header = tar_bytes.data() + pos;
    if (block_is_zero(header)) break;  // end-of-archive marker
    char name_field[101] = {0};
    std::memcpy(name_field, header, 100);
    char prefix_field[156] = {0};
    std::memcpy(prefix_field, header + 345, 155);
    const std::uint64_t size = parse_octal(header + 124, 12);
    const char typeflag = header[156];
    pos += kTarBlock;
    const std::uint64_t padded = (size + kTarBlock - 1) / kTarBlock * kTarBlock;
    if (pos + size > tar_bytes.size())
      throw Error(ErrorCode::Extraction, "truncated tar archive");
    std::string_view data = tar_bytes.substr(pos, size);
    pos += padded;

    if (typeflag == 'L') {  // GNU long name for the next entry
      pending_longname = std::string(data);
      while (!pending_longname.empty() && pending_longname.back() == '\0')
        pending_longname.pop_back();
      continue;
    }
    if (typeflag == 'x' || typeflag == 'X') {
      pending_pax_path = pax_path_override(data);
      continue;
    }
    if (typeflag == 'g' || typeflag == 'K') continue;

    std::string name;
    if (!pending_pax_path.empty()) {
      name = pending_pax_path;
    } else if (!pending_longname.empty()) {
      name = pending_longname;
    } else {
      name = name_field;
      if (prefix_field[0] != '\0')
        name = std::string(prefix_field) + "/" + name;
    }
    pending_longname.clear();
    pending_pax_path.clear();

    if (typeflag != '0' && typeflag != '\0') continue;  // dirs, links, ...
    std::string key(strip_dot_slash(name));
    if (wanted.count(key)) out.emplace(std::move(key), std::string(data));
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad())
    throw Error(ErrorCode::Io, "error reading " + path.string());
  return data;
}

}  // namespace mts
