// Copyright 2026 The d2t Authors.
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

#ifndef D2T_UTIL_HASH_H_
#define D2T_UTIL_HASH_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace d2t {

std::uint64_t fnv1a64(std::string_view data);

// Lowercase hex SHA-1 of `data`.
std::string sha1_hex(std::string_view data);

// Hash git assigns to a blob with this content: sha1("blob <len>\0" + data).
std::string git_blob_hash(std::string_view data);

// git_blob_hash of a file's bytes. Throws IoError if unreadable.
std::string git_blob_hash_file(const std::filesystem::path &path);

}  // namespace d2t

#endif  // D2T_UTIL_HASH_H_
