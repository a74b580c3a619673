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

#ifndef D2T_UTIL_IO_H_
#define D2T_UTIL_IO_H_

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nlohmann/json.hpp"

namespace d2t {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// Whole-file helpers. Both throw IoError on failure.
std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, std::string_view content);

// Parses one JSON value per non-blank line. A bad line raises ParseError
// with its 1-based line number.
std::vector<Json> read_jsonl(const std::filesystem::path &path);

// Streams records without materializing the whole file.
void for_each_jsonl(const std::filesystem::path &path,
                    const std::function<void(const Json &, std::size_t line)> &fn);

// Compact one-record-per-line dump, trailing newline included.
template <typename JsonT>
std::string to_jsonl(const std::vector<JsonT> &records) {
  std::string out;
  for (const auto &r : records) {
    out += r.dump();
    out.push_back('\n');
  }
  return out;
}

}  // namespace d2t

#endif  // D2T_UTIL_IO_H_
