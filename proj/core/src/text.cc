// Copyright 2026 The CMAB Lab Authors. All rights reserved.
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

#include "cmab/text.h"

#include <array>
#include <charconv>

#include "cmab/errors.h"

namespace cmab {
namespace {

template <typename T>
T ParseNumber(std::string_view text, std::string_view what,
              std::string_view kind) {
  const std::string_view trimmed = Trim(text);
  T value{};
  const char* begin = trimmed.data();
  const char* end = begin + trimmed.size();
  // from_chars rejects a leading '+'; accept it for hand-written files.
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (trimmed.empty() || ec != std::errc() || ptr != end) {
    throw InputError(std::string(what) + ": expected " + std::string(kind) +
                     ", got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string FormatDouble(double value) {
  std::array<char, 32> buffer;
  const auto [ptr, ec] =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), ptr);
}

double ParseDouble(std::string_view text, std::string_view what) {
  return ParseNumber<double>(text, what, "a real number");
}

std::int64_t ParseInt(std::string_view text, std::string_view what) {
  return ParseNumber<std::int64_t>(text, what, "an integer");
}

std::uint64_t ParseUint(std::string_view text, std::string_view what) {
  return ParseNumber<std::uint64_t>(text, what, "a non-negative integer");
}

std::string_view Trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::vector<std::string_view> Split(std::string_view text, char separator) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(separator, start);
    parts.push_back(Trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace cmab
