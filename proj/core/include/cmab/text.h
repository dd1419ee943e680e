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

// Locale-independent number formatting and parsing helpers.

#ifndef CMAB_TEXT_H_
#define CMAB_TEXT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cmab {

// Shortest decimal representation that parses back to the same double.
std::string FormatDouble(double value);

// Whole-string parses; throw InputError naming `what` on failure.
double ParseDouble(std::string_view text, std::string_view what);
std::int64_t ParseInt(std::string_view text, std::string_view what);
std::uint64_t ParseUint(std::string_view text, std::string_view what);

std::string_view Trim(std::string_view text);
std::vector<std::string_view> Split(std::string_view text, char separator);

}  // namespace cmab

#endif  // CMAB_TEXT_H_
