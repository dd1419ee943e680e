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

#ifndef CMAB_TOOLS_CLI_H_
#define CMAB_TOOLS_CLI_H_

#include <iosfwd>

namespace cmab::cli {

// Entry point of the cmab_lab tool. Returns the process exit status: 0 on
// success, 1 on a failed experiment, CLI11's usage codes on bad arguments.
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

}  // namespace cmab::cli

#endif  // CMAB_TOOLS_CLI_H_
