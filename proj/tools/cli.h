// Copyright 2026 The RecallForge Authors. All rights reserved.
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

#ifndef RECALL_FORGE_TOOLS_CLI_H_
#define RECALL_FORGE_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace recall_forge {

// Exit codes.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;     // Bad flags, unreadable or invalid input.
constexpr int kExitNegative = 2;  // The question has a negative answer.
constexpr int kExitTooLarge = 3;  // A size guard tripped.

// Runs one command. args excludes the program name. A FILE argument of "-"
// (the default) reads `in`.
int CliMain(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace recall_forge

#endif  // RECALL_FORGE_TOOLS_CLI_H_
