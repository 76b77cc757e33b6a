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

#ifndef RECALL_FORGE_RECALL_H_
#define RECALL_FORGE_RECALL_H_

#include <optional>
#include <string_view>

#include "recall_forge/game.h"
#include "recall_forge/sequence_set.h"

namespace recall_forge {

// Player actions on the path from the root to the node, chance edges skipped.
// With a player given, only that player's actions are kept.
Sequence History(const GameStructure& structure, NodeId node,
                 std::optional<Player> player = std::nullopt);

enum class RecallClass { kPfr, kAlr, kNamNotAlr, kAbsentminded };

// "PFR", "ALR_not_PFR", "NAM_not_ALR", "ABSENTMINDED".
std::string_view RecallClassName(RecallClass recall);

// A player owning no nodes has perfect recall.
RecallClass ClassifyRecall(const GameStructure& structure, Player player);

bool IsAbsentminded(const GameStructure& structure, Player player);

}  // namespace recall_forge

#endif  // RECALL_FORGE_RECALL_H_
