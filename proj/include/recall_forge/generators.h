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

#ifndef RECALL_FORGE_GENERATORS_H_
#define RECALL_FORGE_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "recall_forge/game.h"
#include "recall_forge/sequence_set.h"

namespace recall_forge {

// I: Alice and Bob each have one infoset.
// II: Alice cannot tell die outcomes 2i and 2i+1 apart; Bob has one infoset.
// III: Alice as in II; Bob sees Alice's coin.
enum class PenniesVariant { kI, kII, kIII };

std::optional<PenniesVariant> ParsePenniesVariant(std::string_view name);

// Uniform die with n faces, then Alice, then Bob, both on the Max team.
// The team wins on an even face when the coins match and on an odd face
// when they differ. Requires n >= 1.
Game GenPennies(PenniesVariant variant, int n);

// n binary infosets I1..In with actions a1,b1,...; all single actions plus
// every pair x^i y^j with i < j.
SequenceSet GenLowerbound(int n);
// A one-player game whose Max histories are exactly GenLowerbound(n).
// Chance is uniform and payoffs are zero.
Game GenLowerboundGame(int n);

struct RandomGameParams {
  std::uint64_t seed = 0;
  int depth = 4;         // At most 8.
  int branching = 2;     // At most 3, at least 2.
  double merge_prob = 0.5;
  int players = 1;       // 1 or 2.
};

// Random tree whose player nodes are merged into infosets only among nodes
// of equal depth, arity and owner, so the result is never absentminded.
// Merge probability zero gives perfect recall.
Game GenRandom(const RandomGameParams& params);

}  // namespace recall_forge

#endif  // RECALL_FORGE_GENERATORS_H_
