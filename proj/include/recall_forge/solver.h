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

#ifndef RECALL_FORGE_SOLVER_H_
#define RECALL_FORGE_SOLVER_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "recall_forge/game.h"

namespace recall_forge {

// One action per infoset, indexed by InfosetId. Entries for infosets that
// Max does not own or that label no node are ignored by evaluation.
using PureStrategy = std::vector<ActionId>;

struct Solution {
  Rational value;
  PureStrategy strategy;
};

// Every infoset set to its first action.
PureStrategy FirstActionStrategy(const Alphabet& alphabet);

// Expected payoff of a pure strategy in a one-player game.
Rational EvaluatePure(const Game& game, const PureStrategy& strategy);

// Guard on the number of pure strategies: RECALL_FORGE_MAX_PURE when set,
// otherwise 2^20.
std::size_t MaxPureStrategies();

// Exhaustive search over pure strategies of a one-player game. Ties go to
// the lexicographically smallest strategy, infosets in file order. Throws
// SizeLimitExceeded above the limit.
Solution SolveBruteforce(const Game& game,
                         std::optional<std::size_t> limit = std::nullopt);
// Single-threaded reference for SolveBruteforce.
Solution SolveBruteforceSerial(const Game& game,
                               std::optional<std::size_t> limit = std::nullopt);

struct Refinement {
  GameStructure structure;
  // Refined infoset to the infoset it was split from.
  std::vector<InfosetId> original_of;
};

// Splits every Max infoset by Max's full history. Node ids are preserved.
Refinement RefineAlr(const GameStructure& structure);

// Optimal pure strategy of a one-player game whose Max recall is PFR or ALR.
Solution SolveAlr(const Game& game);

enum class SolveMethod { kAuto, kBruteforce, kSpan };

std::optional<SolveMethod> ParseSolveMethod(std::string_view name);

// kAuto dispatches on the recall class. kSpan always goes through the
// minimal span and maps the strategy back by infoset identity.
Solution Solve(const Game& game, SolveMethod method = SolveMethod::kAuto);

}  // namespace recall_forge

#endif  // RECALL_FORGE_SOLVER_H_
