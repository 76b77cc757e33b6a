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

#ifndef RECALL_FORGE_SHUFFLE_H_
#define RECALL_FORGE_SHUFFLE_H_

#include <map>
#include <optional>

#include "recall_forge/game.h"
#include "recall_forge/sequence_set.h"

namespace recall_forge {

struct SalrResult {
  bool has_salr = false;
  // Set when has_salr: an ALR set of reorderings of the input sequences.
  std::optional<SequenceSet> witness;
  // Input sequence to its reordering in the witness. Inputs that are
  // reorderings of each other share one witness sequence.
  std::map<Sequence, Sequence> permutation_map;
  // Set when !has_salr: a connected subproblem no infoset covers.
  std::optional<SequenceSet> failing_subset;
};

// Reorders every sequence so that the result is ALR, or reports that no
// reordering exists.
SalrResult SalrWitness(const SequenceSet& set);

// Tries every combination of per-sequence permutations. Throws
// SizeLimitExceeded when a sequence is longer than max_length or the number
// of combinations exceeds max_combinations.
bool SalrBruteforceOracle(const SequenceSet& set, std::size_t max_length = 6,
                          std::size_t max_combinations = 5'000'000);

struct ShuffleResult {
  SalrResult salr;
  // Realizes the witness. Set when has_salr.
  std::optional<GameStructure> structure;
};

// Shuffles the histories of Max.
ShuffleResult ShuffleStructure(const GameStructure& structure);

}  // namespace recall_forge

#endif  // RECALL_FORGE_SHUFFLE_H_
