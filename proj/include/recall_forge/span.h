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

#ifndef RECALL_FORGE_SPAN_H_
#define RECALL_FORGE_SPAN_H_

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "recall_forge/game.h"
#include "recall_forge/sequence_set.h"

namespace recall_forge {

// Evidence that an ALR set spans another: every original monomial equals,
// on the strategy polytope, the sum of the monomials of its generators.
// All coefficients are one.
struct SpanCertificate {
  SequenceSet original;
  SequenceSet span;
  std::map<Sequence, std::vector<Sequence>> combinations;
};

struct SpanStats {
  std::size_t calls = 0;   // Recursive invocations, memo hits included.
  std::size_t states = 0;  // Distinct subproblems solved.
};

// All sequences that pick one action from each infoset, in the given order.
SequenceSet CanonicalFullSpan(const AlphabetPtr& alphabet,
                              const std::vector<InfosetId>& order);

// Smallest ALR span by the recursive construction, with its certificate.
SpanCertificate MinimalSpan(const SequenceSet& set, SpanStats* stats = nullptr);

// Minimum over infoset choices of the number of non-S-ALR levels needed.
int ShuffleDepth(const SequenceSet& set);

// Builds a certificate if the candidate spans the original. The candidate
// must be ALR; otherwise throws InvalidInput.
std::optional<SpanCertificate> VerifySpan(const SequenceSet& original,
                                          const SequenceSet& candidate);

// Rechecks a certificate: ALR span, generators inside it, and for every
// original sequence the generators minus its actions form a strongly
// branching set.
bool IsValidCertificate(const SpanCertificate& certificate);

// Realizes an ALR set whose branches are all nonempty: connected parts
// become player nodes, disconnected parts a uniform chance node. Payoffs are
// zero. Throws InvalidInput otherwise.
Game UniformGameFromSequences(const SequenceSet& set);
GameStructure StructureFromSequences(const SequenceSet& set);

// Smallest span found by enumerating every ALR set over at most three binary
// infosets. Independent of MinimalSpan; for testing.
SequenceSet MinimalityOracle(const SequenceSet& set);

}  // namespace recall_forge

#endif  // RECALL_FORGE_SPAN_H_
