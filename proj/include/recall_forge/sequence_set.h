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

#ifndef RECALL_FORGE_SEQUENCE_SET_H_
#define RECALL_FORGE_SEQUENCE_SET_H_

#include <optional>
#include <string>
#include <vector>

#include "recall_forge/alphabet.h"
#include "recall_forge/game.h"

namespace recall_forge {

// Actions in play order. The empty sequence is the history of a root leaf.
using Sequence = std::vector<ActionId>;

std::string SequenceToString(const Alphabet& alphabet, const Sequence& seq);

// A finite set of sequences over one alphabet, stored sorted and unique.
// Every sequence holds at most one action per infoset.
class SequenceSet {
 public:
  SequenceSet() = default;
  // Sorts and deduplicates. Throws InvalidInput on a repeated infoset.
  SequenceSet(AlphabetPtr alphabet, std::vector<Sequence> sequences);

  // Each entry is a whitespace-separated label list; "" is the empty sequence.
  static SequenceSet FromLabels(AlphabetPtr alphabet,
                                const std::vector<std::string>& sequences);
  // Skips validation. The input must already be sorted and unique.
  static SequenceSet FromSortedUnique(AlphabetPtr alphabet,
                                      std::vector<Sequence> sequences);

  const Alphabet& alphabet() const { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
  const std::vector<Sequence>& sequences() const { return sequences_; }
  std::size_t size() const { return sequences_.size(); }
  bool empty() const { return sequences_.empty(); }
  auto begin() const { return sequences_.begin(); }
  auto end() const { return sequences_.end(); }

  bool Contains(const Sequence& seq) const;
  bool ContainsEmpty() const {
    return !sequences_.empty() && sequences_.front().empty();
  }
  // Infosets touched by some sequence, in file order.
  std::vector<InfosetId> Infosets() const;

  // "{a c, a d}". The empty sequence prints as "<empty>".
  std::string ToString() const;

  friend bool operator==(const SequenceSet& a, const SequenceSet& b) {
    return a.sequences_ == b.sequences_;
  }

 private:
  AlphabetPtr alphabet_;
  std::vector<Sequence> sequences_;
};

SequenceSet Union(const SequenceSet& a, const SequenceSet& b);
// {a u : u in set}.
SequenceSet Prepend(ActionId action, const SequenceSet& set);
// {u : a u in set}.
SequenceSet PrefixQuotient(const SequenceSet& set, ActionId action);

// Histories of all leaves, restricted to one player when given.
// Throws InvalidInput if a relevant player is absentminded.
SequenceSet ExtractHistories(const GameStructure& structure,
                             std::optional<Player> player = std::nullopt);

// Connected components under "shares an infoset", ordered by their smallest
// sequence. The empty sequence forms its own component.
std::vector<SequenceSet> Components(const SequenceSet& set);

// Recursive ALR test. Empty continuations are vacuously ALR.
bool IsAlrSet(const SequenceSet& set);

// {u1 u2 : u1 a u2 in set}.
SequenceSet QuotientByAction(const SequenceSet& set, ActionId action);

// Sequences that avoid every action of the infoset.
SequenceSet ResidualWithoutInfoset(const SequenceSet& set, InfosetId infoset);

// First infoset in file order whose actions occur in every sequence.
std::optional<InfosetId> CoveringInfoset(const SequenceSet& set);

bool IsStronglyBranching(const SequenceSet& set);

// Some strongly branching subset, preferring infosets in file order.
std::optional<SequenceSet> FindStronglyBranchingSubset(const SequenceSet& set);

}  // namespace recall_forge

#endif  // RECALL_FORGE_SEQUENCE_SET_H_
