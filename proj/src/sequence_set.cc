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

#include "recall_forge/sequence_set.h"

#include <boost/pending/disjoint_sets.hpp>

#include <algorithm>
#include <map>
#include <sstream>

#include "recall_forge/recall.h"
#include "set_key.h"

namespace recall_forge {
namespace {

void SortUnique(std::vector<Sequence>& sequences) {
  std::sort(sequences.begin(), sequences.end());
  sequences.erase(std::unique(sequences.begin(), sequences.end()),
                  sequences.end());
}

bool HasRepeatedInfoset(const Alphabet& alphabet, const Sequence& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (alphabet.InfosetOf(seq[i]) == alphabet.InfosetOf(seq[j])) return true;
    }
  }
  return false;
}

// All first actions belong to one infoset; returns it. The set must be
// nonempty and free of the empty sequence.
std::optional<InfosetId> CommonFirstInfoset(const SequenceSet& set) {
  const Alphabet& alphabet = set.alphabet();
  InfosetId first = alphabet.InfosetOf(set.sequences().front().front());
  for (const Sequence& seq : set) {
    if (alphabet.InfosetOf(seq.front()) != first) return std::nullopt;
  }
  return first;
}

}  // namespace

std::string SequenceToString(const Alphabet& alphabet, const Sequence& seq) {
  if (seq.empty()) return "<empty>";
  std::string text;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) text += ' ';
    text += alphabet.Label(seq[i]);
  }
  return text;
}

SequenceSet::SequenceSet(AlphabetPtr alphabet, std::vector<Sequence> sequences)
    : alphabet_(std::move(alphabet)), sequences_(std::move(sequences)) {
  for (const Sequence& seq : sequences_) {
    for (ActionId a : seq) {
      if (Index(a) >= alphabet_->num_actions()) {
        throw InvalidInput("action id out of range");
      }
    }
    if (HasRepeatedInfoset(*alphabet_, seq)) {
      throw InvalidInput("sequence repeats an infoset: " +
                         SequenceToString(*alphabet_, seq));
    }
  }
  SortUnique(sequences_);
}

SequenceSet SequenceSet::FromLabels(AlphabetPtr alphabet,
                                    const std::vector<std::string>& sequences) {
  std::vector<Sequence> parsed;
  for (const std::string& text : sequences) {
    std::istringstream in(text);
    Sequence seq;
    std::string label;
    while (in >> label) {
      std::optional<ActionId> action = alphabet->FindAction(label);
      if (!action) throw InvalidInput("unknown action '" + label + "'");
      seq.push_back(*action);
    }
    parsed.push_back(std::move(seq));
  }
  return SequenceSet(std::move(alphabet), std::move(parsed));
}

SequenceSet SequenceSet::FromSortedUnique(AlphabetPtr alphabet,
                                          std::vector<Sequence> sequences) {
  SequenceSet set;
  set.alphabet_ = std::move(alphabet);
  set.sequences_ = std::move(sequences);
  return set;
}

bool SequenceSet::Contains(const Sequence& seq) const {
  return std::binary_search(sequences_.begin(), sequences_.end(), seq);
}

std::vector<InfosetId> SequenceSet::Infosets() const {
  std::vector<bool> seen(alphabet_->num_infosets(), false);
  for (const Sequence& seq : sequences_) {
    for (ActionId a : seq) seen[Index(alphabet_->InfosetOf(a))] = true;
  }
  std::vector<InfosetId> infosets;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) infosets.push_back(InfosetId{static_cast<std::int32_t>(i)});
  }
  return infosets;
}

std::string SequenceSet::ToString() const {
  std::string text = "{";
  for (std::size_t i = 0; i < sequences_.size(); ++i) {
    if (i > 0) text += ", ";
    text += SequenceToString(*alphabet_, sequences_[i]);
  }
  return text + "}";
}

SequenceSet Union(const SequenceSet& a, const SequenceSet& b) {
  std::vector<Sequence> merged;
  merged.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(merged));
  return SequenceSet::FromSortedUnique(a.alphabet_ptr() ? a.alphabet_ptr()
                                                        : b.alphabet_ptr(),
                                       std::move(merged));
}

SequenceSet Prepend(ActionId action, const SequenceSet& set) {
  std::vector<Sequence> result;
  result.reserve(set.size());
  for (const Sequence& seq : set) {
    Sequence extended;
    extended.reserve(seq.size() + 1);
    extended.push_back(action);
    extended.insert(extended.end(), seq.begin(), seq.end());
    result.push_back(std::move(extended));
  }
  // Prefixing by one action preserves the order.
  return SequenceSet::FromSortedUnique(set.alphabet_ptr(), std::move(result));
}

SequenceSet PrefixQuotient(const SequenceSet& set, ActionId action) {
  std::vector<Sequence> result;
  for (const Sequence& seq : set) {
    if (!seq.empty() && seq.front() == action) {
      result.emplace_back(seq.begin() + 1, seq.end());
    }
  }
  return SequenceSet::FromSortedUnique(set.alphabet_ptr(), std::move(result));
}

SequenceSet ExtractHistories(const GameStructure& structure,
                             std::optional<Player> player) {
  for (Player p : {Player::kMax, Player::kMin}) {
    if (player && *player != p) continue;
    if (IsAbsentminded(structure, p)) {
      throw InvalidInput(std::string("player ") +
                         std::string(PlayerName(p)) + " is absentminded");
    }
  }
  std::vector<Sequence> histories;
  for (NodeId leaf : structure.Leaves()) {
    histories.push_back(History(structure, leaf, player));
  }
  SortUnique(histories);
  return SequenceSet::FromSortedUnique(structure.alphabet_ptr(),
                                       std::move(histories));
}

std::vector<SequenceSet> Components(const SequenceSet& set) {
  const Alphabet& alphabet = set.alphabet();
  std::size_t n = alphabet.num_infosets();
  boost::disjoint_sets_with_storage<> sets(n);
  for (const Sequence& seq : set) {
    for (std::size_t i = 1; i < seq.size(); ++i) {
      sets.union_set(Index(alphabet.InfosetOf(seq[0])),
                     Index(alphabet.InfosetOf(seq[i])));
    }
  }
  std::vector<std::vector<Sequence>> groups;
  std::map<std::size_t, std::size_t> group_of_root;
  for (const Sequence& seq : set) {
    if (seq.empty()) {
      groups.push_back({seq});
      continue;
    }
    std::size_t root = sets.find_set(Index(alphabet.InfosetOf(seq[0])));
    auto [it, inserted] = group_of_root.emplace(root, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(seq);
  }
  std::vector<SequenceSet> components;
  for (auto& group : groups) {
    components.push_back(
        SequenceSet::FromSortedUnique(set.alphabet_ptr(), std::move(group)));
  }
  return components;
}

bool IsAlrSet(const SequenceSet& set) {
  if (set.size() <= 1) return true;
  std::vector<SequenceSet> components = Components(set);
  if (components.size() > 1) {
    return std::all_of(components.begin(), components.end(),
                       [](const SequenceSet& c) { return IsAlrSet(c); });
  }
  std::optional<InfosetId> first = CommonFirstInfoset(set);
  if (!first) return false;
  for (ActionId a : set.alphabet().infoset(*first).actions) {
    if (!IsAlrSet(PrefixQuotient(set, a))) return false;
  }
  return true;
}

SequenceSet QuotientByAction(const SequenceSet& set, ActionId action) {
  std::vector<Sequence> result;
  for (const Sequence& seq : set) {
    auto it = std::find(seq.begin(), seq.end(), action);
    if (it == seq.end()) continue;
    Sequence rest(seq.begin(), it);
    rest.insert(rest.end(), it + 1, seq.end());
    result.push_back(std::move(rest));
  }
  SortUnique(result);
  return SequenceSet::FromSortedUnique(set.alphabet_ptr(), std::move(result));
}

SequenceSet ResidualWithoutInfoset(const SequenceSet& set, InfosetId infoset) {
  const Alphabet& alphabet = set.alphabet();
  std::vector<Sequence> result;
  for (const Sequence& seq : set) {
    bool touches = std::any_of(seq.begin(), seq.end(), [&](ActionId a) {
      return alphabet.InfosetOf(a) == infoset;
    });
    if (!touches) result.push_back(seq);
  }
  return SequenceSet::FromSortedUnique(set.alphabet_ptr(), std::move(result));
}

std::optional<InfosetId> CoveringInfoset(const SequenceSet& set) {
  if (set.empty()) return std::nullopt;
  const Alphabet& alphabet = set.alphabet();
  std::vector<std::size_t> hits(alphabet.num_infosets(), 0);
  for (const Sequence& seq : set) {
    for (ActionId a : seq) ++hits[Index(alphabet.InfosetOf(a))];
  }
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i] == set.size()) return InfosetId{static_cast<std::int32_t>(i)};
  }
  return std::nullopt;
}

bool IsStronglyBranching(const SequenceSet& set) {
  if (set.empty()) return false;
  if (set.ContainsEmpty()) return set.size() == 1;
  std::optional<InfosetId> first = CommonFirstInfoset(set);
  if (!first) return false;
  for (ActionId a : set.alphabet().infoset(*first).actions) {
    SequenceSet branch = PrefixQuotient(set, a);
    if (branch.empty() || !IsStronglyBranching(branch)) return false;
  }
  return true;
}

namespace {

std::optional<SequenceSet> FindSbSubset(
    const SequenceSet& set,
    internal::SetMemo<std::optional<SequenceSet>>& memo) {
  if (set.empty()) return std::nullopt;
  if (set.ContainsEmpty()) {
    return SequenceSet::FromSortedUnique(set.alphabet_ptr(), {Sequence{}});
  }
  auto cached = memo.find(set.sequences());
  if (cached != memo.end()) return cached->second;
  const Alphabet& alphabet = set.alphabet();
  std::vector<bool> leads(alphabet.num_infosets(), false);
  for (const Sequence& seq : set) leads[Index(alphabet.InfosetOf(seq[0]))] = true;
  std::optional<SequenceSet> found;
  for (std::size_t i = 0; i < leads.size() && !found; ++i) {
    if (!leads[i]) continue;
    InfosetId infoset{static_cast<std::int32_t>(i)};
    SequenceSet subset = SequenceSet::FromSortedUnique(set.alphabet_ptr(), {});
    bool complete = true;
    for (ActionId a : alphabet.infoset(infoset).actions) {
      std::optional<SequenceSet> branch =
          FindSbSubset(PrefixQuotient(set, a), memo);
      if (!branch) {
        complete = false;
        break;
      }
      subset = Union(subset, Prepend(a, *branch));
    }
    if (complete) found = std::move(subset);
  }
  memo.emplace(set.sequences(), found);
  return found;
}

}  // namespace

std::optional<SequenceSet> FindStronglyBranchingSubset(const SequenceSet& set) {
  internal::SetMemo<std::optional<SequenceSet>> memo;
  return FindSbSubset(set, memo);
}

}  // namespace recall_forge
