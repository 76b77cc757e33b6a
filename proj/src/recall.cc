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

#include "recall_forge/recall.h"

#include <algorithm>
#include <set>
#include <vector>

namespace recall_forge {
namespace {

bool Owns(const GameStructure& structure, const Node& node, Player player) {
  return node.kind == NodeKind::kPlayer &&
         structure.alphabet().infoset(node.infoset).owner == player;
}

// Distinct histories are compatible when they first differ at two different
// actions of one infoset. A proper prefix is never compatible.
bool AlrCompatible(const Alphabet& alphabet, const Sequence& a,
                   const Sequence& b) {
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
  if (k == a.size() || k == b.size()) return false;
  return alphabet.InfosetOf(a[k]) == alphabet.InfosetOf(b[k]);
}

}  // namespace

Sequence History(const GameStructure& structure, NodeId node,
                 std::optional<Player> player) {
  Sequence reversed;
  NodeId child = node;
  for (std::optional<NodeId> v = structure.parent(node); v;
       child = *v, v = structure.parent(*v)) {
    const Node& parent = structure.node(*v);
    if (parent.kind != NodeKind::kPlayer) continue;
    if (player && !Owns(structure, parent, *player)) continue;
    auto it = std::find(parent.children.begin(), parent.children.end(), child);
    reversed.push_back(parent.actions[it - parent.children.begin()]);
  }
  return Sequence(reversed.rbegin(), reversed.rend());
}

std::string_view RecallClassName(RecallClass recall) {
  switch (recall) {
    case RecallClass::kPfr:
      return "PFR";
    case RecallClass::kAlr:
      return "ALR_not_PFR";
    case RecallClass::kNamNotAlr:
      return "NAM_not_ALR";
    case RecallClass::kAbsentminded:
      return "ABSENTMINDED";
  }
  return "";
}

bool IsAbsentminded(const GameStructure& structure, Player player) {
  for (NodeId v : structure.Preorder()) {
    const Node& node = structure.node(v);
    if (!Owns(structure, node, player)) continue;
    for (std::optional<NodeId> u = structure.parent(v); u;
         u = structure.parent(*u)) {
      const Node& ancestor = structure.node(*u);
      if (ancestor.kind == NodeKind::kPlayer &&
          ancestor.infoset == node.infoset) {
        return true;
      }
    }
  }
  return false;
}

RecallClass ClassifyRecall(const GameStructure& structure, Player player) {
  if (IsAbsentminded(structure, player)) return RecallClass::kAbsentminded;
  const Alphabet& alphabet = structure.alphabet();
  std::vector<std::set<Sequence>> histories(alphabet.num_infosets());
  for (NodeId v : structure.Preorder()) {
    const Node& node = structure.node(v);
    if (!Owns(structure, node, player)) continue;
    histories[Index(node.infoset)].insert(History(structure, v, player));
  }
  bool perfect = true;
  for (const auto& at_infoset : histories) {
    if (at_infoset.size() <= 1) continue;
    perfect = false;
    std::vector<Sequence> list(at_infoset.begin(), at_infoset.end());
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        if (!AlrCompatible(alphabet, list[i], list[j])) {
          return RecallClass::kNamNotAlr;
        }
      }
    }
  }
  return perfect ? RecallClass::kPfr : RecallClass::kAlr;
}

}  // namespace recall_forge
