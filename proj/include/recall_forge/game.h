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

#ifndef RECALL_FORGE_GAME_H_
#define RECALL_FORGE_GAME_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recall_forge/alphabet.h"
#include "recall_forge/rational.h"

namespace recall_forge {

enum class NodeId : std::int32_t {};
inline std::size_t Index(NodeId id) { return static_cast<std::size_t>(id); }

enum class NodeKind { kChance, kPlayer, kLeaf };

struct Node {
  NodeKind kind = NodeKind::kLeaf;
  InfosetId infoset{};  // Player nodes only.
  std::vector<NodeId> children;
  std::vector<ActionId> actions;  // Player nodes only, parallel to children.
  std::string name;               // Optional display name.
};

// A rooted tree with chance, player and leaf nodes over a shared alphabet.
// Chance edges carry no labels; probabilities live in Game.
class GameStructure {
 public:
  GameStructure() = default;
  GameStructure(AlphabetPtr alphabet, std::vector<Node> nodes, NodeId root);

  const Alphabet& alphabet() const { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
  const Node& node(NodeId id) const { return nodes_[Index(id)]; }
  std::size_t num_nodes() const { return nodes_.size(); }
  NodeId root() const { return root_; }

  // First recorded parent. Nodes reachable along several edges are reported
  // by Validate.
  std::optional<NodeId> parent(NodeId id) const { return parents_[Index(id)]; }

  // Leaves in depth-first order, children visited in stored order.
  std::vector<NodeId> Leaves() const;
  // Nodes in depth-first preorder.
  std::vector<NodeId> Preorder() const;
  std::optional<NodeId> FindNode(std::string_view name) const;
  // Infosets that label at least one node.
  std::vector<bool> UsedInfosets() const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Node> nodes_;
  std::vector<std::optional<NodeId>> parents_;
  NodeId root_{};
};

// A structure together with chance probabilities and leaf payoffs to Max.
class Game {
 public:
  Game() = default;
  // chance_probs[v] is parallel to the children of chance node v and empty
  // elsewhere. payoffs[v] is read for leaves only.
  Game(GameStructure structure, std::vector<std::vector<Rational>> chance_probs,
       std::vector<Rational> payoffs);

  const GameStructure& structure() const { return structure_; }
  const Alphabet& alphabet() const { return structure_.alphabet(); }
  const std::vector<Rational>& chance_probs(NodeId id) const {
    return chance_probs_[Index(id)];
  }
  const Rational& payoff(NodeId id) const { return payoffs_[Index(id)]; }

  // Product of chance probabilities on the root path of every node.
  std::vector<Rational> ChanceReach() const;

 private:
  GameStructure structure_;
  std::vector<std::vector<Rational>> chance_probs_;
  std::vector<Rational> payoffs_;
};

// Builds trees bottom-up: children must be added before their parent.
class GameBuilder {
 public:
  explicit GameBuilder(AlphabetPtr alphabet);

  NodeId AddLeaf(Rational payoff = 0, std::string name = "");
  NodeId AddChance(std::vector<std::pair<Rational, NodeId>> children,
                   std::string name = "");
  // Children are keyed by action label; an unknown label throws InvalidInput.
  NodeId AddPlayer(std::string_view infoset,
                   std::vector<std::pair<std::string, NodeId>> children,
                   std::string name = "");
  NodeId AddPlayer(InfosetId infoset,
                   std::vector<std::pair<ActionId, NodeId>> children,
                   std::string name = "");

  GameStructure BuildStructure(NodeId root) const;
  Game BuildGame(NodeId root) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Node> nodes_;
  std::vector<std::vector<Rational>> chance_probs_;
  std::vector<Rational> payoffs_;
};

// Structural violations: not a tree, bad arities, mismatched action sets,
// duplicate labels. Empty when the structure is well formed.
std::vector<std::string> Validate(const GameStructure& structure);
// Adds chance-distribution violations to the structural ones.
std::vector<std::string> Validate(const Game& game);

// Merges chance children of chance nodes into their parents.
Game AbsorbChanceChildren(const Game& game);

}  // namespace recall_forge

#endif  // RECALL_FORGE_GAME_H_
