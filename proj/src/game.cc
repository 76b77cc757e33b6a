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

#include "recall_forge/game.h"

#include <algorithm>
#include <set>

namespace recall_forge {
namespace {

std::string NodeLabel(const GameStructure& structure, NodeId id) {
  const Node& node = structure.node(id);
  std::string label = "node " + std::to_string(Index(id));
  if (!node.name.empty()) label += " (" + node.name + ")";
  return label;
}

}  // namespace

GameStructure::GameStructure(AlphabetPtr alphabet, std::vector<Node> nodes,
                             NodeId root)
    : alphabet_(std::move(alphabet)),
      nodes_(std::move(nodes)),
      parents_(nodes_.size()),
      root_(root) {
  if (Index(root_) >= nodes_.size()) throw InvalidInput("root out of range");
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    for (NodeId child : nodes_[v].children) {
      if (Index(child) >= nodes_.size()) {
        throw InvalidInput("child index out of range");
      }
      if (!parents_[Index(child)]) {
        parents_[Index(child)] = NodeId{static_cast<std::int32_t>(v)};
      }
    }
  }
}

std::vector<NodeId> GameStructure::Preorder() const {
  std::vector<NodeId> order;
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<NodeId> stack = {root_};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (seen[Index(v)]) continue;
    seen[Index(v)] = true;
    order.push_back(v);
    const auto& children = nodes_[Index(v)].children;
    for (auto it = children.rbegin(); it != children.rend(); ++it) {
      stack.push_back(*it);
    }
  }
  return order;
}

std::vector<NodeId> GameStructure::Leaves() const {
  std::vector<NodeId> leaves;
  for (NodeId v : Preorder()) {
    if (nodes_[Index(v)].kind == NodeKind::kLeaf) leaves.push_back(v);
  }
  return leaves;
}

std::optional<NodeId> GameStructure::FindNode(std::string_view name) const {
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].name == name) return NodeId{static_cast<std::int32_t>(v)};
  }
  return std::nullopt;
}

std::vector<bool> GameStructure::UsedInfosets() const {
  std::vector<bool> used(alphabet_->num_infosets(), false);
  for (NodeId v : Preorder()) {
    const Node& node = nodes_[Index(v)];
    if (node.kind == NodeKind::kPlayer) used[Index(node.infoset)] = true;
  }
  return used;
}

Game::Game(GameStructure structure,
           std::vector<std::vector<Rational>> chance_probs,
           std::vector<Rational> payoffs)
    : structure_(std::move(structure)),
      chance_probs_(std::move(chance_probs)),
      payoffs_(std::move(payoffs)) {
  chance_probs_.resize(structure_.num_nodes());
  payoffs_.resize(structure_.num_nodes());
}

std::vector<Rational> Game::ChanceReach() const {
  std::vector<Rational> reach(structure_.num_nodes(), Rational(0));
  reach[Index(structure_.root())] = 1;
  for (NodeId v : structure_.Preorder()) {
    const Node& node = structure_.node(v);
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      Rational edge = 1;
      if (node.kind == NodeKind::kChance && i < chance_probs_[Index(v)].size()) {
        edge = chance_probs_[Index(v)][i];
      }
      reach[Index(node.children[i])] = reach[Index(v)] * edge;
    }
  }
  return reach;
}

GameBuilder::GameBuilder(AlphabetPtr alphabet)
    : alphabet_(std::move(alphabet)) {}

NodeId GameBuilder::AddLeaf(Rational payoff, std::string name) {
  Node node;
  node.kind = NodeKind::kLeaf;
  node.name = std::move(name);
  nodes_.push_back(std::move(node));
  chance_probs_.emplace_back();
  payoffs_.push_back(std::move(payoff));
  return NodeId{static_cast<std::int32_t>(nodes_.size() - 1)};
}

NodeId GameBuilder::AddChance(std::vector<std::pair<Rational, NodeId>> children,
                              std::string name) {
  Node node;
  node.kind = NodeKind::kChance;
  node.name = std::move(name);
  std::vector<Rational> probs;
  for (auto& [prob, child] : children) {
    node.children.push_back(child);
    probs.push_back(prob);
  }
  nodes_.push_back(std::move(node));
  chance_probs_.push_back(std::move(probs));
  payoffs_.emplace_back(0);
  return NodeId{static_cast<std::int32_t>(nodes_.size() - 1)};
}

NodeId GameBuilder::AddPlayer(
    std::string_view infoset,
    std::vector<std::pair<std::string, NodeId>> children, std::string name) {
  std::optional<InfosetId> infoset_id = alphabet_->FindInfoset(infoset);
  if (!infoset_id) {
    throw InvalidInput("unknown infoset '" + std::string(infoset) + "'");
  }
  std::vector<std::pair<ActionId, NodeId>> edges;
  for (auto& [label, child] : children) {
    std::optional<ActionId> action = alphabet_->FindAction(label);
    if (!action) throw InvalidInput("unknown action '" + label + "'");
    edges.emplace_back(*action, child);
  }
  return AddPlayer(*infoset_id, std::move(edges), std::move(name));
}

NodeId GameBuilder::AddPlayer(InfosetId infoset,
                              std::vector<std::pair<ActionId, NodeId>> children,
                              std::string name) {
  Node node;
  node.kind = NodeKind::kPlayer;
  node.infoset = infoset;
  node.name = std::move(name);
  for (auto& [action, child] : children) {
    node.actions.push_back(action);
    node.children.push_back(child);
  }
  nodes_.push_back(std::move(node));
  chance_probs_.emplace_back();
  payoffs_.emplace_back(0);
  return NodeId{static_cast<std::int32_t>(nodes_.size() - 1)};
}

GameStructure GameBuilder::BuildStructure(NodeId root) const {
  return GameStructure(alphabet_, nodes_, root);
}

Game GameBuilder::BuildGame(NodeId root) const {
  return Game(BuildStructure(root), chance_probs_, payoffs_);
}

std::vector<std::string> Validate(const GameStructure& structure) {
  std::vector<std::string> violations;
  const Alphabet& alphabet = structure.alphabet();
  for (const std::string& label : alphabet.DuplicateLabels()) {
    violations.push_back("duplicate label '" + label + "'");
  }
  std::vector<int> in_degree(structure.num_nodes(), 0);
  for (std::size_t v = 0; v < structure.num_nodes(); ++v) {
    for (NodeId child : structure.node(NodeId{static_cast<std::int32_t>(v)})
                            .children) {
      ++in_degree[Index(child)];
    }
  }
  if (in_degree[Index(structure.root())] != 0) {
    violations.push_back("root has a parent");
  }
  std::vector<NodeId> reachable = structure.Preorder();
  std::vector<bool> is_reachable(structure.num_nodes(), false);
  for (NodeId v : reachable) is_reachable[Index(v)] = true;
  for (std::size_t v = 0; v < structure.num_nodes(); ++v) {
    NodeId id{static_cast<std::int32_t>(v)};
    if (!is_reachable[v]) {
      violations.push_back(NodeLabel(structure, id) + " unreachable");
    }
    if (in_degree[v] > 1) {
      violations.push_back(NodeLabel(structure, id) + " has several parents");
    }
  }
  for (NodeId v : reachable) {
    const Node& node = structure.node(v);
    switch (node.kind) {
      case NodeKind::kLeaf:
        if (!node.children.empty()) {
          violations.push_back(NodeLabel(structure, v) + " leaf with children");
        }
        break;
      case NodeKind::kChance:
        if (node.children.empty()) {
          violations.push_back(NodeLabel(structure, v) + " chance without children");
        }
        break;
      case NodeKind::kPlayer: {
        if (Index(node.infoset) >= alphabet.num_infosets()) {
          violations.push_back(NodeLabel(structure, v) + " unknown infoset");
          break;
        }
        std::vector<ActionId> expected = alphabet.infoset(node.infoset).actions;
        std::vector<ActionId> actual = node.actions;
        std::sort(expected.begin(), expected.end());
        std::sort(actual.begin(), actual.end());
        if (expected.empty() || expected != actual ||
            node.actions.size() != node.children.size()) {
          violations.push_back(NodeLabel(structure, v) +
                               " out-edges differ from actions of infoset '" +
                               alphabet.infoset(node.infoset).id + "'");
        }
        break;
      }
    }
  }
  return violations;
}

std::vector<std::string> Validate(const Game& game) {
  std::vector<std::string> violations = Validate(game.structure());
  const GameStructure& structure = game.structure();
  for (NodeId v : structure.Preorder()) {
    const Node& node = structure.node(v);
    if (node.kind != NodeKind::kChance) continue;
    const std::vector<Rational>& probs = game.chance_probs(v);
    if (probs.size() != node.children.size()) {
      violations.push_back(NodeLabel(structure, v) + " probability count");
      continue;
    }
    Rational total = 0;
    for (const Rational& p : probs) {
      if (p < 0) violations.push_back(NodeLabel(structure, v) + " negative probability");
      total += p;
    }
    if (total != 1) {
      violations.push_back(NodeLabel(structure, v) + " probabilities sum to " +
                           RationalToString(total));
    }
  }
  return violations;
}

Game AbsorbChanceChildren(const Game& game) {
  const GameStructure& structure = game.structure();
  GameBuilder builder(structure.alphabet_ptr());
  // Rebuilds bottom-up; chance children of chance nodes are spliced in.
  auto rebuild = [&](auto&& self, NodeId v) -> NodeId {
    const Node& node = structure.node(v);
    switch (node.kind) {
      case NodeKind::kLeaf:
        return builder.AddLeaf(game.payoff(v), node.name);
      case NodeKind::kPlayer: {
        std::vector<std::pair<ActionId, NodeId>> children;
        for (std::size_t i = 0; i < node.children.size(); ++i) {
          children.emplace_back(node.actions[i], self(self, node.children[i]));
        }
        return builder.AddPlayer(node.infoset, std::move(children), node.name);
      }
      case NodeKind::kChance:
        break;
    }
    std::vector<std::pair<Rational, NodeId>> flat;
    auto collect = [&](auto&& rec, NodeId u, const Rational& weight) -> void {
      const Node& current = structure.node(u);
      for (std::size_t i = 0; i < current.children.size(); ++i) {
        NodeId child = current.children[i];
        Rational p = weight * game.chance_probs(u)[i];
        if (structure.node(child).kind == NodeKind::kChance) {
          rec(rec, child, p);
        } else {
          flat.emplace_back(p, self(self, child));
        }
      }
    };
    collect(collect, v, Rational(1));
    return builder.AddChance(std::move(flat), node.name);
  };
  NodeId root = rebuild(rebuild, structure.root());
  return builder.BuildGame(root);
}

}  // namespace recall_forge
