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

#include "recall_forge/transform.h"

#include <functional>
#include <map>
#include <utility>

#include "recall_forge/recall.h"

namespace recall_forge {
namespace {

void RequireCovers(const SpanCertificate& certificate,
                   const SequenceSet& histories, std::string_view who) {
  if (!(certificate.original == histories)) {
    throw InvalidInput("certificate does not cover the " + std::string(who) +
                       " histories of the source");
  }
  for (const Sequence& seq : histories) {
    if (!certificate.combinations.count(seq)) {
      throw InvalidInput("certificate lacks a combination for " +
                         SequenceToString(histories.alphabet(), seq));
    }
  }
}

// Copies `game`'s tree into the builder. Leaves are replaced by whatever
// `at_leaf` returns.
NodeId CopyTree(GameBuilder& builder, const Game& game, NodeId v,
                const std::function<NodeId()>& at_leaf) {
  const Node& node = game.structure().node(v);
  switch (node.kind) {
    case NodeKind::kLeaf:
      return at_leaf();
    case NodeKind::kPlayer: {
      std::vector<std::pair<ActionId, NodeId>> children;
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        children.emplace_back(node.actions[i],
                              CopyTree(builder, game, node.children[i], at_leaf));
      }
      return builder.AddPlayer(node.infoset, std::move(children), node.name);
    }
    case NodeKind::kChance: {
      std::vector<std::pair<Rational, NodeId>> children;
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        children.emplace_back(game.chance_probs(v)[i],
                              CopyTree(builder, game, node.children[i], at_leaf));
      }
      return builder.AddChance(std::move(children), node.name);
    }
  }
  return NodeId{};
}

// Rebuilds `shape` with the payoffs accumulated per leaf, divided by the
// leaf's chance reach.
Game WithPayoffs(const Game& shape, const std::vector<Rational>& weighted) {
  const GameStructure& structure = shape.structure();
  std::vector<Rational> reach = shape.ChanceReach();
  std::vector<std::vector<Rational>> probs(structure.num_nodes());
  std::vector<Rational> payoffs(structure.num_nodes(), Rational(0));
  for (std::size_t v = 0; v < structure.num_nodes(); ++v) {
    NodeId id{static_cast<std::int32_t>(v)};
    probs[v] = shape.chance_probs(id);
    if (structure.node(id).kind == NodeKind::kLeaf) {
      payoffs[v] = weighted[v] / reach[v];
    }
  }
  return Game(structure, std::move(probs), std::move(payoffs));
}

}  // namespace

TransformedGame TransferPayoffs(const Game& source,
                                const SpanCertificate& certificate) {
  const GameStructure& structure = source.structure();
  if (!ExtractHistories(structure, Player::kMin).ContainsEmpty() ||
      ExtractHistories(structure, Player::kMin).size() != 1) {
    throw InvalidInput("payoff transfer expects a one-player game");
  }
  RequireCovers(certificate, ExtractHistories(structure, Player::kMax), "max");
  Game shape = UniformGameFromSequences(certificate.span);
  const GameStructure& target = shape.structure();
  std::map<Sequence, NodeId> leaf_of;
  for (NodeId leaf : target.Leaves()) leaf_of[History(target, leaf)] = leaf;

  std::vector<Rational> reach = source.ChanceReach();
  std::vector<Rational> weighted(target.num_nodes(), Rational(0));
  TransformedGame result;
  result.payoff_trace.resize(target.num_nodes());
  for (NodeId leaf : structure.Leaves()) {
    Sequence history = History(structure, leaf, Player::kMax);
    for (const Sequence& generator : certificate.combinations.at(history)) {
      NodeId target_leaf = leaf_of.at(generator);
      weighted[Index(target_leaf)] += reach[Index(leaf)] * source.payoff(leaf);
      result.payoff_trace[Index(target_leaf)].push_back(
          {leaf, Rational(1), reach[Index(leaf)]});
    }
  }
  result.game = WithPayoffs(shape, weighted);
  return result;
}

TransformedGame ComposeTwoPlayer(const Game& source,
                                 const SpanCertificate& max_span,
                                 const SpanCertificate& min_span) {
  const GameStructure& structure = source.structure();
  RequireCovers(max_span, ExtractHistories(structure, Player::kMax), "max");
  RequireCovers(min_span, ExtractHistories(structure, Player::kMin), "min");
  Game max_shape = UniformGameFromSequences(max_span.span);
  Game min_shape = UniformGameFromSequences(min_span.span);

  GameBuilder builder(structure.alphabet_ptr());
  std::function<NodeId()> leaf = [&]() { return builder.AddLeaf(); };
  std::function<NodeId()> min_copy = [&]() {
    return CopyTree(builder, min_shape, min_shape.structure().root(), leaf);
  };
  NodeId root =
      CopyTree(builder, max_shape, max_shape.structure().root(), min_copy);
  Game shape = builder.BuildGame(root);
  const GameStructure& target = shape.structure();
  std::map<std::pair<Sequence, Sequence>, NodeId> leaf_of;
  for (NodeId v : target.Leaves()) {
    leaf_of[{History(target, v, Player::kMax), History(target, v, Player::kMin)}] =
        v;
  }

  std::vector<Rational> reach = source.ChanceReach();
  std::vector<Rational> weighted(target.num_nodes(), Rational(0));
  TransformedGame result;
  result.payoff_trace.resize(target.num_nodes());
  for (NodeId v : structure.Leaves()) {
    const auto& max_generators =
        max_span.combinations.at(History(structure, v, Player::kMax));
    const auto& min_generators =
        min_span.combinations.at(History(structure, v, Player::kMin));
    for (const Sequence& g : max_generators) {
      for (const Sequence& h : min_generators) {
        NodeId target_leaf = leaf_of.at({g, h});
        weighted[Index(target_leaf)] += reach[Index(v)] * source.payoff(v);
        result.payoff_trace[Index(target_leaf)].push_back(
            {v, Rational(1), reach[Index(v)]});
      }
    }
  }
  result.game = WithPayoffs(shape, weighted);
  return result;
}

}  // namespace recall_forge
