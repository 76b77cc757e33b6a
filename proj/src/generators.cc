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

#include "recall_forge/generators.h"

#include <map>
#include <random>
#include <string>
#include <tuple>

namespace recall_forge {
namespace {

std::string Label(std::string_view coin, std::string_view infoset) {
  return std::string(coin) + "_" + std::string(infoset);
}

// Draws from mt19937_64 directly; the library distributions are not
// reproducible across standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  int Below(int n) { return static_cast<int>(engine_() % n); }
  double Unit() { return (engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

struct ShapeNode {
  NodeKind kind = NodeKind::kLeaf;
  int depth = 0;
  Player owner = Player::kMax;
  int infoset = -1;
  std::vector<int> children;
  std::vector<Rational> probs;
  Rational payoff;
};

}  // namespace

std::optional<PenniesVariant> ParsePenniesVariant(std::string_view name) {
  if (name == "I" || name == "1") return PenniesVariant::kI;
  if (name == "II" || name == "2") return PenniesVariant::kII;
  if (name == "III" || name == "3") return PenniesVariant::kIII;
  return std::nullopt;
}

Game GenPennies(PenniesVariant variant, int n) {
  if (n < 1) throw InvalidInput("pennies needs at least one die face");
  auto alphabet = std::make_shared<Alphabet>();
  int alice_sets = variant == PenniesVariant::kI ? 1 : (n + 1) / 2;
  for (int i = 0; i < alice_sets; ++i) {
    std::string id = "A" + std::to_string(i);
    alphabet->AddInfoset(id, Player::kMax, {Label("H", id), Label("T", id)});
  }
  if (variant == PenniesVariant::kIII) {
    alphabet->AddInfoset("BH", Player::kMax, {"H_BH", "T_BH"});
    alphabet->AddInfoset("BT", Player::kMax, {"H_BT", "T_BT"});
  } else {
    alphabet->AddInfoset("B", Player::kMax, {"H_B", "T_B"});
  }
  GameBuilder builder(alphabet);
  std::vector<std::pair<Rational, NodeId>> faces;
  for (int k = 0; k < n; ++k) {
    std::string alice =
        "A" + std::to_string(variant == PenniesVariant::kI ? 0 : k / 2);
    std::vector<std::pair<std::string, NodeId>> alice_moves;
    for (std::string_view c : {"H", "T"}) {
      std::string bob =
          variant == PenniesVariant::kIII ? "B" + std::string(c) : "B";
      std::vector<std::pair<std::string, NodeId>> bob_moves;
      for (std::string_view d : {"H", "T"}) {
        bool win = (k % 2 == 0) == (c == d);
        bob_moves.emplace_back(Label(d, bob), builder.AddLeaf(win ? 1 : 0));
      }
      alice_moves.emplace_back(Label(c, alice),
                               builder.AddPlayer(bob, std::move(bob_moves)));
    }
    faces.emplace_back(Rational(1, n),
                       builder.AddPlayer(alice, std::move(alice_moves)));
  }
  return builder.BuildGame(builder.AddChance(std::move(faces)));
}

namespace {

AlphabetPtr LowerboundAlphabet(int n) {
  if (n < 1) throw InvalidInput("lower-bound family needs n >= 1");
  auto alphabet = std::make_shared<Alphabet>();
  for (int i = 1; i <= n; ++i) {
    std::string k = std::to_string(i);
    alphabet->AddInfoset("I" + k, Player::kMax, {"a" + k, "b" + k});
  }
  return alphabet;
}

}  // namespace

SequenceSet GenLowerbound(int n) {
  AlphabetPtr alphabet = LowerboundAlphabet(n);
  std::vector<Sequence> sequences;
  auto actions = [&](int i) {
    return alphabet->infoset(InfosetId{i}).actions;
  };
  for (int i = 0; i < n; ++i) {
    for (ActionId x : actions(i)) sequences.push_back({x});
    for (int j = i + 1; j < n; ++j) {
      for (ActionId x : actions(i)) {
        for (ActionId y : actions(j)) sequences.push_back({x, y});
      }
    }
  }
  return SequenceSet(alphabet, std::move(sequences));
}

Game GenLowerboundGame(int n) {
  AlphabetPtr alphabet = LowerboundAlphabet(n);
  GameBuilder builder(alphabet);
  auto decision = [&](int i, auto make_child) {
    std::vector<std::pair<ActionId, NodeId>> children;
    for (ActionId a : alphabet->infoset(InfosetId{i}).actions) {
      children.emplace_back(a, make_child());
    }
    return builder.AddPlayer(InfosetId{i}, std::move(children));
  };
  auto leaf = [&]() { return builder.AddLeaf(); };
  std::vector<NodeId> branches;
  for (int i = 0; i < n; ++i) {
    branches.push_back(decision(i, leaf));
    for (int j = i + 1; j < n; ++j) {
      branches.push_back(decision(i, [&]() { return decision(j, leaf); }));
    }
  }
  std::vector<std::pair<Rational, NodeId>> children;
  for (NodeId b : branches) {
    children.emplace_back(Rational(1, branches.size()), b);
  }
  return builder.BuildGame(builder.AddChance(std::move(children)));
}

Game GenRandom(const RandomGameParams& params) {
  if (params.depth < 1 || params.depth > 8) {
    throw InvalidInput("random depth must lie in [1, 8]");
  }
  if (params.branching < 2 || params.branching > 3) {
    throw InvalidInput("random branching must lie in [2, 3]");
  }
  if (params.players != 1 && params.players != 2) {
    throw InvalidInput("random games have one or two players");
  }
  Draw draw(params.seed);
  std::vector<ShapeNode> shape;
  auto grow = [&](auto&& self, int depth) -> int {
    int index = shape.size();
    shape.emplace_back();
    shape[index].depth = depth;
    double leaf_prob = depth == 0 ? 0.0 : 0.15 + 0.5 * depth / params.depth;
    double r = draw.Unit();
    if (depth == params.depth || r < leaf_prob) {
      shape[index].payoff = draw.Below(11) - 5;
      return index;
    }
    int arity = 2 + draw.Below(params.branching - 1);
    bool chance = draw.Unit() < 0.3;
    shape[index].kind = chance ? NodeKind::kChance : NodeKind::kPlayer;
    if (!chance && params.players == 2 && draw.Below(2) == 1) {
      shape[index].owner = Player::kMin;
    }
    std::vector<int> weights;
    int total = 0;
    for (int i = 0; i < arity; ++i) {
      int child = self(self, depth + 1);
      shape[index].children.push_back(child);
      weights.push_back(1 + draw.Below(4));
      total += weights.back();
    }
    if (chance) {
      for (int w : weights) shape[index].probs.emplace_back(w, total);
      for (Rational& p : shape[index].probs) p.canonicalize();
    }
    return index;
  };
  int root = grow(grow, 0);

  // Merge groups keyed by (depth, arity, owner), nodes in creation order.
  std::map<std::tuple<int, int, int>, std::vector<int>> group_infosets;
  std::vector<int> infoset_arity;
  std::vector<Player> infoset_owner;
  for (ShapeNode& node : shape) {
    if (node.kind != NodeKind::kPlayer) continue;
    int arity = node.children.size();
    auto key = std::make_tuple(node.depth, arity, static_cast<int>(node.owner));
    std::vector<int>& existing = group_infosets[key];
    if (!existing.empty() && draw.Unit() < params.merge_prob) {
      node.infoset = existing[draw.Below(existing.size())];
    } else {
      node.infoset = infoset_arity.size();
      existing.push_back(node.infoset);
      infoset_arity.push_back(arity);
      infoset_owner.push_back(node.owner);
    }
  }
  auto alphabet = std::make_shared<Alphabet>();
  for (std::size_t i = 0; i < infoset_arity.size(); ++i) {
    std::string k = std::to_string(i);
    std::vector<std::string> labels;
    for (int j = 0; j < infoset_arity[i]; ++j) {
      labels.push_back("a" + k + "_" + std::to_string(j));
    }
    alphabet->AddInfoset("I" + k, infoset_owner[i], labels);
  }
  GameBuilder builder(alphabet);
  auto emit = [&](auto&& self, int index) -> NodeId {
    const ShapeNode& node = shape[index];
    switch (node.kind) {
      case NodeKind::kLeaf:
        return builder.AddLeaf(node.payoff);
      case NodeKind::kChance: {
        std::vector<std::pair<Rational, NodeId>> children;
        for (std::size_t i = 0; i < node.children.size(); ++i) {
          children.emplace_back(node.probs[i], self(self, node.children[i]));
        }
        return builder.AddChance(std::move(children));
      }
      case NodeKind::kPlayer: {
        InfosetId infoset{node.infoset};
        std::vector<std::pair<ActionId, NodeId>> children;
        for (std::size_t i = 0; i < node.children.size(); ++i) {
          children.emplace_back(alphabet->infoset(infoset).actions[i],
                                self(self, node.children[i]));
        }
        return builder.AddPlayer(infoset, std::move(children));
      }
    }
    return NodeId{};
  };
  return builder.BuildGame(emit(emit, root));
}

}  // namespace recall_forge
