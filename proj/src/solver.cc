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

#include "recall_forge/solver.h"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <stdexcept>

#include "recall_forge/recall.h"
#include "recall_forge/sequence_set.h"
#include "recall_forge/span.h"
#include "recall_forge/transform.h"

namespace recall_forge {
namespace {

constexpr std::size_t kDefaultMaxPure = std::size_t{1} << 20;

bool IsMaxNode(const Alphabet& alphabet, const Node& node) {
  return node.kind == NodeKind::kPlayer &&
         alphabet.infoset(node.infoset).owner == Player::kMax;
}

void RequireOnePlayer(const GameStructure& structure) {
  for (NodeId v : structure.Preorder()) {
    const Node& node = structure.node(v);
    if (node.kind == NodeKind::kPlayer && !IsMaxNode(structure.alphabet(), node)) {
      throw InvalidInput("expected a one-player game; Min owns infoset '" +
                         structure.alphabet().infoset(node.infoset).id + "'");
    }
  }
}

// Pure strategies do not attain the maxmin value under absentmindedness.
void RequireSolvable(const GameStructure& structure) {
  RequireOnePlayer(structure);
  if (IsAbsentminded(structure, Player::kMax)) {
    throw InvalidInput("absentminded games are not supported");
  }
}

NodeId ChildFor(const Node& node, ActionId action) {
  for (std::size_t i = 0; i < node.actions.size(); ++i) {
    if (node.actions[i] == action) return node.children[i];
  }
  throw InvalidInput("strategy picks an action missing at a node");
}

// Max infosets that label a node, in file order.
std::vector<InfosetId> DecisionInfosets(const GameStructure& structure) {
  std::vector<bool> used = structure.UsedInfosets();
  std::vector<InfosetId> slots;
  for (std::size_t i = 0; i < used.size(); ++i) {
    InfosetId id{static_cast<std::int32_t>(i)};
    if (used[i] && structure.alphabet().infoset(id).owner == Player::kMax) {
      slots.push_back(id);
    }
  }
  return slots;
}

std::size_t CountStrategies(const Alphabet& alphabet,
                            const std::vector<InfosetId>& slots,
                            std::size_t limit) {
  std::size_t count = 1;
  for (InfosetId id : slots) {
    std::size_t arity = alphabet.infoset(id).actions.size();
    if (count > limit / arity) {
      throw SizeLimitExceeded("more than " + std::to_string(limit) +
                              " pure strategies");
    }
    count *= arity;
  }
  if (count > limit) {
    throw SizeLimitExceeded("more than " + std::to_string(limit) +
                            " pure strategies");
  }
  return count;
}

// Flattened tree for the parallel kernel. Player children are stored in the
// infoset's action order so that a digit selects a child directly.
struct FlatTree {
  struct FlatNode {
    NodeKind kind = NodeKind::kLeaf;
    int slot = -1;             // Player nodes.
    std::vector<int> children; // Flat indices.
    int leaf = -1;             // Leaf nodes: index into weights.
  };
  std::vector<FlatNode> nodes;  // nodes[0] is the root.
  std::vector<mpz_class> weights;
  mpz_class denominator = 1;    // Leaf weight = weights[i] / denominator.
};

FlatTree Flatten(const Game& game, const std::vector<InfosetId>& slots) {
  const GameStructure& structure = game.structure();
  const Alphabet& alphabet = structure.alphabet();
  std::map<InfosetId, int> slot_of;
  for (std::size_t i = 0; i < slots.size(); ++i) slot_of[slots[i]] = i;
  std::vector<Rational> reach = game.ChanceReach();
  std::vector<Rational> leaf_weights;
  FlatTree tree;
  auto visit = [&](auto&& self, NodeId v) -> int {
    const Node& node = structure.node(v);
    int index = tree.nodes.size();
    tree.nodes.emplace_back();
    tree.nodes[index].kind = node.kind;
    std::vector<int> children;
    if (node.kind == NodeKind::kLeaf) {
      tree.nodes[index].leaf = leaf_weights.size();
      leaf_weights.push_back(reach[Index(v)] * game.payoff(v));
    } else if (node.kind == NodeKind::kChance) {
      for (NodeId child : node.children) children.push_back(self(self, child));
    } else {
      tree.nodes[index].slot = slot_of.at(node.infoset);
      for (ActionId a : alphabet.infoset(node.infoset).actions) {
        children.push_back(self(self, ChildFor(node, a)));
      }
    }
    tree.nodes[index].children = std::move(children);
    return index;
  };
  visit(visit, structure.root());
  for (const Rational& w : leaf_weights) {
    mpz_lcm(tree.denominator.get_mpz_t(), tree.denominator.get_mpz_t(),
            w.get_den_mpz_t());
  }
  for (const Rational& w : leaf_weights) {
    tree.weights.push_back(w.get_num() * (tree.denominator / w.get_den()));
  }
  return tree;
}

template <typename Acc>
Acc EvaluateFlat(const FlatTree& tree, const std::vector<Acc>& weights,
                 const std::vector<int>& digits, std::vector<int>& stack) {
  Acc total = 0;
  stack.clear();
  stack.push_back(0);
  while (!stack.empty()) {
    const FlatTree::FlatNode& node = tree.nodes[stack.back()];
    stack.pop_back();
    switch (node.kind) {
      case NodeKind::kLeaf:
        total += weights[node.leaf];
        break;
      case NodeKind::kChance:
        stack.insert(stack.end(), node.children.begin(), node.children.end());
        break;
      case NodeKind::kPlayer:
        stack.push_back(node.children[digits[node.slot]]);
        break;
    }
  }
  return total;
}

void Decode(std::uint64_t k, const std::vector<int>& radix,
            std::vector<int>& digits) {
  for (std::size_t i = radix.size(); i-- > 0;) {
    digits[i] = k % radix[i];
    k /= radix[i];
  }
}

template <typename Acc>
std::pair<Acc, std::uint64_t> SearchParallel(const FlatTree& tree,
                                             const std::vector<Acc>& weights,
                                             const std::vector<int>& radix,
                                             std::uint64_t count) {
  Acc best_value = 0;
  std::uint64_t best_index = count;
#pragma omp parallel
  {
    Acc local_value = 0;
    std::uint64_t local_index = count;
    std::vector<int> digits(radix.size());
    std::vector<int> stack;
#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(count); ++k) {
      Decode(k, radix, digits);
      Acc value = EvaluateFlat(tree, weights, digits, stack);
      if (local_index == count || value > local_value) {
        local_value = value;
        local_index = k;
      }
    }
#pragma omp critical
    {
      if (local_index != count &&
          (best_index == count || local_value > best_value ||
           (local_value == best_value && local_index < best_index))) {
        best_value = local_value;
        best_index = local_index;
      }
    }
  }
  return {best_value, best_index};
}

PureStrategy StrategyFromIndex(const Alphabet& alphabet,
                               const std::vector<InfosetId>& slots,
                               const std::vector<int>& radix,
                               std::uint64_t index) {
  std::vector<int> digits(radix.size());
  Decode(index, radix, digits);
  PureStrategy strategy = FirstActionStrategy(alphabet);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    strategy[Index(slots[i])] = alphabet.infoset(slots[i]).actions[digits[i]];
  }
  return strategy;
}

Rational EvaluateAt(const Game& game, const PureStrategy& strategy, NodeId v) {
  const Node& node = game.structure().node(v);
  switch (node.kind) {
    case NodeKind::kLeaf:
      return game.payoff(v);
    case NodeKind::kPlayer:
      return EvaluateAt(game, strategy,
                        ChildFor(node, strategy[Index(node.infoset)]));
    case NodeKind::kChance: {
      Rational total = 0;
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        total += game.chance_probs(v)[i] *
                 EvaluateAt(game, strategy, node.children[i]);
      }
      return total;
    }
  }
  return 0;
}

std::string HistoryTag(const Alphabet& alphabet, const Sequence& history) {
  std::string tag;
  for (std::size_t i = 0; i < history.size(); ++i) {
    if (i > 0) tag += '.';
    tag += alphabet.Label(history[i]);
  }
  return tag;
}

Solution SolveThroughSpan(const Game& game) {
  SpanCertificate certificate =
      MinimalSpan(ExtractHistories(game.structure(), Player::kMax));
  TransformedGame transformed = TransferPayoffs(game, certificate);
  return SolveAlr(transformed.game);
}

}  // namespace

PureStrategy FirstActionStrategy(const Alphabet& alphabet) {
  PureStrategy strategy(alphabet.num_infosets());
  for (std::size_t i = 0; i < alphabet.num_infosets(); ++i) {
    const auto& actions =
        alphabet.infoset(InfosetId{static_cast<std::int32_t>(i)}).actions;
    if (!actions.empty()) strategy[i] = actions.front();
  }
  return strategy;
}

Rational EvaluatePure(const Game& game, const PureStrategy& strategy) {
  RequireOnePlayer(game.structure());
  return EvaluateAt(game, strategy, game.structure().root());
}

std::size_t MaxPureStrategies() {
  if (const char* text = std::getenv("RECALL_FORGE_MAX_PURE")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(text, &end, 10);
    if (end != text && *end == '\0' && value > 0) return value;
  }
  return kDefaultMaxPure;
}

Solution SolveBruteforce(const Game& game, std::optional<std::size_t> limit) {
  const GameStructure& structure = game.structure();
  RequireSolvable(structure);
  std::vector<InfosetId> slots = DecisionInfosets(structure);
  std::uint64_t count = CountStrategies(structure.alphabet(), slots,
                                        limit.value_or(MaxPureStrategies()));
  std::vector<int> radix;
  for (InfosetId id : slots) {
    radix.push_back(structure.alphabet().infoset(id).actions.size());
  }
  FlatTree tree = Flatten(game, slots);
  mpz_class magnitude = 0;
  for (const mpz_class& w : tree.weights) magnitude += abs(w);
  Solution solution;
  std::uint64_t best_index;
  if (magnitude.fits_slong_p()) {
    std::vector<std::int64_t> weights;
    for (const mpz_class& w : tree.weights) weights.push_back(w.get_si());
    auto [value, index] = SearchParallel(tree, weights, radix, count);
    solution.value = Rational(mpz_class(static_cast<long>(value)), tree.denominator);
    best_index = index;
  } else {
    auto [value, index] = SearchParallel(tree, tree.weights, radix, count);
    solution.value = Rational(value, tree.denominator);
    best_index = index;
  }
  solution.value.canonicalize();
  solution.strategy =
      StrategyFromIndex(structure.alphabet(), slots, radix, best_index);
  return solution;
}

Solution SolveBruteforceSerial(const Game& game,
                               std::optional<std::size_t> limit) {
  const GameStructure& structure = game.structure();
  const Alphabet& alphabet = structure.alphabet();
  RequireSolvable(structure);
  std::vector<InfosetId> slots = DecisionInfosets(structure);
  CountStrategies(alphabet, slots, limit.value_or(MaxPureStrategies()));
  std::vector<std::size_t> digits(slots.size(), 0);
  PureStrategy current = FirstActionStrategy(alphabet);
  std::optional<Solution> best;
  while (true) {
    for (std::size_t i = 0; i < slots.size(); ++i) {
      current[Index(slots[i])] = alphabet.infoset(slots[i]).actions[digits[i]];
    }
    Rational value = EvaluatePure(game, current);
    if (!best || value > best->value) best = Solution{value, current};
    std::size_t i = slots.size();
    while (i > 0) {
      --i;
      if (++digits[i] < alphabet.infoset(slots[i]).actions.size()) break;
      digits[i] = 0;
      if (i == 0) return *best;
    }
    if (slots.empty()) return *best;
  }
}

Refinement RefineAlr(const GameStructure& structure) {
  RecallClass recall = ClassifyRecall(structure, Player::kMax);
  if (recall != RecallClass::kPfr && recall != RecallClass::kAlr) {
    throw InvalidInput("refinement needs A-loss recall for max");
  }
  const Alphabet& alphabet = structure.alphabet();
  std::map<std::pair<InfosetId, Sequence>, InfosetId> refined_of;
  std::vector<std::pair<InfosetId, Sequence>> keys;
  std::vector<Sequence> history(structure.num_nodes());
  for (NodeId v : structure.Preorder()) {
    const Node& node = structure.node(v);
    if (!IsMaxNode(alphabet, node)) continue;
    history[Index(v)] = History(structure, v, Player::kMax);
    keys.emplace_back(node.infoset, history[Index(v)]);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  auto refined = std::make_shared<Alphabet>();
  Refinement result;
  std::vector<InfosetId> min_copy(alphabet.num_infosets());
  for (std::size_t i = 0; i < alphabet.num_infosets(); ++i) {
    InfosetId original{static_cast<std::int32_t>(i)};
    const InfosetInfo& info = alphabet.infoset(original);
    std::vector<std::string> labels;
    if (info.owner == Player::kMin) {
      for (ActionId a : info.actions) labels.push_back(alphabet.Label(a));
      min_copy[i] = refined->AddInfoset(info.id, info.owner, labels);
      result.original_of.push_back(original);
      continue;
    }
    for (const auto& key : keys) {
      if (key.first != original) continue;
      std::string tag = HistoryTag(alphabet, key.second);
      labels.clear();
      for (ActionId a : info.actions) labels.push_back(alphabet.Label(a) + "@" + tag);
      refined_of[key] = refined->AddInfoset(info.id + "@" + tag, info.owner, labels);
      result.original_of.push_back(original);
    }
  }
  std::vector<Node> nodes;
  for (std::size_t v = 0; v < structure.num_nodes(); ++v) {
    Node node = structure.node(NodeId{static_cast<std::int32_t>(v)});
    if (node.kind == NodeKind::kPlayer) {
      InfosetId target = IsMaxNode(alphabet, node)
                             ? refined_of.at({node.infoset, history[v]})
                             : min_copy[Index(node.infoset)];
      for (ActionId& a : node.actions) {
        a = refined->infoset(target).actions[alphabet.ActionIndex(a)];
      }
      node.infoset = target;
    }
    nodes.push_back(std::move(node));
  }
  result.structure = GameStructure(refined, std::move(nodes), structure.root());
  return result;
}

Solution SolveAlr(const Game& game) {
  const GameStructure& structure = game.structure();
  const Alphabet& alphabet = structure.alphabet();
  RequireOnePlayer(structure);
  RecallClass recall = ClassifyRecall(structure, Player::kMax);
  if (recall != RecallClass::kPfr && recall != RecallClass::kAlr) {
    throw InvalidInput("SolveAlr expects PFR or ALR recall, got " +
                       std::string(RecallClassName(recall)));
  }
  Refinement refinement = RefineAlr(structure);
  const GameStructure& refined = refinement.structure;
  const Alphabet& refined_alphabet = refined.alphabet();
  std::vector<Rational> reach = game.ChanceReach();

  // Refined infosets by decreasing history length; their nodes in preorder.
  std::vector<std::vector<NodeId>> members(refined_alphabet.num_infosets());
  std::vector<std::size_t> depth(refined_alphabet.num_infosets(), 0);
  for (NodeId v : refined.Preorder()) {
    const Node& node = refined.node(v);
    if (node.kind != NodeKind::kPlayer) continue;
    members[Index(node.infoset)].push_back(v);
    depth[Index(node.infoset)] = History(refined, v, Player::kMax).size();
  }
  std::vector<std::size_t> order(members.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return depth[a] > depth[b];
  });

  std::vector<std::size_t> choice(members.size(), 0);
  std::vector<std::optional<Rational>> memo(refined.num_nodes());
  auto value_of = [&](auto&& self, NodeId v) -> const Rational& {
    std::optional<Rational>& slot = memo[Index(v)];
    if (slot) return *slot;
    const Node& node = refined.node(v);
    Rational value = 0;
    if (node.kind == NodeKind::kLeaf) {
      value = game.payoff(v);
    } else if (node.kind == NodeKind::kChance) {
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        value += game.chance_probs(v)[i] * self(self, node.children[i]);
      }
    } else {
      ActionId a = refined_alphabet.infoset(node.infoset)
                       .actions[choice[Index(node.infoset)]];
      value = self(self, ChildFor(node, a));
    }
    slot = std::move(value);
    return *slot;
  };
  for (std::size_t r : order) {
    if (members[r].empty()) continue;
    const auto& actions =
        refined_alphabet.infoset(InfosetId{static_cast<std::int32_t>(r)}).actions;
    std::optional<Rational> best;
    for (std::size_t i = 0; i < actions.size(); ++i) {
      Rational total = 0;
      for (NodeId v : members[r]) {
        total += reach[Index(v)] *
                 value_of(value_of, ChildFor(refined.node(v), actions[i]));
      }
      if (!best || total > *best) {
        best = total;
        choice[r] = i;
      }
    }
  }

  // Top-down projection: at most one refined class per infoset is reached.
  Solution solution;
  solution.strategy = FirstActionStrategy(alphabet);
  std::vector<NodeId> stack = {refined.root()};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    const Node& node = refined.node(v);
    if (node.kind == NodeKind::kChance) {
      stack.insert(stack.end(), node.children.begin(), node.children.end());
    } else if (node.kind == NodeKind::kPlayer) {
      std::size_t i = choice[Index(node.infoset)];
      InfosetId original = refinement.original_of[Index(node.infoset)];
      solution.strategy[Index(original)] = alphabet.infoset(original).actions[i];
      stack.push_back(ChildFor(node, refined_alphabet.infoset(node.infoset).actions[i]));
    }
  }
  solution.value = value_of(value_of, refined.root());
  if (EvaluatePure(game, solution.strategy) != solution.value) {
    throw std::logic_error("projected strategy disagrees with the refinement");
  }
  return solution;
}

std::optional<SolveMethod> ParseSolveMethod(std::string_view name) {
  if (name == "auto") return SolveMethod::kAuto;
  if (name == "bruteforce") return SolveMethod::kBruteforce;
  if (name == "span") return SolveMethod::kSpan;
  return std::nullopt;
}

Solution Solve(const Game& game, SolveMethod method) {
  RequireSolvable(game.structure());
  if (method == SolveMethod::kBruteforce) return SolveBruteforce(game);
  if (method == SolveMethod::kAuto) {
    switch (ClassifyRecall(game.structure(), Player::kMax)) {
      case RecallClass::kPfr:
      case RecallClass::kAlr:
        return SolveAlr(game);
      case RecallClass::kAbsentminded:
      case RecallClass::kNamNotAlr:
        break;
    }
  }
  Solution solution = SolveThroughSpan(game);
  // Infosets missing from the span keep the first action.
  if (EvaluatePure(game, solution.strategy) != solution.value) {
    throw std::logic_error("span strategy disagrees with the span value");
  }
  return solution;
}

}  // namespace recall_forge
