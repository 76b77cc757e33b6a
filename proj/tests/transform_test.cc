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


#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.h"
#include "recall_forge/generators.h"
#include "recall_forge/polynomial.h"
#include "recall_forge/recall.h"
#include "recall_forge/span.h"
#include "recall_forge/transform.h"
#include "reference_games.h"

namespace recall_forge {
namespace {

Sequence Labels(const Alphabet& alphabet, std::initializer_list<const char*> labels) {
  Sequence seq;
  for (const char* label : labels) seq.push_back(*alphabet.FindAction(label));
  return seq;
}

std::optional<NodeId> LeafWithHistory(const GameStructure& structure,
                                      const Sequence& history) {
  for (NodeId leaf : structure.Leaves()) {
    if (History(structure, leaf) == history) return leaf;
  }
  return std::nullopt;
}

bool IsAlrClass(RecallClass recall) {
  return recall == RecallClass::kPfr || recall == RecallClass::kAlr;
}

TEST_CASE("single payoff spreads over its two generators") {
  Rational p1(1, 2);
  std::vector<Rational> z(8, 0);
  z[0] = 1;  // Leaf after a then c.
  Game game = testing::CrossedGame(p1, 1 - p1, z);
  const Alphabet& alphabet = game.alphabet();
  SequenceSet histories = ExtractHistories(game.structure(), Player::kMax);
  std::optional<SpanCertificate> certificate = VerifySpan(
      histories, testing::CrossedFullSpan(game.structure().alphabet_ptr()));
  REQUIRE(certificate.has_value());
  TransformedGame transformed = TransferPayoffs(game, *certificate);
  const GameStructure& target = transformed.game.structure();
  CHECK(target.Leaves().size() == 16);
  for (const char* d : {"d", "dbar"}) {
    std::optional<NodeId> leaf =
        LeafWithHistory(target, Labels(alphabet, {"c", d, "a"}));
    REQUIRE(leaf.has_value());
    CHECK(transformed.game.payoff(*leaf) == 2 * p1 * z[0]);
    CHECK(transformed.game.payoff(*leaf) == 1);
  }
  Rational total = 0;
  for (NodeId leaf : target.Leaves()) total += transformed.game.payoff(leaf);
  CHECK(total == 2);
  CHECK(PolyEqualUnderConstraints(PayoffPolynomial(game),
                                  PayoffPolynomial(transformed.game)));
}

TEST_CASE("identity certificate keeps the payoff polynomial") {
  Game pennies = GenPennies(PenniesVariant::kI, 3);
  SequenceSet histories = ExtractHistories(pennies.structure(), Player::kMax);
  std::optional<SpanCertificate> certificate = VerifySpan(histories, histories);
  REQUIRE(certificate.has_value());
  Game transformed = TransferPayoffs(pennies, *certificate).game;
  CHECK(PolyEqualUnderConstraints(PayoffPolynomial(pennies),
                                  PayoffPolynomial(transformed)));
}

TEST_CASE("pennies with keyed second player becomes ALR") {
  Game pennies = GenPennies(PenniesVariant::kIII, 3);
  SpanCertificate certificate =
      MinimalSpan(ExtractHistories(pennies.structure(), Player::kMax));
  TransformedGame transformed = TransferPayoffs(pennies, certificate);
  CHECK(IsAlrClass(ClassifyRecall(transformed.game.structure(), Player::kMax)));
  CHECK(PolyEqualUnderConstraints(PayoffPolynomial(pennies),
                                  PayoffPolynomial(transformed.game)));
  std::size_t traced = 0;
  for (const auto& entries : transformed.payoff_trace) traced += entries.size();
  CHECK(traced > 0);
}

TEST_CASE("two-player transfer rejects one-player certificates") {
  Game game = testing::TwoPlayerShuffleGame();
  SpanCertificate max_span =
      MinimalSpan(ExtractHistories(game.structure(), Player::kMax));
  CHECK_THROWS_AS(TransferPayoffs(game, max_span), InvalidInput);
}

TEST_CASE("composition of the two-player shuffle game") {
  Game game = testing::TwoPlayerShuffleGame();
  const GameStructure& structure = game.structure();
  SpanCertificate max_span = MinimalSpan(ExtractHistories(structure, Player::kMax));
  SpanCertificate min_span = MinimalSpan(ExtractHistories(structure, Player::kMin));
  CHECK(max_span.span.size() == 2);
  CHECK(min_span.span ==
        testing::ShuffledWitness(structure.alphabet_ptr()));
  TransformedGame composed = ComposeTwoPlayer(game, max_span, min_span);
  const GameStructure& out = composed.game.structure();
  CHECK(out.Leaves().size() == 16);
  CHECK(out.node(out.root()).kind == NodeKind::kPlayer);
  CHECK(out.alphabet().infoset(out.node(out.root()).infoset).id == "D");
  int nonzero = 0;
  for (NodeId leaf : out.Leaves()) {
    const auto& trace = composed.payoff_trace[Index(leaf)];
    if (trace.empty()) {
      CHECK(composed.game.payoff(leaf) == 0);
      continue;
    }
    ++nonzero;
    REQUIRE(trace.size() == 1);
    CHECK(composed.game.payoff(leaf) == 2 * game.payoff(trace[0].source_leaf));
  }
  CHECK(nonzero == 8);
  CHECK(PolyEqualUnderConstraints(PayoffPolynomial(game),
                                  PayoffPolynomial(composed.game)));
}

TEST_CASE("composition with identity certificates") {
  Game game = testing::TwoPlayerShuffleGame();
  // The composed game is ALR for both players, so identity certificates apply.
  const GameStructure& structure = game.structure();
  Game composed = ComposeTwoPlayer(
      game, MinimalSpan(ExtractHistories(structure, Player::kMax)),
      MinimalSpan(ExtractHistories(structure, Player::kMin))).game;
  const GameStructure& alr = composed.structure();
  SequenceSet max_histories = ExtractHistories(alr, Player::kMax);
  SequenceSet min_histories = ExtractHistories(alr, Player::kMin);
  std::optional<SpanCertificate> max_identity = VerifySpan(max_histories, max_histories);
  std::optional<SpanCertificate> min_identity = VerifySpan(min_histories, min_histories);
  REQUIRE(max_identity.has_value());
  REQUIRE(min_identity.has_value());
  Game again = ComposeTwoPlayer(composed, *max_identity, *min_identity).game;
  CHECK(again.structure().Leaves().size() ==
        max_histories.size() * min_histories.size());
  CHECK(PolyEqualUnderConstraints(PayoffPolynomial(composed),
                                  PayoffPolynomial(again)));
}

// Properties.

TEST_CASE("transferred payoffs stay small and keep the polynomial") {
  std::mt19937_64 rng(43);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    RandomGameParams params;
    params.seed = 300 + seed;
    params.depth = 2 + static_cast<int>(seed % 5);
    Game game = GenRandom(params);
    SpanCertificate certificate =
        MinimalSpan(ExtractHistories(game.structure(), Player::kMax));
    TransformedGame transformed = TransferPayoffs(game, certificate);
    const GameStructure& target = transformed.game.structure();
    CHECK(IsAlrClass(ClassifyRecall(target, Player::kMax)));
    CHECK(testing::AgreeOnPolytope(PayoffPolynomial(game),
                                   PayoffPolynomial(transformed.game), 2, rng));
    std::size_t leaves = target.Leaves().size();
    std::size_t log_leaves =
        static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(leaves))));
    for (NodeId leaf : target.Leaves()) {
      Rational weighted = 0;
      for (const PayoffContribution& entry : transformed.payoff_trace[Index(leaf)]) {
        weighted += entry.coefficient * entry.chance_weight * game.payoff(entry.source_leaf);
      }
      CHECK(BitLength(transformed.game.payoff(leaf)) <=
            BitLength(weighted) + log_leaves + 1);
    }
  }
}

TEST_CASE("random two-player compositions") {
  std::mt19937_64 rng(47);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    RandomGameParams params;
    params.seed = 700 + seed;
    params.depth = 2 + static_cast<int>(seed % 4);
    params.players = 2;
    Game game = GenRandom(params);
    const GameStructure& structure = game.structure();
    SpanCertificate max_span = MinimalSpan(ExtractHistories(structure, Player::kMax));
    SpanCertificate min_span = MinimalSpan(ExtractHistories(structure, Player::kMin));
    Game composed = ComposeTwoPlayer(game, max_span, min_span).game;
    CHECK(composed.structure().Leaves().size() ==
          max_span.span.size() * min_span.span.size());
    for (Player player : {Player::kMax, Player::kMin}) {
      CHECK(IsAlrClass(ClassifyRecall(composed.structure(), player)));
    }
    CHECK(testing::AgreeOnPolytope(PayoffPolynomial(game), PayoffPolynomial(composed),
                                   2, rng));
  }
}

}  // namespace
}  // namespace recall_forge
