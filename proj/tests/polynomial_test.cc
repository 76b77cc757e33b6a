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

#include <random>
#include <set>

#include "oracles.h"
#include "recall_forge/generators.h"
#include "recall_forge/polynomial.h"
#include "recall_forge/span.h"
#include "reference_games.h"

namespace recall_forge {
namespace {

Monomial Vars(const Alphabet& alphabet, std::initializer_list<const char*> labels) {
  std::vector<ActionId> actions;
  for (const char* label : labels) actions.push_back(*alphabet.FindAction(label));
  return MakeMonomial(actions);
}

std::set<Monomial> MonomialSet(const GameStructure& structure) {
  std::set<Monomial> out;
  for (const auto& [leaf, monomial] : LeafMonomials(structure)) out.insert(monomial);
  return out;
}

Polynomial RandomPolynomial(const AlphabetPtr& alphabet, std::mt19937_64& rng) {
  Polynomial poly(alphabet);
  int terms = 1 + static_cast<int>(rng() % 6);
  for (int t = 0; t < terms; ++t) {
    std::vector<ActionId> actions;
    for (std::size_t i = 0; i < alphabet->num_infosets(); ++i) {
      const InfosetInfo& info =
          alphabet->infoset(InfosetId{static_cast<std::int32_t>(i)});
      std::size_t pick = rng() % (info.actions.size() + 1);
      if (pick < info.actions.size()) actions.push_back(info.actions[pick]);
    }
    poly.AddTerm(MakeMonomial(actions),
                 Rational(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3));
  }
  return poly;
}

TEST_CASE("leaf monomials of reference structures") {
  GameStructure tree = testing::PerfectRecallTree();
  const Alphabet& alphabet = tree.alphabet();
  CHECK(MonomialSet(tree) ==
        std::set<Monomial>{Vars(alphabet, {"a", "c"}), Vars(alphabet, {"a", "d"}),
                           Vars(alphabet, {"b", "e"}), Vars(alphabet, {"b", "f"})});

  GameStructure forgetful = testing::ForgetfulShuffleGame().structure();
  GameStructure shuffled = StructureFromSequences(
      testing::ShuffledWitness(forgetful.alphabet_ptr()));
  CHECK(MonomialSet(forgetful).size() == 8);
  CHECK(MonomialSet(forgetful) == MonomialSet(shuffled));

  auto empty = std::make_shared<Alphabet>();
  GameBuilder builder(empty);
  CHECK(MonomialSet(builder.BuildStructure(builder.AddLeaf())) ==
        std::set<Monomial>{Monomial{}});
}

TEST_CASE("payoff polynomial coefficients") {
  Game pennies = GenPennies(PenniesVariant::kI, 3);
  Polynomial poly = PayoffPolynomial(pennies);
  CHECK(poly.terms().at(Vars(pennies.alphabet(), {"H_A0", "H_B"})) == Rational(2, 3));

  Game zero = GenLowerboundGame(3);
  CHECK(PayoffPolynomial(zero).IsZero());
  CHECK(PayoffPolynomial(zero).ToString() == "0");

  std::vector<Rational> z(8, 0);
  z[0] = 1;
  Game crossed = testing::CrossedGame(Rational(1, 2), Rational(1, 2), z);
  Polynomial crossed_poly = PayoffPolynomial(crossed);
  CHECK(crossed_poly.terms().size() == 1);
  CHECK(crossed_poly.terms().at(Vars(crossed.alphabet(), {"a", "c"})) ==
        Rational(1, 2));
}

TEST_CASE("polynomial text form") {
  Game pennies = GenPennies(PenniesVariant::kI, 2);
  const Alphabet& alphabet = pennies.alphabet();
  Polynomial poly(pennies.structure().alphabet_ptr());
  poly.AddTerm(Vars(alphabet, {"H_A0", "H_B"}), Rational(1, 3));
  poly.AddTerm(Vars(alphabet, {"T_B"}), -2);
  poly.AddTerm({}, 1);
  CHECK(poly.ToString() == "1 + 1/3*H_A0*H_B - 2*T_B");
  poly.AddTerm(Vars(alphabet, {"T_B"}), 2);
  CHECK(poly.ToString() == "1 + 1/3*H_A0*H_B");
}

TEST_CASE("canonical form eliminates the last action of each infoset") {
  Game crossed = testing::CrossedGame();
  const AlphabetPtr& alphabet = crossed.structure().alphabet_ptr();
  Polynomial sum(alphabet);
  for (const char* x : {"a", "abar"}) {
    for (const char* y : {"c", "cbar"}) {
      sum.AddTerm(Vars(*alphabet, {x, "d", y}), 1);
    }
  }
  Polynomial d(alphabet);
  d.AddTerm(Vars(*alphabet, {"d"}), 1);
  CHECK(Canonicalize(sum) == d);
  CHECK(Canonicalize(d) == d);
  CHECK(PolyEqualUnderConstraints(sum, d));

  Polynomial p = PayoffPolynomial(crossed);
  Polynomial plus = p;
  plus.AddTerm(Vars(*alphabet, {"a"}), 1);
  CHECK_FALSE(PolyEqualUnderConstraints(p, plus));

  Polynomial widened(alphabet);
  ActionId a = *alphabet->FindAction("a");
  ActionId abar = *alphabet->FindAction("abar");
  for (const auto& [monomial, coefficient] : p.terms()) {
    for (ActionId extra : {a, abar}) {
      if (std::find(monomial.begin(), monomial.end(), a) != monomial.end() ||
          std::find(monomial.begin(), monomial.end(), abar) != monomial.end()) {
        continue;
      }
      std::vector<ActionId> vars = monomial;
      vars.push_back(extra);
      widened.AddTerm(MakeMonomial(vars), coefficient);
    }
  }
  // Terms that already used I1 are kept as they are.
  for (const auto& [monomial, coefficient] : p.terms()) {
    if (std::find(monomial.begin(), monomial.end(), a) != monomial.end() ||
        std::find(monomial.begin(), monomial.end(), abar) != monomial.end()) {
      widened.AddTerm(monomial, coefficient);
    }
  }
  CHECK(PolyEqualUnderConstraints(p, widened));
}

TEST_CASE("strongly branching sums canonicalize to one") {
  Game crossed = testing::CrossedGame();
  SequenceSet full = testing::CrossedFullSpan(crossed.structure().alphabet_ptr());
  Polynomial sum(crossed.structure().alphabet_ptr());
  for (const Sequence& seq : full) sum.AddTerm(MakeMonomial(seq), 1);
  Polynomial one(crossed.structure().alphabet_ptr());
  one.AddTerm({}, 1);
  CHECK(IsStronglyBranching(full) == false);
  CHECK_FALSE(Canonicalize(sum) == one);

  SequenceSet full_tree = CanonicalFullSpan(
      crossed.structure().alphabet_ptr(),
      {InfosetId{0}, InfosetId{2}, InfosetId{3}});
  Polynomial tree_sum(crossed.structure().alphabet_ptr());
  for (const Sequence& seq : full_tree) tree_sum.AddTerm(MakeMonomial(seq), 1);
  CHECK(IsStronglyBranching(full_tree));
  CHECK(Canonicalize(tree_sum) == one);
}

// Properties.

TEST_CASE("strongly branching iff the monomials sum to one") {
  std::mt19937_64 rng(19);
  int branching = 0;
  for (int i = 0; i < 200; ++i) {
    AlphabetPtr alphabet = testing::BinaryAlphabet(2 + i % 5);
    SequenceSet set = testing::RandomTreeSet(alphabet, rng);
    bool sb = IsStronglyBranching(set);
    CHECK(sb == testing::SumsToOneOnPolytope(set, 3, rng));
    Polynomial sum(alphabet);
    for (const Sequence& seq : set) sum.AddTerm(MakeMonomial(seq), 1);
    Polynomial one(alphabet);
    one.AddTerm({}, 1);
    CHECK(sb == (Canonicalize(sum) == one));
    branching += sb;
  }
  CHECK(branching > 20);
  CHECK(branching < 180);
}

TEST_CASE("payoff polynomial evaluates to the expected payoff") {
  std::mt19937_64 rng(21);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomGameParams params;
    params.seed = seed;
    params.depth = 2 + static_cast<int>(seed % 4);
    params.players = 1 + static_cast<int>(seed % 2);
    Game game = GenRandom(params);
    Polynomial poly = PayoffPolynomial(game);
    for (int t = 0; t < 3; ++t) {
      std::vector<Rational> point = testing::RandomPolytopePoint(game.alphabet(), rng);
      CHECK(poly.Evaluate(point) == testing::ExpectedPayoff(game, point));
    }
  }
}

TEST_CASE("canonicalization is sound on the polytope") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 10; ++i) {
    RandomGameParams params;
    params.seed = static_cast<std::uint64_t>(100 + i);
    Game game = GenRandom(params);
    Polynomial poly = PayoffPolynomial(game);
    Polynomial canonical = Canonicalize(poly);
    CHECK(Canonicalize(canonical) == canonical);
    CHECK(testing::AgreeOnPolytope(poly, canonical, 200, rng));
  }
}

TEST_CASE("distinct canonical forms are separated by a polytope point") {
  std::mt19937_64 rng(29);
  int separated = 0;
  for (int i = 0; i < 200; ++i) {
    AlphabetPtr alphabet = testing::BinaryAlphabet(3);
    Polynomial p = RandomPolynomial(alphabet, rng);
    Polynomial q = RandomPolynomial(alphabet, rng);
    bool equal = PolyEqualUnderConstraints(p, q);
    bool agree = testing::AgreeOnPolytope(p, q, 5, rng);
    CHECK(equal == agree);
    separated += !equal;
  }
  CHECK(separated > 0);
}

}  // namespace
}  // namespace recall_forge
