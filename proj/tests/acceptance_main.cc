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

// Acceptance checks. Prints one PASS/FAIL line per criterion. Exits nonzero
// when a criterion fails that was not listed with --expect-fail.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "recall_forge/generators.h"
#include "recall_forge/polynomial.h"
#include "recall_forge/recall.h"
#include "recall_forge/sequence_set.h"
#include "recall_forge/shuffle.h"
#include "recall_forge/solver.h"
#include "recall_forge/span.h"
#include "recall_forge/transform.h"
#include "reference_games.h"

namespace recall_forge {
namespace {

// Pinned limits. Values are exact rationals, so there is no numeric
// tolerance anywhere below.
constexpr double kPenniesSecondsPerSolve = 1.0;
constexpr double kLowerboundSecondsAtTen = 30.0;
constexpr int kQuadraticConstant = 4;
constexpr int kSoundnessGames = 500;
constexpr int kMinimalityCases = 200;
constexpr int kEquivalenceStructures = 500;
constexpr int kBranchingSets = 200;
constexpr int kAlrGames = 500;
constexpr int kTwoPlayerGames = 100;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool IsAlrClass(RecallClass recall) {
  return recall == RecallClass::kPfr || recall == RecallClass::kAlr;
}

// Appends a failure note, keeping at most a few for readability.
void Fail(Outcome& outcome, const std::string& note) {
  if (outcome.pass || outcome.detail.size() < 400) {
    outcome.detail += (outcome.pass ? "" : "; ") + note;
  }
  outcome.pass = false;
}

const char* VariantName(PenniesVariant variant) {
  switch (variant) {
    case PenniesVariant::kI:
      return "I";
    case PenniesVariant::kII:
      return "II";
    case PenniesVariant::kIII:
      return "III";
  }
  return "?";
}

Outcome PenniesValues() {
  Outcome outcome;
  double slowest = 0;
  for (PenniesVariant variant :
       {PenniesVariant::kI, PenniesVariant::kII, PenniesVariant::kIII}) {
    Game game = GenPennies(variant, 3);
    for (SolveMethod method : {SolveMethod::kBruteforce, SolveMethod::kAuto}) {
      Clock::time_point start = Clock::now();
      Solution solution = Solve(game, method);
      double seconds = SecondsSince(start);
      slowest = std::max(slowest, seconds);
      std::string tag = std::string(VariantName(variant)) +
                        (method == SolveMethod::kAuto ? "/auto" : "/bruteforce");
      if (solution.value != Rational(2, 3)) {
        Fail(outcome, tag + " value " + RationalToString(solution.value));
      }
      if (seconds >= kPenniesSecondsPerSolve) Fail(outcome, tag + " too slow");
    }
  }
  if (outcome.pass) {
    outcome.detail = "all six solves return 2/3, slowest " +
                     std::to_string(slowest * 1000) + " ms";
  }
  return outcome;
}

Outcome ClassificationLadder() {
  Outcome outcome;
  for (int n = 2; n <= 6; ++n) {
    GameStructure one = GenPennies(PenniesVariant::kI, n).structure();
    RecallClass recall_one = ClassifyRecall(one, Player::kMax);
    if (!IsAlrClass(recall_one)) {
      Fail(outcome, "I n=" + std::to_string(n) + " is " +
                        std::string(RecallClassName(recall_one)));
    }
    GameStructure two = GenPennies(PenniesVariant::kII, n).structure();
    RecallClass recall_two = ClassifyRecall(two, Player::kMax);
    bool salr_two =
        SalrWitness(ExtractHistories(two, Player::kMax)).has_salr;
    if (recall_two != RecallClass::kNamNotAlr || !salr_two) {
      Fail(outcome, "II n=" + std::to_string(n) + " is " +
                        std::string(RecallClassName(recall_two)) +
                        (salr_two ? " with s-alr" : " without s-alr"));
    }
    SequenceSet three =
        ExtractHistories(GenPennies(PenniesVariant::kIII, n).structure(),
                         Player::kMax);
    bool salr_three = SalrWitness(three).has_salr;
    int depth = ShuffleDepth(three);
    if (salr_three || depth != 2) {
      Fail(outcome, "III n=" + std::to_string(n) + (salr_three ? " has" : " lacks") +
                        " s-alr, SD " + std::to_string(depth));
    }
  }
  if (outcome.pass) outcome.detail = "n = 2..6 as required";
  return outcome;
}

Outcome WitnessExample() {
  Outcome outcome;
  Game game = testing::ForgetfulShuffleGame();
  const GameStructure& structure = game.structure();
  SalrResult result = SalrWitness(ExtractHistories(structure, Player::kMax));
  SequenceSet expected = testing::ShuffledWitness(structure.alphabet_ptr());
  if (!result.has_salr || !(*result.witness == expected)) {
    Fail(outcome, "witness " +
                      (result.witness ? result.witness->ToString() : "none"));
    return outcome;
  }
  ShuffleResult shuffled = ShuffleStructure(structure);
  auto monomials = [](const GameStructure& s) {
    std::set<Monomial> out;
    for (const auto& [leaf, monomial] : LeafMonomials(s)) out.insert(monomial);
    return out;
  };
  if (monomials(structure) != monomials(*shuffled.structure)) {
    Fail(outcome, "leaf monomials differ after reconstruction");
  }
  if (outcome.pass) {
    outcome.detail = "witness " + expected.ToString() +
                     ", leaf monomials preserved";
  }
  return outcome;
}

Outcome NegativeSalr() {
  Outcome outcome;
  SequenceSet histories =
      ExtractHistories(testing::CrossedGame().structure(), Player::kMax);
  bool witness = SalrWitness(histories).has_salr;
  bool oracle = SalrBruteforceOracle(histories);
  if (witness || oracle) {
    Fail(outcome, std::string("witness says ") + (witness ? "yes" : "no") +
                      ", oracle says " + (oracle ? "yes" : "no"));
  } else {
    outcome.detail = "both procedures report no s-alr";
  }
  return outcome;
}

Outcome LowerBoundGrowth() {
  Outcome outcome;
  double last_seconds = 0;
  for (int n = 1; n <= 10; ++n) {
    Clock::time_point start = Clock::now();
    std::size_t size = MinimalSpan(GenLowerbound(n)).span.size();
    last_seconds = SecondsSince(start);
    if (size != (std::size_t{1} << n)) {
      Fail(outcome, "n=" + std::to_string(n) + " span " + std::to_string(size));
    }
  }
  if (last_seconds >= kLowerboundSecondsAtTen) {
    Fail(outcome, "n=10 took " + std::to_string(last_seconds) + " s");
  }
  if (outcome.pass) {
    outcome.detail = "sizes 2^n for n = 1..10, n=10 in " +
                     std::to_string(last_seconds) + " s";
  }
  return outcome;
}

Outcome CertificateSoundness() {
  Outcome outcome;
  std::mt19937_64 rng(7);
  std::size_t largest = 0;
  int without_alr = 0;
  for (int seed = 0; seed < kSoundnessGames; ++seed) {
    RandomGameParams params;
    params.seed = static_cast<std::uint64_t>(seed);
    params.depth = 3 + seed % 4;
    Game game = GenRandom(params);
    std::string tag = "seed " + std::to_string(seed);
    SequenceSet histories = ExtractHistories(game.structure(), Player::kMax);
    without_alr += !IsAlrSet(histories);
    SpanCertificate minimal = MinimalSpan(histories);
    largest = std::max(largest, minimal.span.size());
    std::optional<SpanCertificate> certificate =
        VerifySpan(histories, minimal.span);
    if (!certificate) {
      Fail(outcome, tag + " span not verified");
      continue;
    }
    if (!testing::CertificateIdentityHolds(*certificate, 2, rng)) {
      Fail(outcome, tag + " certificate identity fails numerically");
    }
    Game transferred = TransferPayoffs(game, *certificate).game;
    if (!PolyEqualUnderConstraints(PayoffPolynomial(game),
                                   PayoffPolynomial(transferred))) {
      Fail(outcome, tag + " payoff polynomial changed");
    }
    Rational span_value = Solve(game, SolveMethod::kSpan).value;
    Rational brute_value = SolveBruteforce(game).value;
    if (span_value != brute_value) {
      Fail(outcome, tag + " span " + RationalToString(span_value) +
                        " vs bruteforce " + RationalToString(brute_value));
    }
  }
  if (outcome.pass) {
    outcome.detail = std::to_string(kSoundnessGames) + " games (" +
                     std::to_string(without_alr) + " without ALR), largest span " +
                     std::to_string(largest);
  }
  return outcome;
}

Outcome MicroMinimality() {
  Outcome outcome;
  std::mt19937_64 rng(11);
  int nontrivial = 0;
  for (int i = 0; i < kMinimalityCases; ++i) {
    AlphabetPtr alphabet = testing::BinaryAlphabet(1 + i % 3);
    SequenceSet set = testing::RandomSet(alphabet, 8, rng);
    std::size_t ours = MinimalSpan(set).span.size();
    std::size_t oracle = MinimalityOracle(set).size();
    if (ours != oracle) {
      Fail(outcome, set.ToString() + ": " + std::to_string(ours) + " vs " +
                        std::to_string(oracle));
    }
    if (ours > set.size()) ++nontrivial;
  }
  if (outcome.pass) {
    outcome.detail = std::to_string(kMinimalityCases) +
                     " sets agree, " + std::to_string(nontrivial) +
                     " needed a larger span";
  }
  return outcome;
}

Outcome StructureSetEquivalence() {
  Outcome outcome;
  int alr = 0;
  for (int seed = 0; seed < kEquivalenceStructures; ++seed) {
    RandomGameParams params;
    params.seed = static_cast<std::uint64_t>(1000 + seed);
    params.depth = 2 + seed % 5;
    params.branching = 2 + seed % 2;
    params.merge_prob = 0.3 + 0.1 * (seed % 6);
    GameStructure structure = GenRandom(params).structure();
    bool by_class = IsAlrClass(ClassifyRecall(structure, Player::kMax));
    bool by_set = IsAlrSet(ExtractHistories(structure, Player::kMax));
    if (by_class != by_set) Fail(outcome, "seed " + std::to_string(1000 + seed));
    alr += by_class;
  }
  if (outcome.pass) {
    outcome.detail = std::to_string(kEquivalenceStructures) + " structures agree (" +
                     std::to_string(alr) + " ALR)";
  }
  return outcome;
}

Outcome BranchingIsConstantOne() {
  Outcome outcome;
  std::mt19937_64 rng(13);
  int branching = 0;
  for (int i = 0; i < kBranchingSets; ++i) {
    AlphabetPtr alphabet = testing::BinaryAlphabet(2 + i % 5);
    SequenceSet set = testing::RandomTreeSet(alphabet, rng);
    Polynomial sum(alphabet);
    for (const Sequence& seq : set) sum.AddTerm(MakeMonomial(seq), 1);
    Polynomial one(alphabet);
    one.AddTerm({}, 1);
    bool sb = IsStronglyBranching(set);
    if (sb != (Canonicalize(sum) == one)) Fail(outcome, set.ToString());
    branching += sb;
  }
  if (outcome.pass) {
    outcome.detail = std::to_string(kBranchingSets) + " sets agree (" +
                     std::to_string(branching) + " strongly branching)";
  }
  return outcome;
}

Outcome AlrSolverEquivalence() {
  Outcome outcome;
  int found = 0;
  std::uint64_t seed = 5000;
  while (found < kAlrGames) {
    RandomGameParams params;
    params.seed = seed;
    params.depth = 3 + static_cast<int>(seed % 4);
    ++seed;
    Game game = GenRandom(params);
    if (ClassifyRecall(game.structure(), Player::kMax) != RecallClass::kAlr) {
      continue;
    }
    ++found;
    Rational alr = SolveAlr(game).value;
    Rational brute = SolveBruteforce(game).value;
    if (alr != brute) {
      Fail(outcome, "seed " + std::to_string(params.seed) + " " +
                        RationalToString(alr) + " vs " + RationalToString(brute));
    }
  }
  if (outcome.pass) {
    outcome.detail = std::to_string(kAlrGames) +
                     " ALR games without perfect recall agree (seeds 5000.." +
                     std::to_string(seed - 1) + ")";
  }
  return outcome;
}

// The composed game of the fixed two-player instance must carry 2*z_i at the
// leaf matching source leaf i and zero elsewhere.
void CheckDoublingPattern(Outcome& outcome) {
  Game game = testing::TwoPlayerShuffleGame();
  const GameStructure& structure = game.structure();
  SpanCertificate max_span =
      MinimalSpan(ExtractHistories(structure, Player::kMax));
  SpanCertificate min_span =
      MinimalSpan(ExtractHistories(structure, Player::kMin));
  TransformedGame composed = ComposeTwoPlayer(game, max_span, min_span);
  std::vector<int> hits(structure.num_nodes(), 0);
  for (NodeId leaf : composed.game.structure().Leaves()) {
    const auto& trace = composed.payoff_trace[Index(leaf)];
    const Rational& payoff = composed.game.payoff(leaf);
    if (trace.empty()) {
      if (payoff != 0) Fail(outcome, "untraced leaf with nonzero payoff");
      continue;
    }
    if (trace.size() != 1) {
      Fail(outcome, "composed leaf fed by several sources");
      continue;
    }
    NodeId source = trace.front().source_leaf;
    ++hits[Index(source)];
    if (payoff != 2 * game.payoff(source)) {
      Fail(outcome, "leaf payoff " + RationalToString(payoff) + " for z=" +
                        RationalToString(game.payoff(source)));
    }
  }
  for (NodeId leaf : structure.Leaves()) {
    if (hits[Index(leaf)] != 1) Fail(outcome, "source leaf not matched once");
  }
}

Outcome TwoPlayerComposition() {
  Outcome outcome;
  for (int seed = 0; seed < kTwoPlayerGames; ++seed) {
    RandomGameParams params;
    params.seed = static_cast<std::uint64_t>(9000 + seed);
    params.depth = 2 + seed % 4;
    params.players = 2;
    Game game = GenRandom(params);
    const GameStructure& structure = game.structure();
    std::string tag = "seed " + std::to_string(params.seed);
    SpanCertificate max_span =
        MinimalSpan(ExtractHistories(structure, Player::kMax));
    SpanCertificate min_span =
        MinimalSpan(ExtractHistories(structure, Player::kMin));
    Game composed = ComposeTwoPlayer(game, max_span, min_span).game;
    std::size_t leaves = composed.structure().Leaves().size();
    if (leaves != max_span.span.size() * min_span.span.size()) {
      Fail(outcome, tag + " has " + std::to_string(leaves) + " leaves");
    }
    for (Player player : {Player::kMax, Player::kMin}) {
      if (!IsAlrClass(ClassifyRecall(composed.structure(), player))) {
        Fail(outcome, tag + " composed player lacks ALR");
      }
    }
    if (!PolyEqualUnderConstraints(PayoffPolynomial(game),
                                   PayoffPolynomial(composed))) {
      Fail(outcome, tag + " payoff polynomial changed");
    }
  }
  CheckDoublingPattern(outcome);
  if (outcome.pass) {
    outcome.detail = std::to_string(kTwoPlayerGames) +
                     " random games compose; fixed instance shows 2*z_i";
  }
  return outcome;
}

Outcome QuadraticSpanGrowth() {
  Outcome outcome;
  std::ostringstream sizes;
  for (int n = 2; n <= 8; ++n) {
    GameStructure structure = GenPennies(PenniesVariant::kIII, n).structure();
    std::size_t input = structure.Leaves().size();
    std::size_t span =
        MinimalSpan(ExtractHistories(structure, Player::kMax)).span.size();
    sizes << (n == 2 ? "" : " ") << span << "/" << input;
    if (span > kQuadraticConstant * input * input) {
      Fail(outcome, "n=" + std::to_string(n) + " span " + std::to_string(span));
    }
  }
  if (outcome.pass) {
    outcome.detail = "span/leaves for n = 2..8: " + sizes.str();
  }
  return outcome;
}

}  // namespace
}  // namespace recall_forge

int main(int argc, char** argv) {
  using recall_forge::Outcome;
  CLI::App app{"Acceptance checks"};
  std::vector<int> expected_failures;
  app.add_option("--expect-fail", expected_failures,
                 "Criteria known to fail; they do not affect the exit code");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria =
      {
          {"pennies values", recall_forge::PenniesValues},
          {"classification ladder", recall_forge::ClassificationLadder},
          {"shuffle witness example", recall_forge::WitnessExample},
          {"negative s-alr", recall_forge::NegativeSalr},
          {"lower-bound growth", recall_forge::LowerBoundGrowth},
          {"span certificate soundness", recall_forge::CertificateSoundness},
          {"micro-scale minimality", recall_forge::MicroMinimality},
          {"structure/set ALR equivalence",
           recall_forge::StructureSetEquivalence},
          {"strongly branching iff constant one",
           recall_forge::BranchingIsConstantOne},
          {"ALR solver equivalence", recall_forge::AlrSolverEquivalence},
          {"two-player composition", recall_forge::TwoPlayerComposition},
          {"quadratic span growth", recall_forge::QuadraticSpanGrowth},
      };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int number = static_cast<int>(i) + 1;
    auto start = recall_forge::Clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    double seconds = recall_forge::SecondsSince(start);
    bool expected = std::find(expected_failures.begin(), expected_failures.end(),
                              number) != expected_failures.end();
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " " << number << " "
              << criteria[i].first << " [" << static_cast<int>(seconds * 1000)
              << " ms]: " << outcome.detail
              << (!outcome.pass && expected ? " (expected)" : "") << std::endl;
    if (!outcome.pass && !expected) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
