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

#ifndef RECALL_FORGE_POLYNOMIAL_H_
#define RECALL_FORGE_POLYNOMIAL_H_

#include <map>
#include <string>
#include <vector>

#include "recall_forge/alphabet.h"
#include "recall_forge/game.h"
#include "recall_forge/rational.h"

namespace recall_forge {

// A set of action variables, sorted by id. Multilinear by construction.
using Monomial = std::vector<ActionId>;

Monomial MakeMonomial(std::vector<ActionId> actions);

// Sparse multilinear polynomial with exact coefficients. Zero terms are
// never stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }

  void AddTerm(const Monomial& monomial, const Rational& coefficient);

  // point[a] is the value of variable a.
  Rational Evaluate(const std::vector<Rational>& point) const;

  // Terms sorted by their label lists, e.g. "1 + 1/3*H_A0*H_B - 2*T_B".
  std::string ToString() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);

 private:
  AlphabetPtr alphabet_;
  std::map<Monomial, Rational> terms_;
};

// Actions on the root path of the leaf, all players.
Monomial LeafMonomial(const GameStructure& structure, NodeId leaf);
// One entry per leaf, in GameStructure::Leaves order.
std::vector<std::pair<NodeId, Monomial>> LeafMonomials(
    const GameStructure& structure);

// Sum over leaves of chance reach times payoff times the leaf monomial.
Polynomial PayoffPolynomial(const Game& game);

// Replaces the last action of every infoset by one minus the others and
// expands. Equal on the strategy polytope iff canonical forms coincide.
Polynomial Canonicalize(const Polynomial& poly);

bool PolyEqualUnderConstraints(const Polynomial& a, const Polynomial& b);

}  // namespace recall_forge

#endif  // RECALL_FORGE_POLYNOMIAL_H_
