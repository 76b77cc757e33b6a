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

#include "recall_forge/polynomial.h"

#include <algorithm>
#include <utility>

#include "recall_forge/recall.h"

namespace recall_forge {

Monomial MakeMonomial(std::vector<ActionId> actions) {
  std::sort(actions.begin(), actions.end());
  actions.erase(std::unique(actions.begin(), actions.end()), actions.end());
  return actions;
}

void Polynomial::AddTerm(const Monomial& monomial,
                         const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(monomial, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

Rational Polynomial::Evaluate(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [monomial, coefficient] : terms_) {
    Rational term = coefficient;
    for (ActionId a : monomial) term *= point[Index(a)];
    total += term;
  }
  return total;
}

std::string Polynomial::ToString() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::vector<std::string>, Rational>> rows;
  for (const auto& [monomial, coefficient] : terms_) {
    std::vector<std::string> labels;
    for (ActionId a : monomial) labels.push_back(alphabet_->Label(a));
    std::sort(labels.begin(), labels.end());
    rows.emplace_back(std::move(labels), coefficient);
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string text;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& [labels, coefficient] = rows[i];
    bool negative = coefficient < 0;
    if (i == 0) {
      if (negative) text += "-";
    } else {
      text += negative ? " - " : " + ";
    }
    text += RationalToString(negative ? Rational(-coefficient) : coefficient);
    for (const std::string& label : labels) text += "*" + label;
  }
  return text;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial result = a;
  if (!result.alphabet_) result.alphabet_ = b.alphabet_;
  for (const auto& [monomial, coefficient] : b.terms_) {
    result.AddTerm(monomial, -coefficient);
  }
  return result;
}

Monomial LeafMonomial(const GameStructure& structure, NodeId leaf) {
  return MakeMonomial(History(structure, leaf));
}

std::vector<std::pair<NodeId, Monomial>> LeafMonomials(
    const GameStructure& structure) {
  std::vector<std::pair<NodeId, Monomial>> result;
  for (NodeId leaf : structure.Leaves()) {
    result.emplace_back(leaf, LeafMonomial(structure, leaf));
  }
  return result;
}

Polynomial PayoffPolynomial(const Game& game) {
  const GameStructure& structure = game.structure();
  std::vector<Rational> reach = game.ChanceReach();
  Polynomial poly(structure.alphabet_ptr());
  for (NodeId leaf : structure.Leaves()) {
    poly.AddTerm(LeafMonomial(structure, leaf),
                 reach[Index(leaf)] * game.payoff(leaf));
  }
  return poly;
}

namespace {

// Expands coefficient * kept * prod over eliminated v of (1 - sum of the
// other actions of v's infoset).
void Expand(const Alphabet& alphabet, const std::vector<ActionId>& eliminated,
            std::size_t next, std::vector<ActionId>& kept,
            const Rational& coefficient, Polynomial& out) {
  if (next == eliminated.size()) {
    out.AddTerm(MakeMonomial(kept), coefficient);
    return;
  }
  ActionId v = eliminated[next];
  Expand(alphabet, eliminated, next + 1, kept, coefficient, out);
  Rational negated = -coefficient;
  for (ActionId other : alphabet.infoset(alphabet.InfosetOf(v)).actions) {
    if (other == v) continue;
    kept.push_back(other);
    Expand(alphabet, eliminated, next + 1, kept, negated, out);
    kept.pop_back();
  }
}

}  // namespace

Polynomial Canonicalize(const Polynomial& poly) {
  Polynomial out(poly.alphabet_ptr());
  if (poly.IsZero()) return out;
  const Alphabet& alphabet = *poly.alphabet_ptr();
  for (const auto& [monomial, coefficient] : poly.terms()) {
    std::vector<ActionId> kept;
    std::vector<ActionId> eliminated;
    for (ActionId a : monomial) {
      (alphabet.IsLastAction(a) ? eliminated : kept).push_back(a);
    }
    Expand(alphabet, eliminated, 0, kept, coefficient, out);
  }
  return out;
}

bool PolyEqualUnderConstraints(const Polynomial& a, const Polynomial& b) {
  return Canonicalize(a - b).IsZero();
}

}  // namespace recall_forge
