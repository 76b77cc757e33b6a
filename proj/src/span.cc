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

#include "recall_forge/span.h"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "recall_forge/shuffle.h"
#include "set_key.h"

namespace recall_forge {
namespace {

SequenceSet WithoutEmpty(const SequenceSet& set) {
  std::vector<Sequence> rest(set.begin() + (set.ContainsEmpty() ? 1 : 0),
                             set.end());
  return SequenceSet::FromSortedUnique(set.alphabet_ptr(), std::move(rest));
}

SequenceSet EmptySet(const AlphabetPtr& alphabet) {
  return SequenceSet::FromSortedUnique(alphabet, {});
}

SequenceSet OnlyEmptySequence(const AlphabetPtr& alphabet) {
  return SequenceSet::FromSortedUnique(alphabet, {Sequence{}});
}

// S_a united with the residual of a's infoset.
SequenceSet Collapse(const SequenceSet& set, ActionId action,
                     const SequenceSet& residual) {
  return Union(QuotientByAction(set, action), residual);
}

class SpanSolver {
 public:
  explicit SpanSolver(SpanStats* stats) : stats_(stats) {}

  SequenceSet Span(const SequenceSet& set) {
    if (stats_) ++stats_->calls;
    if (set.empty()) return set;
    if (set.ContainsEmpty()) {
      if (set.size() == 1) return set;
      // The empty sequence is generated by any strongly branching subset.
      SequenceSet rest = Span(WithoutEmpty(set));
      if (FindStronglyBranchingSubset(rest)) return rest;
      return Union(rest, OnlyEmptySequence(set.alphabet_ptr()));
    }
    auto cached = memo_.find(set.sequences());
    if (cached != memo_.end()) {
      return SequenceSet::FromSortedUnique(set.alphabet_ptr(), cached->second);
    }
    if (stats_) ++stats_->states;
    SequenceSet result = Solve(set);
    memo_.emplace(set.sequences(), result.sequences());
    return result;
  }

 private:
  SequenceSet Solve(const SequenceSet& set) {
    const AlphabetPtr& alphabet = set.alphabet_ptr();
    std::vector<SequenceSet> components = Components(set);
    if (components.size() > 1) {
      SequenceSet result = EmptySet(alphabet);
      for (const SequenceSet& component : components) {
        result = Union(result, Span(component));
      }
      return result;
    }
    if (std::optional<InfosetId> covering = CoveringInfoset(set)) {
      SequenceSet result = EmptySet(alphabet);
      for (ActionId a : alphabet->infoset(*covering).actions) {
        result = Union(result, Prepend(a, Span(QuotientByAction(set, a))));
      }
      return result;
    }
    std::optional<SequenceSet> best;
    for (InfosetId infoset : set.Infosets()) {
      SequenceSet residual = ResidualWithoutInfoset(set, infoset);
      SequenceSet candidate = EmptySet(alphabet);
      for (ActionId a : alphabet->infoset(infoset).actions) {
        candidate =
            Union(candidate, Prepend(a, Span(Collapse(set, a, residual))));
      }
      if (!best || candidate.size() < best->size()) best = std::move(candidate);
    }
    return *best;
  }

  SpanStats* stats_;
  internal::SetMemo<std::vector<Sequence>> memo_;
};

class DepthSolver {
 public:
  int Depth(const SequenceSet& input) {
    SequenceSet set = WithoutEmpty(input);
    if (set.empty()) return 0;
    auto cached = memo_.find(set.sequences());
    if (cached != memo_.end()) return cached->second;
    int depth = Solve(set);
    memo_.emplace(set.sequences(), depth);
    return depth;
  }

 private:
  int Solve(const SequenceSet& set) {
    std::vector<SequenceSet> components = Components(set);
    if (components.size() > 1) {
      int depth = 0;
      for (const SequenceSet& component : components) {
        depth = std::max(depth, Depth(component));
      }
      return depth;
    }
    if (SalrWitness(set).has_salr) return 0;
    int best = std::numeric_limits<int>::max();
    const Alphabet& alphabet = set.alphabet();
    for (InfosetId infoset : set.Infosets()) {
      SequenceSet residual = ResidualWithoutInfoset(set, infoset);
      int worst = 0;
      for (ActionId a : alphabet.infoset(infoset).actions) {
        worst = std::max(worst, Depth(Collapse(set, a, residual)));
      }
      best = std::min(best, worst);
    }
    return 1 + best;
  }

  internal::SetMemo<int> memo_;
};

}  // namespace

SequenceSet CanonicalFullSpan(const AlphabetPtr& alphabet,
                              const std::vector<InfosetId>& order) {
  std::vector<Sequence> sequences = {Sequence{}};
  for (InfosetId infoset : order) {
    std::vector<Sequence> extended;
    for (const Sequence& seq : sequences) {
      for (ActionId a : alphabet->infoset(infoset).actions) {
        Sequence next = seq;
        next.push_back(a);
        extended.push_back(std::move(next));
      }
    }
    sequences = std::move(extended);
  }
  return SequenceSet(alphabet, std::move(sequences));
}

SpanCertificate MinimalSpan(const SequenceSet& set, SpanStats* stats) {
  SpanSolver solver(stats);
  SequenceSet span = solver.Span(set);
  std::optional<SpanCertificate> certificate = VerifySpan(set, span);
  if (!certificate) {
    throw std::logic_error("constructed span fails verification for " +
                           set.ToString());
  }
  return *certificate;
}

int ShuffleDepth(const SequenceSet& set) {
  DepthSolver solver;
  return solver.Depth(set);
}

std::optional<SpanCertificate> VerifySpan(const SequenceSet& original,
                                          const SequenceSet& candidate) {
  if (!IsAlrSet(candidate)) {
    throw InvalidInput("candidate span is not ALR: " + candidate.ToString());
  }
  SpanCertificate certificate{original, candidate, {}};
  for (const Sequence& seq : original) {
    std::set<ActionId> needed(seq.begin(), seq.end());
    std::map<Sequence, Sequence> source_of;
    for (const Sequence& generator : candidate) {
      Sequence rest;
      std::size_t hits = 0;
      for (ActionId a : generator) {
        if (needed.count(a)) {
          ++hits;
        } else {
          rest.push_back(a);
        }
      }
      if (hits == needed.size()) source_of.emplace(std::move(rest), generator);
    }
    std::vector<Sequence> quotients;
    for (const auto& [rest, generator] : source_of) quotients.push_back(rest);
    std::optional<SequenceSet> branching = FindStronglyBranchingSubset(
        SequenceSet::FromSortedUnique(original.alphabet_ptr(), quotients));
    if (!branching) return std::nullopt;
    std::vector<Sequence>& combination = certificate.combinations[seq];
    for (const Sequence& rest : *branching) {
      combination.push_back(source_of.at(rest));
    }
    std::sort(combination.begin(), combination.end());
  }
  return certificate;
}

bool IsValidCertificate(const SpanCertificate& certificate) {
  if (!IsAlrSet(certificate.span)) return false;
  for (const Sequence& seq : certificate.original) {
    auto it = certificate.combinations.find(seq);
    if (it == certificate.combinations.end()) return false;
    std::set<ActionId> needed(seq.begin(), seq.end());
    std::vector<Sequence> quotients;
    for (const Sequence& generator : it->second) {
      if (!certificate.span.Contains(generator)) return false;
      Sequence rest;
      for (ActionId a : generator) {
        if (!needed.count(a)) rest.push_back(a);
      }
      if (generator.size() - rest.size() != needed.size()) return false;
      quotients.push_back(std::move(rest));
    }
    std::size_t count = quotients.size();
    SequenceSet branching(certificate.original.alphabet_ptr(), quotients);
    if (branching.size() != count || !IsStronglyBranching(branching)) {
      return false;
    }
  }
  return true;
}

Game UniformGameFromSequences(const SequenceSet& set) {
  const AlphabetPtr& alphabet = set.alphabet_ptr();
  GameBuilder builder(alphabet);
  auto build = [&](auto&& self, const SequenceSet& part) -> NodeId {
    if (part.empty()) {
      throw InvalidInput("sequence set has an empty branch");
    }
    if (part.size() == 1 && part.ContainsEmpty()) return builder.AddLeaf();
    std::vector<SequenceSet> components = Components(part);
    if (components.size() > 1) {
      Rational share(1, components.size());
      std::vector<std::pair<Rational, NodeId>> children;
      for (const SequenceSet& component : components) {
        children.emplace_back(share, self(self, component));
      }
      return builder.AddChance(std::move(children));
    }
    InfosetId infoset = alphabet->InfosetOf(part.sequences().front().front());
    for (const Sequence& seq : part) {
      if (alphabet->InfosetOf(seq.front()) != infoset) {
        throw InvalidInput("sequence set is not ALR: " + part.ToString());
      }
    }
    std::vector<std::pair<ActionId, NodeId>> children;
    for (ActionId a : alphabet->infoset(infoset).actions) {
      children.emplace_back(a, self(self, PrefixQuotient(part, a)));
    }
    return builder.AddPlayer(infoset, std::move(children));
  };
  NodeId root = build(build, set);
  return builder.BuildGame(root);
}

GameStructure StructureFromSequences(const SequenceSet& set) {
  return UniformGameFromSequences(set).structure();
}

namespace {

// Every ALR set over a subset of at most three binary infosets, grouped by
// infoset mask and exact size.
class AlrEnumerator {
 public:
  explicit AlrEnumerator(const Alphabet& alphabet) : alphabet_(alphabet) {}

  // Sets with exactly `size` sequences over the infosets in `mask`.
  const std::vector<std::vector<Sequence>>& Forest(unsigned mask,
                                                   std::size_t size) {
    auto key = std::make_pair(mask, size);
    auto it = forest_memo_.find(key);
    if (it != forest_memo_.end()) return it->second;
    std::set<std::vector<Sequence>> found;
    for (const auto& rest : NonEmptyForest(mask, size)) found.insert(rest);
    if (size >= 1) {
      for (auto rest : NonEmptyForest(mask, size - 1)) {
        rest.push_back(Sequence{});
        std::sort(rest.begin(), rest.end());
        found.insert(std::move(rest));
      }
    }
    return forest_memo_[key] = {found.begin(), found.end()};
  }

 private:
  // Disjoint components, none of them the empty sequence.
  std::vector<std::vector<Sequence>> NonEmptyForest(unsigned mask,
                                                    std::size_t size) {
    if (size == 0) return {{}};
    std::set<std::vector<Sequence>> found;
    for (std::size_t root = 0; root < alphabet_.num_infosets(); ++root) {
      if (!(mask & (1u << root))) continue;
      for (std::size_t first = 1; first <= size; ++first) {
        for (const auto& tree : Tree(root, mask & ~(1u << root), first)) {
          unsigned used = UsedMask(tree);
          for (const auto& rest : NonEmptyForest(mask & ~used, size - first)) {
            std::vector<Sequence> combined = tree;
            combined.insert(combined.end(), rest.begin(), rest.end());
            std::sort(combined.begin(), combined.end());
            found.insert(std::move(combined));
          }
        }
      }
    }
    return {found.begin(), found.end()};
  }

  // Connected sets rooted at `root`, branches drawn from `mask`.
  std::vector<std::vector<Sequence>> Tree(std::size_t root, unsigned mask,
                                          std::size_t size) {
    const std::vector<ActionId>& actions =
        alphabet_.infoset(InfosetId{static_cast<std::int32_t>(root)}).actions;
    std::vector<std::vector<Sequence>> partial = {{}};
    std::vector<std::size_t> used_sizes = {0};
    for (ActionId a : actions) {
      std::vector<std::vector<Sequence>> next;
      std::vector<std::size_t> next_sizes;
      for (std::size_t i = 0; i < partial.size(); ++i) {
        for (std::size_t k = 0; used_sizes[i] + k <= size; ++k) {
          for (const auto& branch : Forest(mask, k)) {
            std::vector<Sequence> combined = partial[i];
            for (const Sequence& seq : branch) {
              Sequence extended = {a};
              extended.insert(extended.end(), seq.begin(), seq.end());
              combined.push_back(std::move(extended));
            }
            next.push_back(std::move(combined));
            next_sizes.push_back(used_sizes[i] + k);
          }
        }
      }
      partial = std::move(next);
      used_sizes = std::move(next_sizes);
    }
    std::vector<std::vector<Sequence>> trees;
    for (std::size_t i = 0; i < partial.size(); ++i) {
      if (used_sizes[i] != size) continue;
      std::sort(partial[i].begin(), partial[i].end());
      trees.push_back(std::move(partial[i]));
    }
    return trees;
  }

  unsigned UsedMask(const std::vector<Sequence>& sequences) const {
    unsigned mask = 0;
    for (const Sequence& seq : sequences) {
      for (ActionId a : seq) mask |= 1u << Index(alphabet_.InfosetOf(a));
    }
    return mask;
  }

  const Alphabet& alphabet_;
  std::map<std::pair<unsigned, std::size_t>, std::vector<std::vector<Sequence>>>
      forest_memo_;
};

}  // namespace

SequenceSet MinimalityOracle(const SequenceSet& set) {
  const Alphabet& alphabet = set.alphabet();
  if (alphabet.num_infosets() > 3 || set.size() > 8) {
    throw InvalidInput("oracle limited to three infosets and eight sequences");
  }
  std::size_t cap = 1;
  for (std::size_t i = 0; i < alphabet.num_infosets(); ++i) {
    std::size_t arity =
        alphabet.infoset(InfosetId{static_cast<std::int32_t>(i)}).actions.size();
    if (arity != 2) throw InvalidInput("oracle limited to binary infosets");
    cap *= arity;
  }
  unsigned all = (1u << alphabet.num_infosets()) - 1;
  AlrEnumerator enumerator(alphabet);
  for (std::size_t size = 1; size <= cap; ++size) {
    for (const auto& candidate : enumerator.Forest(all, size)) {
      SequenceSet span =
          SequenceSet::FromSortedUnique(set.alphabet_ptr(), candidate);
      if (VerifySpan(set, span)) return span;
    }
  }
  throw std::logic_error("full span not reached by the oracle");
}

}  // namespace recall_forge
