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

#include "recall_forge/shuffle.h"

#include <algorithm>
#include <map>

#include "recall_forge/span.h"

namespace recall_forge {
namespace {

// A current (partially consumed) sequence and the inputs it stands for.
using Tracked = std::map<Sequence, std::vector<std::size_t>>;

class WitnessBuilder {
 public:
  WitnessBuilder(const SequenceSet& input)
      : alphabet_(input.alphabet_ptr()), image_(input.size()) {}

  bool Build(const Tracked& items, const Sequence& prefix) {
    if (items.empty()) return true;
    std::vector<Sequence> keys;
    for (const auto& [seq, origins] : items) keys.push_back(seq);
    SequenceSet set = SequenceSet::FromSortedUnique(alphabet_, keys);
    std::vector<SequenceSet> components = Components(set);
    if (components.size() > 1) {
      for (const SequenceSet& component : components) {
        Tracked part;
        for (const Sequence& seq : component) part.emplace(seq, items.at(seq));
        if (!Build(part, prefix)) return false;
      }
      return true;
    }
    if (set.ContainsEmpty()) {
      for (std::size_t origin : items.begin()->second) image_[origin] = prefix;
      return true;
    }
    std::optional<InfosetId> covering = CoveringInfoset(set);
    if (!covering) {
      failing_ = set;
      return false;
    }
    for (ActionId a : alphabet_->infoset(*covering).actions) {
      Tracked branch;
      for (const auto& [seq, origins] : items) {
        auto it = std::find(seq.begin(), seq.end(), a);
        if (it == seq.end()) continue;
        Sequence rest(seq.begin(), it);
        rest.insert(rest.end(), it + 1, seq.end());
        auto& merged = branch[rest];
        merged.insert(merged.end(), origins.begin(), origins.end());
      }
      Sequence extended = prefix;
      extended.push_back(a);
      if (!Build(branch, extended)) return false;
    }
    return true;
  }

  const std::vector<Sequence>& image() const { return image_; }
  const std::optional<SequenceSet>& failing() const { return failing_; }

 private:
  AlphabetPtr alphabet_;
  std::vector<Sequence> image_;
  std::optional<SequenceSet> failing_;
};

}  // namespace

SalrResult SalrWitness(const SequenceSet& set) {
  SalrResult result;
  Tracked items;
  for (std::size_t i = 0; i < set.size(); ++i) {
    items[set.sequences()[i]].push_back(i);
  }
  WitnessBuilder builder(set);
  if (!builder.Build(items, {})) {
    result.failing_subset = builder.failing();
    return result;
  }
  result.has_salr = true;
  for (std::size_t i = 0; i < set.size(); ++i) {
    result.permutation_map.emplace(set.sequences()[i], builder.image()[i]);
  }
  result.witness = SequenceSet(set.alphabet_ptr(), builder.image());
  return result;
}

bool SalrBruteforceOracle(const SequenceSet& set, std::size_t max_length,
                          std::size_t max_combinations) {
  double combinations = 1;
  for (const Sequence& seq : set) {
    if (seq.size() > max_length) {
      throw SizeLimitExceeded("sequence longer than the oracle limit");
    }
    for (std::size_t k = 2; k <= seq.size(); ++k) combinations *= k;
  }
  if (combinations > static_cast<double>(max_combinations)) {
    throw SizeLimitExceeded("too many permutation combinations");
  }
  std::vector<Sequence> current(set.begin(), set.end());
  for (Sequence& seq : current) std::sort(seq.begin(), seq.end());
  // Odometer over next_permutation states, one digit per sequence.
  while (true) {
    if (IsAlrSet(SequenceSet(set.alphabet_ptr(), current))) return true;
    std::size_t digit = 0;
    while (digit < current.size() &&
           !std::next_permutation(current[digit].begin(), current[digit].end())) {
      ++digit;
    }
    if (digit == current.size()) return false;
  }
}

ShuffleResult ShuffleStructure(const GameStructure& structure) {
  ShuffleResult result;
  result.salr = SalrWitness(ExtractHistories(structure, Player::kMax));
  if (result.salr.has_salr) {
    result.structure = StructureFromSequences(*result.salr.witness);
  }
  return result;
}

}  // namespace recall_forge
