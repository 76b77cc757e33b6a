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

#ifndef RECALL_FORGE_SRC_SET_KEY_H_
#define RECALL_FORGE_SRC_SET_KEY_H_

#include <boost/container_hash/hash.hpp>

#include <unordered_map>
#include <vector>

#include "recall_forge/sequence_set.h"

namespace recall_forge::internal {

// Memo tables key on the canonical (sorted, unique) sequence list.
struct SetKeyHash {
  std::size_t operator()(const std::vector<Sequence>& sequences) const {
    std::size_t seed = sequences.size();
    for (const Sequence& seq : sequences) {
      boost::hash_combine(seed, seq.size());
      for (ActionId a : seq) boost::hash_combine(seed, static_cast<int>(a));
    }
    return seed;
  }
};

template <typename Value>
using SetMemo = std::unordered_map<std::vector<Sequence>, Value, SetKeyHash>;

}  // namespace recall_forge::internal

#endif  // RECALL_FORGE_SRC_SET_KEY_H_
