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

#ifndef RECALL_FORGE_TRANSFORM_H_
#define RECALL_FORGE_TRANSFORM_H_

#include <vector>

#include "recall_forge/game.h"
#include "recall_forge/span.h"

namespace recall_forge {

// One source leaf's share in a target leaf's payoff.
struct PayoffContribution {
  NodeId source_leaf{};
  Rational coefficient;   // Certificate coefficient.
  Rational chance_weight; // Chance reach of the source leaf.
};

struct TransformedGame {
  Game game;
  // trace[target leaf] lists every source leaf feeding its payoff.
  std::vector<std::vector<PayoffContribution>> payoff_trace;
};

// Rebuilds a one-player game on the certificate's span with uniform chance
// and payoffs that keep the payoff polynomial equal on the polytope.
TransformedGame TransferPayoffs(const Game& source,
                                const SpanCertificate& certificate);

// Puts the Min span below every leaf of the Max span. Each certificate must
// cover the matching projection of the source.
TransformedGame ComposeTwoPlayer(const Game& source,
                                 const SpanCertificate& max_span,
                                 const SpanCertificate& min_span);

}  // namespace recall_forge

#endif  // RECALL_FORGE_TRANSFORM_H_
