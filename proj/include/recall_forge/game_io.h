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

#ifndef RECALL_FORGE_GAME_IO_H_
#define RECALL_FORGE_GAME_IO_H_

#include <string>
#include <string_view>

#include "recall_forge/game.h"
#include "recall_forge/span.h"

namespace recall_forge {

// Game documents are JSON:
//   {"version": 1, "players": ["max"],
//    "infosets": [{"id": "A0", "owner": "max", "actions": ["H_A0", "T_A0"]}],
//    "root": {"kind": "chance", "children": [{"prob": "1/3", "node": ...}]}}
// Player nodes are {"kind": "player", "infoset": id,
// "children": [{"action": label, "node": ...}]} and leaves are
// {"kind": "leaf", "payoff": "p/q"}. Nodes may carry a "name".
//
// All parsers throw InvalidInput on malformed or invalid documents.
constexpr int kDocumentVersion = 1;

// Requires chance probabilities and payoffs.
Game ParseGame(std::string_view text);
// Probabilities and payoffs are optional and ignored.
GameStructure ParseStructure(std::string_view text);

std::string SerializeGame(const Game& game);
// Omits probabilities and payoffs.
std::string SerializeStructure(const GameStructure& structure);

// {"version", "infosets", "original", "span", "combinations"}; sequences are
// label lists.
std::string SerializeCertificate(const SpanCertificate& certificate);
// Labels resolve against the given alphabet. The certificate's own infoset
// list must match it.
SpanCertificate ParseCertificate(std::string_view text,
                                 const AlphabetPtr& alphabet);

}  // namespace recall_forge

#endif  // RECALL_FORGE_GAME_IO_H_
