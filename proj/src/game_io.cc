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

#include "recall_forge/game_io.h"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace recall_forge {
namespace {

using Json = nlohmann::ordered_json;

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

const Json& Field(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw InvalidInput(std::string("missing field '") + key + "'");
  }
  return object.at(key);
}

std::string StringField(const Json& object, const char* key) {
  const Json& value = Field(object, key);
  if (!value.is_string()) {
    throw InvalidInput(std::string("field '") + key + "' must be a string");
  }
  return value.get<std::string>();
}

Rational RationalField(const Json& object, const char* key) {
  const Json& value = Field(object, key);
  if (value.is_string()) return ParseRational(value.get<std::string>());
  if (value.is_number_integer()) return ParseRational(value.dump());
  throw InvalidInput(std::string("field '") + key + "' must be a rational");
}

AlphabetPtr ParseAlphabet(const Json& doc) {
  auto alphabet = std::make_shared<Alphabet>();
  const Json& infosets = Field(doc, "infosets");
  if (!infosets.is_array()) throw InvalidInput("'infosets' must be an array");
  for (const Json& entry : infosets) {
    std::optional<Player> owner = ParsePlayer(StringField(entry, "owner"));
    if (!owner) throw InvalidInput("owner must be 'max' or 'min'");
    const Json& actions = Field(entry, "actions");
    if (!actions.is_array() || actions.empty()) {
      throw InvalidInput("'actions' must be a nonempty array");
    }
    std::vector<std::string> labels;
    for (const Json& label : actions) {
      if (!label.is_string()) throw InvalidInput("action labels are strings");
      labels.push_back(label.get<std::string>());
    }
    alphabet->AddInfoset(StringField(entry, "id"), *owner, labels);
  }
  return alphabet;
}

void CheckHeader(const Json& doc) {
  const Json& version = Field(doc, "version");
  if (!version.is_number_integer() || version.get<int>() != kDocumentVersion) {
    throw InvalidInput("unsupported document version");
  }
}

NodeId ParseNode(const Json& json, GameBuilder& builder, bool with_values,
                 int depth) {
  if (depth > 10000) throw InvalidInput("document nested too deeply");
  std::string kind = StringField(json, "kind");
  if (kind != "leaf" && kind != "chance" && kind != "player") {
    throw InvalidInput("unknown node kind '" + kind + "'");
  }
  std::string name = json.contains("name") ? StringField(json, "name") : "";
  if (kind == "leaf") {
    Rational payoff = with_values ? RationalField(json, "payoff") : Rational(0);
    return builder.AddLeaf(payoff, name);
  }
  const Json& children = Field(json, "children");
  if (!children.is_array()) throw InvalidInput("'children' must be an array");
  if (kind == "chance") {
    std::vector<std::pair<Rational, NodeId>> edges;
    for (const Json& child : children) {
      Rational prob = with_values ? RationalField(child, "prob") : Rational(0);
      edges.emplace_back(prob, ParseNode(Field(child, "node"), builder,
                                         with_values, depth + 1));
    }
    return builder.AddChance(std::move(edges), name);
  }
  if (kind == "player") {
    std::vector<std::pair<std::string, NodeId>> edges;
    for (const Json& child : children) {
      edges.emplace_back(StringField(child, "action"),
                         ParseNode(Field(child, "node"), builder, with_values,
                                   depth + 1));
    }
    return builder.AddPlayer(StringField(json, "infoset"), std::move(edges),
                             name);
  }
  throw std::logic_error("unreachable node kind");
}

void ThrowOnViolations(const std::vector<std::string>& violations) {
  if (violations.empty()) return;
  std::string message = "invalid game:";
  for (const std::string& v : violations) message += "\n  " + v;
  throw InvalidInput(message);
}

Json AlphabetJson(const Alphabet& alphabet) {
  Json infosets = Json::array();
  for (std::size_t i = 0; i < alphabet.num_infosets(); ++i) {
    const InfosetInfo& info =
        alphabet.infoset(InfosetId{static_cast<std::int32_t>(i)});
    Json labels = Json::array();
    for (ActionId a : info.actions) labels.push_back(alphabet.Label(a));
    infosets.push_back({{"id", info.id},
                        {"owner", std::string(PlayerName(info.owner))},
                        {"actions", labels}});
  }
  return infosets;
}

Json NodeJson(const GameStructure& structure, const Game* game, NodeId v) {
  const Node& node = structure.node(v);
  Json json;
  switch (node.kind) {
    case NodeKind::kLeaf:
      json["kind"] = "leaf";
      break;
    case NodeKind::kChance:
      json["kind"] = "chance";
      break;
    case NodeKind::kPlayer:
      json["kind"] = "player";
      json["infoset"] = structure.alphabet().infoset(node.infoset).id;
      break;
  }
  if (!node.name.empty()) json["name"] = node.name;
  if (node.kind == NodeKind::kLeaf) {
    if (game) json["payoff"] = RationalToString(game->payoff(v));
    return json;
  }
  Json children = Json::array();
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    Json edge;
    if (node.kind == NodeKind::kPlayer) {
      edge["action"] = structure.alphabet().Label(node.actions[i]);
    } else if (game) {
      edge["prob"] = RationalToString(game->chance_probs(v)[i]);
    }
    edge["node"] = NodeJson(structure, game, node.children[i]);
    children.push_back(std::move(edge));
  }
  json["children"] = std::move(children);
  return json;
}

std::string Document(const GameStructure& structure, const Game* game) {
  const Alphabet& alphabet = structure.alphabet();
  Json players = Json::array({"max"});
  for (std::size_t i = 0; i < alphabet.num_infosets(); ++i) {
    if (alphabet.infoset(InfosetId{static_cast<std::int32_t>(i)}).owner ==
        Player::kMin) {
      players.push_back("min");
      break;
    }
  }
  Json doc;
  doc["version"] = kDocumentVersion;
  doc["players"] = players;
  doc["infosets"] = AlphabetJson(alphabet);
  doc["root"] = NodeJson(structure, game, structure.root());
  return doc.dump(2) + "\n";
}

Json SequenceJson(const Alphabet& alphabet, const Sequence& seq) {
  Json labels = Json::array();
  for (ActionId a : seq) labels.push_back(alphabet.Label(a));
  return labels;
}

Json SetJson(const SequenceSet& set) {
  Json list = Json::array();
  for (const Sequence& seq : set) list.push_back(SequenceJson(set.alphabet(), seq));
  return list;
}

Sequence ParseSequence(const Json& json, const Alphabet& alphabet) {
  if (!json.is_array()) throw InvalidInput("a sequence is a label array");
  Sequence seq;
  for (const Json& label : json) {
    if (!label.is_string()) throw InvalidInput("labels are strings");
    std::optional<ActionId> a = alphabet.FindAction(label.get<std::string>());
    if (!a) throw InvalidInput("unknown action '" + label.get<std::string>() + "'");
    seq.push_back(*a);
  }
  return seq;
}

SequenceSet ParseSet(const Json& json, const AlphabetPtr& alphabet) {
  if (!json.is_array()) throw InvalidInput("a sequence set is an array");
  std::vector<Sequence> sequences;
  for (const Json& seq : json) sequences.push_back(ParseSequence(seq, *alphabet));
  return SequenceSet(alphabet, std::move(sequences));
}

}  // namespace

Game ParseGame(std::string_view text) {
  Json doc = ParseJson(text);
  CheckHeader(doc);
  GameBuilder builder(ParseAlphabet(doc));
  NodeId root = ParseNode(Field(doc, "root"), builder, true, 0);
  Game game = builder.BuildGame(root);
  ThrowOnViolations(Validate(game));
  return game;
}

GameStructure ParseStructure(std::string_view text) {
  Json doc = ParseJson(text);
  CheckHeader(doc);
  GameBuilder builder(ParseAlphabet(doc));
  NodeId root = ParseNode(Field(doc, "root"), builder, false, 0);
  GameStructure structure = builder.BuildStructure(root);
  ThrowOnViolations(Validate(structure));
  return structure;
}

std::string SerializeGame(const Game& game) {
  return Document(game.structure(), &game);
}

std::string SerializeStructure(const GameStructure& structure) {
  return Document(structure, nullptr);
}

std::string SerializeCertificate(const SpanCertificate& certificate) {
  const Alphabet& alphabet = certificate.span.alphabet();
  Json doc;
  doc["version"] = kDocumentVersion;
  doc["infosets"] = AlphabetJson(alphabet);
  doc["original"] = SetJson(certificate.original);
  doc["span"] = SetJson(certificate.span);
  Json combinations = Json::array();
  for (const auto& [seq, generators] : certificate.combinations) {
    Json list = Json::array();
    for (const Sequence& g : generators) list.push_back(SequenceJson(alphabet, g));
    combinations.push_back(
        {{"sequence", SequenceJson(alphabet, seq)}, {"generators", list}});
  }
  doc["combinations"] = std::move(combinations);
  return doc.dump(2) + "\n";
}

SpanCertificate ParseCertificate(std::string_view text,
                                 const AlphabetPtr& alphabet) {
  Json doc = ParseJson(text);
  CheckHeader(doc);
  if (AlphabetJson(*alphabet) != Field(doc, "infosets")) {
    throw InvalidInput("certificate infosets differ from the game's");
  }
  SpanCertificate certificate;
  certificate.original = ParseSet(Field(doc, "original"), alphabet);
  certificate.span = ParseSet(Field(doc, "span"), alphabet);
  const Json& combinations = Field(doc, "combinations");
  if (!combinations.is_array()) throw InvalidInput("'combinations' is an array");
  for (const Json& entry : combinations) {
    Sequence seq = ParseSequence(Field(entry, "sequence"), *alphabet);
    std::vector<Sequence>& generators = certificate.combinations[seq];
    const Json& list = Field(entry, "generators");
    if (!list.is_array()) throw InvalidInput("'generators' is an array");
    for (const Json& g : list) {
      Sequence generator = ParseSequence(g, *alphabet);
      if (!certificate.span.Contains(generator)) {
        throw InvalidInput("generator outside the span");
      }
      generators.push_back(std::move(generator));
    }
  }
  if (!IsValidCertificate(certificate)) {
    throw InvalidInput("certificate does not establish the span");
  }
  return certificate;
}

}  // namespace recall_forge
