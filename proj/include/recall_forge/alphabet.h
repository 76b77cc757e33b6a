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

#ifndef RECALL_FORGE_ALPHABET_H_
#define RECALL_FORGE_ALPHABET_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace recall_forge {

enum class ActionId : std::int32_t {};
enum class InfosetId : std::int32_t {};

inline std::size_t Index(ActionId id) { return static_cast<std::size_t>(id); }
inline std::size_t Index(InfosetId id) { return static_cast<std::size_t>(id); }

enum class Player { kMax, kMin };

std::string_view PlayerName(Player player);
std::optional<Player> ParsePlayer(std::string_view name);

struct InfosetInfo {
  std::string id;
  Player owner = Player::kMax;
  // File order. The last entry is the one eliminated by canonicalization.
  std::vector<ActionId> actions;
};

struct ActionInfo {
  std::string label;
  InfosetId infoset{};
};

// The infosets of a game and their action labels, in file order.
//
// Labels are meant to be unique across the whole game. Duplicates are still
// stored so that validation can report them; lookups return the first one.
class Alphabet {
 public:
  InfosetId AddInfoset(std::string id, Player owner,
                       const std::vector<std::string>& action_labels);

  std::size_t num_infosets() const { return infosets_.size(); }
  std::size_t num_actions() const { return actions_.size(); }

  const InfosetInfo& infoset(InfosetId id) const {
    return infosets_[Index(id)];
  }
  const ActionInfo& action(ActionId id) const { return actions_[Index(id)]; }
  InfosetId InfosetOf(ActionId id) const { return actions_[Index(id)].infoset; }
  const std::string& Label(ActionId id) const {
    return actions_[Index(id)].label;
  }

  // Position of the action inside its infoset's action list.
  std::size_t ActionIndex(ActionId id) const {
    return action_index_[Index(id)];
  }
  bool IsLastAction(ActionId id) const;

  std::optional<ActionId> FindAction(std::string_view label) const;
  std::optional<InfosetId> FindInfoset(std::string_view id) const;

  // Labels or infoset ids that occur more than once.
  std::vector<std::string> DuplicateLabels() const;

 private:
  std::vector<InfosetInfo> infosets_;
  std::vector<ActionInfo> actions_;
  std::vector<std::size_t> action_index_;
  std::unordered_map<std::string, ActionId> action_by_label_;
  std::unordered_map<std::string, InfosetId> infoset_by_id_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

}  // namespace recall_forge

#endif  // RECALL_FORGE_ALPHABET_H_
