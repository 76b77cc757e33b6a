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

#include "recall_forge/alphabet.h"

#include <set>

namespace recall_forge {

std::string_view PlayerName(Player player) {
  return player == Player::kMax ? "max" : "min";
}

std::optional<Player> ParsePlayer(std::string_view name) {
  if (name == "max") return Player::kMax;
  if (name == "min") return Player::kMin;
  return std::nullopt;
}

InfosetId Alphabet::AddInfoset(std::string id, Player owner,
                               const std::vector<std::string>& action_labels) {
  InfosetId infoset_id{static_cast<std::int32_t>(infosets_.size())};
  InfosetInfo info;
  info.id = std::move(id);
  info.owner = owner;
  for (std::size_t i = 0; i < action_labels.size(); ++i) {
    ActionId action_id{static_cast<std::int32_t>(actions_.size())};
    actions_.push_back({action_labels[i], infoset_id});
    action_index_.push_back(i);
    action_by_label_.emplace(action_labels[i], action_id);
    info.actions.push_back(action_id);
  }
  infoset_by_id_.emplace(info.id, infoset_id);
  infosets_.push_back(std::move(info));
  return infoset_id;
}

bool Alphabet::IsLastAction(ActionId id) const {
  const InfosetInfo& info = infosets_[Index(InfosetOf(id))];
  return !info.actions.empty() && info.actions.back() == id;
}

std::optional<ActionId> Alphabet::FindAction(std::string_view label) const {
  auto it = action_by_label_.find(std::string(label));
  if (it == action_by_label_.end()) return std::nullopt;
  return it->second;
}

std::optional<InfosetId> Alphabet::FindInfoset(std::string_view id) const {
  auto it = infoset_by_id_.find(std::string(id));
  if (it == infoset_by_id_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Alphabet::DuplicateLabels() const {
  std::vector<std::string> duplicates;
  std::set<std::string> seen;
  for (const ActionInfo& action : actions_) {
    if (!seen.insert(action.label).second) duplicates.push_back(action.label);
  }
  std::set<std::string> seen_infosets;
  for (const InfosetInfo& info : infosets_) {
    if (!seen_infosets.insert(info.id).second) duplicates.push_back(info.id);
  }
  return duplicates;
}

}  // namespace recall_forge
