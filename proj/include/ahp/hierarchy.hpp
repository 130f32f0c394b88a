// Copyright 2026 The AHP Engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "ahp/error.hpp"
#include "ahp/pcm.hpp"

namespace ahp {

struct Criterion {
  std::string id;
  std::string name;
  std::string unit;
  std::string description;
  std::string group;      ///< display label only, never weighted
  std::string direction;  ///< reserved; every column is normalized alike

  friend bool operator==(const Criterion&, const Criterion&) = default;
};

enum class CriterionSet { Benefit, Cost };

inline constexpr std::string_view to_string(CriterionSet s) noexcept {
  return s == CriterionSet::Benefit ? "benefit" : "cost";
}

/// Goal, two independent criterion sets (each gets its own comparison matrix
/// and weights) and the alternatives to rank.
struct DecisionModel {
  std::string goal;
  std::vector<Criterion> benefit_criteria;
  std::vector<Criterion> cost_criteria;
  std::vector<std::string> alternatives;

  const std::vector<Criterion>& criteria(CriterionSet s) const noexcept {
    return s == CriterionSet::Benefit ? benefit_criteria : cost_criteria;
  }

  CriteriaIds criteria_ids(CriterionSet s) const {
    CriteriaIds ids;
    for (const auto& c : criteria(s)) ids.push_back(c.id);
    return ids;
  }

  friend bool operator==(const DecisionModel&, const DecisionModel&) = default;
};

/// Uniqueness and non-emptiness checks. At least one criterion set must be
/// populated; an empty alternative list is allowed for weight-only work.
inline DecisionModel validate_model(DecisionModel model) {
  if (model.benefit_criteria.empty() && model.cost_criteria.empty()) {
    throw Error(Errc::EmptyCriterionSet, "model declares no criteria");
  }
  std::unordered_set<std::string> ids;
  for (const auto* set : {&model.benefit_criteria, &model.cost_criteria}) {
    for (const auto& c : *set) {
      if (c.id.empty()) throw Error(Errc::InvalidCriterion, "empty criterion id");
      if (c.unit.empty()) {
        throw Error(Errc::InvalidCriterion, "criterion '" + c.id + "' has no unit");
      }
      if (!ids.insert(c.id).second) {
        throw Error(Errc::DuplicateCriterionId, "criterion '" + c.id + "'");
      }
    }
  }
  std::unordered_set<std::string> alts;
  for (const auto& a : model.alternatives) {
    if (a.empty()) throw Error(Errc::DuplicateAlternative, "empty alternative id");
    if (!alts.insert(a).second) {
      throw Error(Errc::DuplicateAlternative, "alternative '" + a + "'");
    }
  }
  return model;
}

struct MaterialComponent {
  std::string material;
  double demand = 0.0;           ///< kiloton/year
  double storage = 0.0;          ///< kiloton
  double weight_fraction = 0.0;  ///< in [0,1]
};

struct MaterialComposition {
  std::vector<MaterialComponent> components;
};

}  // namespace ahp
