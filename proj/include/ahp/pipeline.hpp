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

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ahp/eigen.hpp"
#include "ahp/error.hpp"
#include "ahp/hierarchy.hpp"
#include "ahp/pcm.hpp"
#include "ahp/scoring.hpp"

namespace ahp {

/// Completes every questionnaire over `ids` and takes the elementwise
/// geometric mean.
inline PairwiseComparisonMatrix aggregate_questionnaires(
    const std::vector<Questionnaire>& qs, const CriteriaIds& ids) {
  if (qs.empty()) throw Error(Errc::EmptyInput, "no questionnaires");
  std::vector<PairwiseComparisonMatrix> pcms;
  pcms.reserve(qs.size());
  for (const auto& q : qs) pcms.push_back(complete_from_upper(q, ids));
  return aggregate_geometric_mean(pcms);
}

/// Aggregates over the criteria order of the first questionnaire.
inline PairwiseComparisonMatrix aggregate_questionnaires(
    const std::vector<Questionnaire>& qs) {
  if (qs.empty()) throw Error(Errc::EmptyInput, "no questionnaires");
  return aggregate_questionnaires(qs, qs.front().criteria);
}

/// Questionnaires whose criterion list is a permutation of `ids`.
inline std::vector<Questionnaire> questionnaires_for(
    const std::vector<Questionnaire>& qs, const CriteriaIds& ids) {
  const std::set<std::string> want(ids.begin(), ids.end());
  std::vector<Questionnaire> out;
  for (const auto& q : qs) {
    if (std::set<std::string>(q.criteria.begin(), q.criteria.end()) == want &&
        q.criteria.size() == ids.size()) {
      out.push_back(q);
    }
  }
  return out;
}

/// Checks a raw matrix against one criterion set of the model and returns it
/// with columns in model order.
inline ScoreMatrix align_to_model(const ScoreMatrix& raw, const DecisionModel& model,
                                  CriterionSet set) {
  const std::set<std::string> want(model.alternatives.begin(), model.alternatives.end());
  const std::set<std::string> have(raw.alternatives().begin(), raw.alternatives().end());
  if (want != have) {
    for (const auto& a : have) {
      if (!want.count(a)) {
        throw Error(Errc::IdReferenceUnknown, std::string(to_string(set)) +
                                                  " data names unknown alternative '" + a + "'");
      }
    }
    throw Error(Errc::AlternativeMismatch,
                std::string(to_string(set)) + " data lacks some model alternatives");
  }
  const CriteriaIds ids = model.criteria_ids(set);
  for (const auto& c : raw.criteria()) {
    if (std::find(ids.begin(), ids.end(), c) == ids.end()) {
      throw Error(Errc::IdReferenceUnknown, std::string(to_string(set)) +
                                                " data names unknown criterion '" + c + "'");
    }
  }
  return raw.with_criteria_order(ids);
}

/// Checks a PCM's criteria against one set of the model and returns it in
/// model order.
inline PairwiseComparisonMatrix align_to_model(const PairwiseComparisonMatrix& pcm,
                                               const DecisionModel& model,
                                               CriterionSet set) {
  const CriteriaIds ids = model.criteria_ids(set);
  if (pcm.criteria().size() != ids.size()) {
    throw Error(Errc::CriteriaMismatch, std::string(to_string(set)) + " matrix covers " +
                                            std::to_string(pcm.size()) + " criteria, model has " +
                                            std::to_string(ids.size()));
  }
  std::vector<std::size_t> perm;
  for (const auto& id : ids) {
    const auto it = std::find(pcm.criteria().begin(), pcm.criteria().end(), id);
    if (it == pcm.criteria().end()) {
      throw Error(Errc::CriteriaMismatch, std::string(to_string(set)) +
                                              " matrix lacks criterion '" + id + "'");
    }
    perm.push_back(static_cast<std::size_t>(it - pcm.criteria().begin()));
  }
  if (pcm.criteria() == ids) return pcm;
  return permute(pcm, perm);
}

struct PipelineResult {
  ScoreMatrix benefit_normalized;
  ScoreMatrix cost_normalized;
  ScoreVector bs;
  ScoreVector cs;
  RankingReport ranking;
};

/// Normalize, weight and rank with weights already derived.
inline PipelineResult score_and_rank(const DecisionModel& model,
                                     const ScoreMatrix& benefit_raw,
                                     const ScoreMatrix& cost_raw,
                                     const WeightVector& benefit_w,
                                     const WeightVector& cost_w, std::size_t top_k) {
  PipelineResult r;
  r.benefit_normalized =
      min_max_normalize(align_to_model(benefit_raw, model, CriterionSet::Benefit));
  r.cost_normalized = min_max_normalize(align_to_model(cost_raw, model, CriterionSet::Cost));
  r.bs = weighted_scores(r.benefit_normalized, benefit_w);
  r.cs = weighted_scores(r.cost_normalized, cost_w);
  r.ranking = final_scores(r.bs, r.cs, top_k);
  return r;
}

}  // namespace ahp
