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

// Three criteria, two respondents, three alternatives: judgments in, ranking out.

#include <cstdio>
#include <vector>

#include "ahp/ahp.hpp"

int main() {
  using ahp::Judgment;

  const ahp::CriteriaIds benefit = {"price", "quality", "service"};
  const std::vector<ahp::Questionnaire> answers = {
      {"alice", benefit,
       {{"price", "quality", Judgment(1, 3)},
        {"price", "service", Judgment::integer(2)},
        {"quality", "service", Judgment::integer(5)}}},
      {"bob", benefit,
       {{"price", "quality", Judgment(1, 2)},
        {"price", "service", Judgment::integer(3)},
        {"quality", "service", Judgment::integer(4)}}},
  };
  std::vector<ahp::PairwiseComparisonMatrix> pcms;
  for (const auto& q : answers) pcms.push_back(ahp::complete_from_upper(q));
  const auto pcm = ahp::aggregate_geometric_mean(pcms);
  const auto derived = ahp::derive_weights(pcm);

  std::printf("lambda_max %.4f  CR %.4f  %s\n", derived.report.lambda_max,
              derived.report.cr, derived.report.consistent ? "consistent" : "inconsistent");
  for (std::size_t i = 0; i < benefit.size(); ++i) {
    std::printf("  %-8s %.4f\n", benefit[i].c_str(), derived.weights.weights[i]);
  }

  // A single cost criterion carries weight 1.
  const ahp::WeightVector cost_w{{"upkeep"}, {1.0}};
  const ahp::ScoreMatrix benefit_raw =
      ahp::ScoreMatrix::from_rows({"a", "b", "c"}, benefit,
                                  {{120, 7.5, 3}, {90, 6.0, 4}, {150, 9.0, 2}});
  const ahp::ScoreMatrix cost_raw =
      ahp::ScoreMatrix::from_rows({"a", "b", "c"}, {"upkeep"}, {{10}, {8}, {14}});

  const auto report =
      ahp::rank_alternatives(benefit_raw, cost_raw, derived.weights, cost_w, 1);
  std::fputs(ahp::io::ranking_to_text(report).c_str(), stdout);
  return 0;
}
