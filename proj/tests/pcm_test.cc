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

#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace ahp {
namespace {

using test::Rows;

SquareMatrix from_rows(const Rows& r) {
  SquareMatrix m(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) m(i, j) = r[i][j];
  }
  return m;
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::IoFailure;
}

TEST(Judgment, ParsesScaleStrings) {
  EXPECT_EQ(Judgment::parse("3"), Judgment::integer(3));
  EXPECT_EQ(Judgment::parse("1/7"), Judgment(1, 7));
  EXPECT_EQ(Judgment::parse("1"), Judgment(1, 1));
  EXPECT_DOUBLE_EQ(Judgment::parse("1/4").value(), 0.25);
  EXPECT_EQ(code_of([] { Judgment::parse("10"); }), Errc::OffScaleJudgment);
  EXPECT_EQ(code_of([] { Judgment::parse("2/3"); }), Errc::OffScaleJudgment);
  EXPECT_EQ(code_of([] { Judgment::parse("0.5"); }), Errc::OffScaleJudgment);
  EXPECT_EQ(code_of([] { Judgment::parse(""); }), Errc::OffScaleJudgment);
}

TEST(Judgment, ScaleHasSeventeenAscendingValues) {
  EXPECT_EQ(kJudgmentScale.size(), 17u);
  EXPECT_EQ(kJudgmentScale.front(), Judgment(1, 9));
  EXPECT_EQ(kJudgmentScale.back(), Judgment::integer(9));
  for (std::size_t k = 1; k < kJudgmentScale.size(); ++k) {
    EXPECT_LT(kJudgmentScale[k - 1].value(), kJudgmentScale[k].value());
  }
}

TEST(Judgment, ReciprocalRoundTrips) {
  for (const Judgment j : kJudgmentScale) {
    EXPECT_EQ(j.reciprocal().reciprocal(), j);
    EXPECT_EQ(Judgment::parse(j.to_string()), j);
    EXPECT_DOUBLE_EQ(j.value() * j.reciprocal().value(), 1.0) << j.to_string();
  }
}

TEST(ValidatePcm, AcceptsPublishedTwoByTwo) {
  const auto p = validate_pcm(from_rows({{1, 0.7071}, {1.4142, 1}}), {"P", "U"});
  EXPECT_EQ(p.size(), 2u);
  EXPECT_DOUBLE_EQ(p.at("P", "U"), 0.7071);
}

TEST(ValidatePcm, AcceptsAllOnes) {
  for (std::size_t n = 1; n <= 15; ++n) {
    EXPECT_NO_THROW(validate_pcm(SquareMatrix(n, 1.0), test::make_ids(n)));
  }
}

TEST(ValidatePcm, RejectsBadInput) {
  EXPECT_EQ(code_of([] { validate_pcm(from_rows({{1, 2}, {3, 1}}), {"a", "b"}); }),
            Errc::ReciprocityViolation);
  EXPECT_EQ(code_of([] { validate_pcm(from_rows({{1, -2}, {-0.5, 1}}), {"a", "b"}); }),
            Errc::NonPositiveEntry);
  EXPECT_EQ(code_of([] { validate_pcm(from_rows({{2, 1}, {1, 1}}), {"a", "b"}); }),
            Errc::BadDiagonal);
  EXPECT_EQ(code_of([] { validate_pcm(Rows{{1, 1}, {1}}, {"a", "b"}); }), Errc::NonSquare);
  EXPECT_EQ(code_of([] { validate_pcm(SquareMatrix(2, 1.0), {"a"}); }),
            Errc::DimensionMismatch);
  EXPECT_EQ(code_of([] { validate_pcm(SquareMatrix(2, 1.0), {"a", "a"}); }),
            Errc::DuplicateCriterionId);
}

TEST(ValidatePcm, SnapsNearUnitDiagonal) {
  const auto p = validate_pcm(from_rows({{1 + 1e-12, 2}, {0.5, 1 - 1e-12}}), {"a", "b"});
  EXPECT_EQ(p(0, 0), 1.0);
  EXPECT_EQ(p(1, 1), 1.0);
}

TEST(CompleteFromUpper, FillsReciprocal) {
  const Questionnaire q{"r", {"A", "B"}, {{"A", "B", Judgment::integer(7)}}};
  const auto p = complete_from_upper(q);
  EXPECT_EQ(p(0, 1), 7.0);
  EXPECT_EQ(p(1, 0), 1.0 / 7.0);
  EXPECT_EQ(p(0, 0), 1.0);
}

TEST(CompleteFromUpper, AcceptsLowerOrientation) {
  const Questionnaire q{"r", {"A", "B"}, {{"B", "A", Judgment(1, 7)}}};
  EXPECT_EQ(complete_from_upper(q)(0, 1), 7.0);
}

TEST(CompleteFromUpper, ReproducesFirstCostQuestionnaire) {
  const Rows printed = {{1, 1.0 / 5, 1.0 / 3, 2, 3},
                        {5, 1, 4, 5, 6},
                        {3, 1.0 / 4, 1, 1.0 / 3, 2},
                        {1.0 / 2, 1.0 / 5, 3, 1, 5},
                        {1.0 / 3, 1.0 / 6, 1.0 / 2, 1.0 / 5, 1}};
  const auto qs = test::fixture_questionnaires("glass_cost");
  const auto p = complete_from_upper(qs.at(0));
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) EXPECT_DOUBLE_EQ(p(i, j), printed[i][j]) << i << j;
  }
}

TEST(CompleteFromUpper, ErrorsOnGapsAndDuplicates) {
  const CriteriaIds ids = {"A", "B", "C"};
  EXPECT_EQ(code_of([&] {
              complete_from_upper(Questionnaire{"r", ids, {{"A", "B", Judgment::integer(2)}}});
            }),
            Errc::MissingPair);
  EXPECT_EQ(code_of([&] {
              complete_from_upper(Questionnaire{"r",
                                                ids,
                                                {{"A", "B", Judgment::integer(2)},
                                                 {"B", "A", Judgment(1, 2)},
                                                 {"A", "C", Judgment::integer(2)},
                                                 {"B", "C", Judgment::integer(2)}}});
            }),
            Errc::DuplicatePair);
  EXPECT_EQ(code_of([&] {
              complete_from_upper(Questionnaire{"r", ids, {{"A", "Z", Judgment::integer(2)}}});
            }),
            Errc::UnknownCriterion);
}

TEST(Aggregate, PublishedCellsMatchDirectGeomean) {
  const auto qs = test::fixture_questionnaires("glass_benefit");
  std::vector<PairwiseComparisonMatrix> pcms;
  for (const auto& q : qs) pcms.push_back(complete_from_upper(q));
  const auto agg = aggregate_geometric_mean(pcms);
  // (1 · 1/4 · 1/2 · 2)^(1/4)
  EXPECT_NEAR(agg.at("P", "U"), test::oracle::geomean({1, 0.25, 0.5, 2}), 1e-15);
  EXPECT_NEAR(agg.at("P", "U"), 0.7071, 5e-5);
  // (2 · 1 · 1/2 · 7)^(1/4) = 7^(1/4)
  EXPECT_NEAR(agg.at("P", "L"), std::pow(7.0, 0.25), 1e-14);
  EXPECT_NEAR(agg.at("P", "L"), 1.6266, 5e-5);
}

TEST(Aggregate, MatchesOracleOnFixtures) {
  for (const char* key : {"glass_benefit", "glass_cost", "benefit"}) {
    std::vector<PairwiseComparisonMatrix> pcms;
    std::vector<Rows> rows;
    for (const auto& q : test::fixture_questionnaires(key)) {
      pcms.push_back(complete_from_upper(q));
      rows.push_back(test::rows_of(pcms.back()));
    }
    const Rows want = test::oracle::geomean_matrix(rows);
    const auto agg = aggregate_geometric_mean(pcms);
    for (std::size_t i = 0; i < agg.size(); ++i) {
      for (std::size_t j = 0; j < agg.size(); ++j) {
        EXPECT_NEAR(agg(i, j), want[i][j], 1e-13 * want[i][j]) << key;
      }
    }
  }
}

TEST(Aggregate, SingleInputIsIdentity) {
  const auto q = test::fixture_questionnaires("glass_benefit").at(2);
  const auto p = complete_from_upper(q);
  const std::vector<PairwiseComparisonMatrix> one = {p};
  EXPECT_EQ(aggregate_geometric_mean(one), p);
}

TEST(Aggregate, Errors) {
  EXPECT_EQ(code_of([] { aggregate_geometric_mean({}); }), Errc::EmptyInput);
  const std::vector<PairwiseComparisonMatrix> mixed = {
      validate_pcm(SquareMatrix(2, 1.0), {"a", "b"}),
      validate_pcm(SquareMatrix(3, 1.0), {"a", "b", "c"})};
  EXPECT_EQ(code_of([&] { aggregate_geometric_mean(mixed); }), Errc::DimensionMismatch);
  const std::vector<PairwiseComparisonMatrix> renamed = {
      validate_pcm(SquareMatrix(2, 1.0), {"a", "b"}),
      validate_pcm(SquareMatrix(2, 1.0), {"a", "c"})};
  EXPECT_EQ(code_of([&] { aggregate_geometric_mean(renamed); }), Errc::DimensionMismatch);
}

TEST(Aggregate, ReciprocityClosure) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 9;
    std::vector<PairwiseComparisonMatrix> pcms;
    for (int k = 0; k < 1 + trial % 6; ++k) pcms.push_back(test::random_pcm(rng, n));
    const auto agg = aggregate_geometric_mean(pcms);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(agg(i, j) * agg(j, i), 1.0, 1e-9);
    }
  }
}

TEST(Aggregate, PermutationEquivariance) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + trial % 7;
    std::vector<PairwiseComparisonMatrix> pcms;
    for (int k = 0; k < 4; ++k) pcms.push_back(test::random_pcm(rng, n));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<PairwiseComparisonMatrix> permuted;
    for (const auto& p : pcms) permuted.push_back(permute(p, perm));
    const auto a = permute(aggregate_geometric_mean(pcms), perm);
    const auto b = aggregate_geometric_mean(permuted);
    EXPECT_EQ(a.criteria(), b.criteria());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(a(i, j), b(i, j), 1e-12);
    }
  }
}

TEST(Aggregate, Idempotence) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = test::random_pcm(rng, 2 + trial % 10);
    const std::vector<PairwiseComparisonMatrix> copies(1 + trial % 7, p);
    const auto agg = aggregate_geometric_mean(copies);
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < p.size(); ++j) EXPECT_NEAR(agg(i, j), p(i, j), 1e-12);
    }
  }
}

TEST(Aggregate, InputOrderDoesNotChangeBits) {
  auto qs = test::fixture_questionnaires("benefit");
  std::vector<PairwiseComparisonMatrix> pcms;
  for (const auto& q : qs) pcms.push_back(complete_from_upper(q));
  const auto a = aggregate_geometric_mean(pcms);
  std::reverse(pcms.begin(), pcms.end());
  EXPECT_EQ(a, aggregate_geometric_mean(pcms));
}

}  // namespace
}  // namespace ahp
