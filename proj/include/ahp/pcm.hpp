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
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ahp/error.hpp"
#include "ahp/matrix.hpp"
#include "ahp/scale.hpp"

namespace ahp {

using CriteriaIds = std::vector<std::string>;

/// Reciprocity tolerance for matrices supplied from outside (rounded
/// aggregates printed to 4 decimals miss exact reciprocity by ~1e-4).
inline constexpr double kExternalReciprocityTol = 1e-3;
/// Tolerance for matrices this library builds itself.
inline constexpr double kInternalReciprocityTol = 1e-9;
/// Diagonal entries within this distance of 1 are snapped to exactly 1.
inline constexpr double kDiagonalTol = 1e-9;

namespace detail {

inline std::string pair_label(const CriteriaIds& ids, std::size_t i,
                              std::size_t j) {
  return "(" + ids[i] + "," + ids[j] + ")";
}

inline void require_unique_ids(const CriteriaIds& ids) {
  std::unordered_set<std::string> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) {
      throw Error(Errc::DuplicateCriterionId, "criterion '" + id + "'");
    }
  }
}

inline std::size_t index_of(const CriteriaIds& ids, const std::string& id) {
  const auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) {
    throw Error(Errc::UnknownCriterion, "criterion '" + id + "'");
  }
  return static_cast<std::size_t>(it - ids.begin());
}

}  // namespace detail

/// Square positive reciprocal matrix of judgment ratios over an ordered list
/// of criteria. Only obtainable through validate_pcm (or the operations built
/// on it), so every instance satisfies the reciprocal-matrix invariants.
class PairwiseComparisonMatrix {
 public:
  std::size_t size() const noexcept { return entries_.size(); }
  const CriteriaIds& criteria() const noexcept { return criteria_; }
  const SquareMatrix& entries() const noexcept { return entries_; }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_(i, j);
  }
  double at(const std::string& row_id, const std::string& col_id) const {
    return entries_(index_of(row_id), index_of(col_id));
  }
  std::size_t index_of(const std::string& id) const {
    return detail::index_of(criteria_, id);
  }

  friend bool operator==(const PairwiseComparisonMatrix&,
                         const PairwiseComparisonMatrix&) = default;

  friend PairwiseComparisonMatrix validate_pcm(SquareMatrix, CriteriaIds,
                                               double);

 private:
  PairwiseComparisonMatrix(SquareMatrix m, CriteriaIds ids)
      : criteria_(std::move(ids)), entries_(std::move(m)) {}

  CriteriaIds criteria_;
  SquareMatrix entries_;
};

/// Checks positivity, unit diagonal and reciprocity (relative tolerance on
/// m[i][j]·m[j][i]). Diagonal entries within 1e-9 of 1 are forced to 1.
inline PairwiseComparisonMatrix validate_pcm(
    SquareMatrix m, CriteriaIds ids,
    double reciprocity_tol = kExternalReciprocityTol) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(Errc::EmptyInput, "matrix has dimension 0");
  if (ids.size() != n) {
    throw Error(Errc::DimensionMismatch,
                "matrix is " + std::to_string(n) + "x" + std::to_string(n) +
                    " but " + std::to_string(ids.size()) + " criteria given");
  }
  detail::require_unique_ids(ids);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = m(i, j);
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw Error(Errc::NonPositiveEntry,
                    detail::pair_label(ids, i, j) + " = " + std::to_string(v));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(m(i, i) - 1.0) > kDiagonalTol) {
      throw Error(Errc::BadDiagonal, "entry (" + ids[i] + "," + ids[i] +
                                         ") = " + std::to_string(m(i, i)));
    }
    m(i, i) = 1.0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double product = m(i, j) * m(j, i);
      if (std::abs(product - 1.0) > reciprocity_tol) {
        throw Error(Errc::ReciprocityViolation,
                    detail::pair_label(ids, i, j) + " product " +
                        std::to_string(product));
      }
    }
  }
  return PairwiseComparisonMatrix(std::move(m), std::move(ids));
}

inline PairwiseComparisonMatrix validate_pcm(
    const std::vector<std::vector<double>>& rows, CriteriaIds ids,
    double reciprocity_tol = kExternalReciprocityTol) {
  const std::size_t n = rows.size();
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(Errc::NonSquare, "row " + std::to_string(i) + " has " +
                                       std::to_string(rows[i].size()) +
                                       " entries, expected " +
                                       std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return validate_pcm(std::move(m), std::move(ids), reciprocity_tol);
}

struct PairJudgment {
  std::string a;
  std::string b;
  Judgment value;  ///< importance of a over b

  friend bool operator==(const PairJudgment&, const PairJudgment&) = default;
};

/// One respondent's upper-triangle judgments.
struct Questionnaire {
  std::string respondent;
  CriteriaIds criteria;
  std::vector<PairJudgment> judgments;

  friend bool operator==(const Questionnaire&, const Questionnaire&) = default;
};

/// Fills the reciprocal lower triangle from a complete set of pair judgments.
/// Pairs may be stated in either orientation; (b,a) is stored as 1/value.
inline PairwiseComparisonMatrix complete_from_upper(const Questionnaire& q,
                                                    const CriteriaIds& ids) {
  const std::size_t n = ids.size();
  if (n == 0) throw Error(Errc::EmptyInput, "no criteria");
  detail::require_unique_ids(ids);
  std::vector<std::optional<Judgment>> upper(n * n);
  for (const auto& pj : q.judgments) {
    const std::size_t i = detail::index_of(ids, pj.a);
    const std::size_t j = detail::index_of(ids, pj.b);
    if (i == j) {
      throw Error(Errc::DuplicatePair, "self-pair (" + pj.a + "," + pj.b + ")");
    }
    const bool forward = i < j;
    auto& slot = forward ? upper[i * n + j] : upper[j * n + i];
    if (slot) {
      throw Error(Errc::DuplicatePair, "respondent '" + q.respondent +
                                           "' judged (" + pj.a + "," + pj.b +
                                           ") twice");
    }
    slot = forward ? pj.value : pj.value.reciprocal();
  }
  SquareMatrix m = SquareMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& v = upper[i * n + j];
      if (!v) {
        throw Error(Errc::MissingPair, "respondent '" + q.respondent +
                                           "' lacks " +
                                           detail::pair_label(ids, i, j));
      }
      m(i, j) = v->value();
      m(j, i) = v->reciprocal().value();
    }
  }
  return validate_pcm(std::move(m), ids, kInternalReciprocityTol);
}

inline PairwiseComparisonMatrix complete_from_upper(const Questionnaire& q) {
  return complete_from_upper(q, q.criteria);
}

/// Elementwise geometric mean over all input matrices. Per entry the logs are
/// summed in sorted order, so the result does not depend on input order.
inline PairwiseComparisonMatrix aggregate_geometric_mean(
    std::span<const PairwiseComparisonMatrix> pcms) {
  if (pcms.empty()) throw Error(Errc::EmptyInput, "no matrices to aggregate");
  const CriteriaIds& ids = pcms.front().criteria();
  const std::size_t n = ids.size();
  for (const auto& p : pcms) {
    if (p.criteria() != ids) {
      throw Error(Errc::DimensionMismatch,
                  "matrices disagree on criteria list or order");
    }
  }
  // exp(log(x)) does not round-trip, so a lone respondent passes through
  if (pcms.size() == 1) return pcms.front();
  const double count = static_cast<double>(pcms.size());
  SquareMatrix out = SquareMatrix::identity(n);
  std::vector<double> logs(pcms.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < pcms.size(); ++k) {
        logs[k] = std::log(pcms[k](i, j));
      }
      std::sort(logs.begin(), logs.end());
      double sum = 0.0;
      for (double l : logs) sum += l;
      out(i, j) = std::exp(sum / count);
    }
  }
  return validate_pcm(std::move(out), ids, kInternalReciprocityTol);
}

/// Returns the same matrix with criteria (rows and columns) reordered so that
/// new index k holds old index perm[k].
inline PairwiseComparisonMatrix permute(const PairwiseComparisonMatrix& pcm,
                                        std::span<const std::size_t> perm) {
  const std::size_t n = pcm.size();
  if (perm.size() != n) {
    throw Error(Errc::DimensionMismatch, "permutation length");
  }
  SquareMatrix m(n);
  CriteriaIds ids(n);
  for (std::size_t i = 0; i < n; ++i) {
    ids[i] = pcm.criteria()[perm[i]];
    for (std::size_t j = 0; j < n; ++j) m(i, j) = pcm(perm[i], perm[j]);
  }
  return validate_pcm(std::move(m), std::move(ids), kExternalReciprocityTol);
}

}  // namespace ahp
