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
#include <numeric>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ahp/eigen.hpp"
#include "ahp/error.hpp"
#include "ahp/hierarchy.hpp"

namespace ahp {

/// Grid emission factor used to turn recycling electricity into CO₂-eq.
inline constexpr double kGridEmissionFactor = 0.582;  // kg CO₂eq / kWh

// ---------------------------------------------------------------------------
// Raw-data preprocessing

/// Annual demand over known storage (1/year).
inline double scarcity_index(double demand, double storage) {
  if (!(storage > 0.0)) {
    throw Error(Errc::ZeroStorage, "storage must be positive");
  }
  if (demand < 0.0) throw Error(Errc::InvalidComposition, "negative demand");
  return demand / storage;
}

/// Σ SI_i · fraction_i, divided by the component count n.
inline double limitedness_index(const MaterialComposition& comp) {
  if (comp.components.empty()) {
    throw Error(Errc::EmptyComposition, "composition has no components");
  }
  double acc = 0.0;
  for (const auto& c : comp.components) {
    if (c.weight_fraction < 0.0 || c.weight_fraction > 1.0) {
      throw Error(Errc::InvalidComposition,
                  "weight fraction of '" + c.material + "' outside [0,1]");
    }
    acc += scarcity_index(c.demand, c.storage) * c.weight_fraction;
  }
  return acc / static_cast<double>(comp.components.size());
}

/// Arithmetic mean over the applicable treatment routes.
inline double mean_treatment_value(std::span<const double> values) {
  if (values.empty()) throw Error(Errc::EmptyList, "no treatment values");
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

/// g/cm³ → cm³/kg
inline double inverse_density(double density) {
  if (!(density > 0.0)) {
    throw Error(Errc::NonPositiveDensity, "density must be positive");
  }
  return 1000.0 / density;
}

/// kWh/ton → kg CO₂eq/ton
inline double carbon_from_electricity(double kwh,
                                      double factor = kGridEmissionFactor) {
  return kwh * factor;
}

// ---------------------------------------------------------------------------
// Score matrices

/// Alternatives × criteria values, row-major.
class ScoreMatrix {
 public:
  ScoreMatrix() = default;
  ScoreMatrix(std::vector<std::string> alternatives, CriteriaIds criteria,
              std::vector<double> values, bool normalized = false)
      : alternatives_(std::move(alternatives)),
        criteria_(std::move(criteria)),
        values_(std::move(values)),
        normalized_(normalized) {
    if (values_.size() != alternatives_.size() * criteria_.size()) {
      throw Error(Errc::DimensionMismatch,
                  "score matrix holds " + std::to_string(values_.size()) +
                      " values for " + std::to_string(alternatives_.size()) +
                      " alternatives x " + std::to_string(criteria_.size()) +
                      " criteria");
    }
    detail::require_unique_ids(criteria_);
    std::unordered_set<std::string> seen;
    for (const auto& a : alternatives_) {
      if (!seen.insert(a).second) {
        throw Error(Errc::DuplicateAlternative, "alternative '" + a + "'");
      }
    }
  }

  static ScoreMatrix from_rows(std::vector<std::string> alternatives,
                               CriteriaIds criteria,
                               const std::vector<std::vector<double>>& rows) {
    std::vector<double> flat;
    for (const auto& r : rows) {
      if (r.size() != criteria.size()) {
        throw Error(Errc::DimensionMismatch, "ragged score matrix row");
      }
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return ScoreMatrix(std::move(alternatives), std::move(criteria),
                       std::move(flat));
  }

  const std::vector<std::string>& alternatives() const noexcept {
    return alternatives_;
  }
  const CriteriaIds& criteria() const noexcept { return criteria_; }
  std::size_t rows() const noexcept { return alternatives_.size(); }
  std::size_t cols() const noexcept { return criteria_.size(); }
  bool normalized() const noexcept { return normalized_; }

  double operator()(std::size_t r, std::size_t c) const noexcept {
    return values_[r * criteria_.size() + c];
  }
  double& operator()(std::size_t r, std::size_t c) noexcept {
    return values_[r * criteria_.size() + c];
  }
  double at(const std::string& alternative, const std::string& criterion) const {
    const auto it =
        std::find(alternatives_.begin(), alternatives_.end(), alternative);
    if (it == alternatives_.end()) {
      throw Error(Errc::IdReferenceUnknown, "alternative '" + alternative + "'");
    }
    return (*this)(static_cast<std::size_t>(it - alternatives_.begin()),
                   detail::index_of(criteria_, criterion));
  }

  std::span<const double> values() const noexcept { return values_; }

  /// Copy with columns reordered to `order` (same id set required).
  ScoreMatrix with_criteria_order(const CriteriaIds& order) const {
    if (order.size() != criteria_.size()) {
      throw Error(Errc::CriteriaMismatch, "criterion count differs");
    }
    std::vector<std::size_t> src(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      const auto it = std::find(criteria_.begin(), criteria_.end(), order[k]);
      if (it == criteria_.end()) {
        throw Error(Errc::CriteriaMismatch,
                    "criterion '" + order[k] + "' missing from score matrix");
      }
      src[k] = static_cast<std::size_t>(it - criteria_.begin());
    }
    std::vector<double> v(values_.size());
    for (std::size_t r = 0; r < rows(); ++r) {
      for (std::size_t k = 0; k < order.size(); ++k) {
        v[r * order.size() + k] = (*this)(r, src[k]);
      }
    }
    return ScoreMatrix(alternatives_, order, std::move(v), normalized_);
  }

  friend bool operator==(const ScoreMatrix&, const ScoreMatrix&) = default;

 private:
  std::vector<std::string> alternatives_;
  CriteriaIds criteria_;
  std::vector<double> values_;
  bool normalized_ = false;
};

/// Column-wise (x − min)/(max − min); a constant column becomes all 1.
inline ScoreMatrix min_max_normalize(const ScoreMatrix& raw) {
  if (raw.normalized()) {
    throw Error(Errc::AlreadyNormalized, "matrix is already normalized");
  }
  if (raw.rows() == 0) throw Error(Errc::EmptyInput, "no alternatives");
  std::vector<double> out(raw.values().begin(), raw.values().end());
  const std::size_t cols = raw.cols();
  for (std::size_t c = 0; c < cols; ++c) {
    double lo = raw(0, c);
    double hi = raw(0, c);
    for (std::size_t r = 1; r < raw.rows(); ++r) {
      lo = std::min(lo, raw(r, c));
      hi = std::max(hi, raw(r, c));
    }
    const double span = hi - lo;
    for (std::size_t r = 0; r < raw.rows(); ++r) {
      out[r * cols + c] = span == 0.0 ? 1.0 : (raw(r, c) - lo) / span;
    }
  }
  return ScoreMatrix(raw.alternatives(), raw.criteria(), std::move(out), true);
}

struct ScoreVector {
  std::vector<std::string> alternatives;
  std::vector<double> scores;

  friend bool operator==(const ScoreVector&, const ScoreVector&) = default;
};

/// score_j = Σ_i normalized[j][i] · w_i, with weights matched to columns by id.
inline ScoreVector weighted_scores(const ScoreMatrix& normalized,
                                   const WeightVector& w) {
  if (!normalized.normalized()) {
    throw Error(Errc::NotNormalized, "weighted scoring needs a normalized matrix");
  }
  if (w.criteria.size() != normalized.cols() ||
      w.weights.size() != w.criteria.size()) {
    throw Error(Errc::CriteriaMismatch,
                "weights cover " + std::to_string(w.criteria.size()) +
                    " criteria, matrix has " +
                    std::to_string(normalized.cols()));
  }
  std::vector<double> aligned(normalized.cols());
  for (std::size_t c = 0; c < normalized.cols(); ++c) {
    const auto& id = normalized.criteria()[c];
    const auto it = std::find(w.criteria.begin(), w.criteria.end(), id);
    if (it == w.criteria.end()) {
      throw Error(Errc::CriteriaMismatch, "no weight for criterion '" + id + "'");
    }
    aligned[c] = w.weights[static_cast<std::size_t>(it - w.criteria.begin())];
  }
  ScoreVector out{normalized.alternatives(),
                  std::vector<double>(normalized.rows(), 0.0)};
  for (std::size_t r = 0; r < normalized.rows(); ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < normalized.cols(); ++c) {
      acc += normalized(r, c) * aligned[c];
    }
    out.scores[r] = acc;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ranking

struct AlternativeScore {
  std::string alternative;
  double bs = 0.0;
  double cs = 0.0;
  double fs = 0.0;
  std::size_t rank = 0;  ///< 1-based

  friend bool operator==(const AlternativeScore&,
                         const AlternativeScore&) = default;
};

struct RankingReport {
  std::vector<AlternativeScore> entries;  ///< input order
  std::vector<std::size_t> order;         ///< entry indices, best first
  std::vector<std::string> selected;      ///< top-k alternative ids
  std::size_t top_k = 0;

  std::vector<std::string> ranked_ids() const {
    std::vector<std::string> ids;
    for (std::size_t i : order) ids.push_back(entries[i].alternative);
    return ids;
  }

  friend bool operator==(const RankingReport&, const RankingReport&) = default;
};

/// Tie-break rule reported alongside every ranking.
inline constexpr std::string_view kTieBreak = "input-order";

/// FS = BS − CS, ranked descending; equal FS keeps input order. `top_k` of 0
/// selects every alternative.
inline RankingReport final_scores(const ScoreVector& bs, const ScoreVector& cs,
                                  std::size_t top_k = 0) {
  if (bs.alternatives.size() != cs.alternatives.size()) {
    throw Error(Errc::AlternativeMismatch, "benefit and cost scores cover "
                                           "different alternative counts");
  }
  RankingReport rep;
  for (std::size_t i = 0; i < bs.alternatives.size(); ++i) {
    const auto& id = bs.alternatives[i];
    const auto it = std::find(cs.alternatives.begin(), cs.alternatives.end(), id);
    if (it == cs.alternatives.end()) {
      throw Error(Errc::AlternativeMismatch, "no cost score for '" + id + "'");
    }
    const double c = cs.scores[static_cast<std::size_t>(it - cs.alternatives.begin())];
    rep.entries.push_back({id, bs.scores[i], c, bs.scores[i] - c, 0});
  }
  rep.order.resize(rep.entries.size());
  std::iota(rep.order.begin(), rep.order.end(), std::size_t{0});
  std::stable_sort(rep.order.begin(), rep.order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return rep.entries[a].fs > rep.entries[b].fs;
                   });
  for (std::size_t r = 0; r < rep.order.size(); ++r) {
    rep.entries[rep.order[r]].rank = r + 1;
  }
  rep.top_k = top_k == 0 ? rep.entries.size()
                         : std::min(top_k, rep.entries.size());
  for (std::size_t r = 0; r < rep.top_k; ++r) {
    rep.selected.push_back(rep.entries[rep.order[r]].alternative);
  }
  return rep;
}

/// Normalize both raw matrices, weight them and rank.
inline RankingReport rank_alternatives(const ScoreMatrix& benefit_raw,
                                       const ScoreMatrix& cost_raw,
                                       const WeightVector& benefit_w,
                                       const WeightVector& cost_w,
                                       std::size_t top_k = 0) {
  const ScoreVector bs = weighted_scores(min_max_normalize(benefit_raw), benefit_w);
  const ScoreVector cs = weighted_scores(min_max_normalize(cost_raw), cost_w);
  return final_scores(bs, cs, top_k);
}

// ---------------------------------------------------------------------------
// What-if analysis

/// Sets the target weight to w + delta and rescales the others
/// proportionally so the vector still sums to 1.
inline WeightVector reweight(const WeightVector& w, const std::string& criterion,
                             double delta) {
  const std::size_t t = detail::index_of(w.criteria, criterion);
  const double target = w.weights[t] + delta;
  if (w.weights.size() == 1) {
    if (delta != 0.0) {
      throw Error(Errc::WeightOutOfRange, "a single criterion always weighs 1");
    }
    return w;
  }
  if (!(target > 0.0 && target < 1.0)) {
    throw Error(Errc::WeightOutOfRange, "weight of '" + criterion + "' would be " +
                                            std::to_string(target));
  }
  const double rest = 1.0 - w.weights[t];
  WeightVector out = w;
  for (std::size_t i = 0; i < out.weights.size(); ++i) {
    out.weights[i] = i == t ? target : w.weights[i] * (1.0 - target) / rest;
  }
  return out;
}

struct RankChange {
  std::string alternative;
  std::size_t baseline_rank = 0;
  std::size_t rank = 0;
};

struct SensitivityPoint {
  double delta = 0.0;
  WeightVector weights;  ///< the perturbed set's weights
  RankingReport ranking;
  std::vector<RankChange> changes;  ///< alternatives whose rank moved
};

struct SensitivityScan {
  CriterionSet set = CriterionSet::Benefit;
  std::string criterion;
  RankingReport baseline;
  std::vector<SensitivityPoint> points;
};

/// Re-runs the ranking for each delta applied to one criterion's weight.
/// The criterion is looked up in the benefit set first, then the cost set.
inline SensitivityScan sensitivity_scan(const DecisionModel& model,
                                        const WeightVector& benefit_w,
                                        const WeightVector& cost_w,
                                        const ScoreMatrix& benefit_raw,
                                        const ScoreMatrix& cost_raw,
                                        const std::string& criterion,
                                        std::span<const double> deltas,
                                        std::size_t top_k = 0) {
  SensitivityScan scan;
  scan.criterion = criterion;
  const auto in = [&](CriterionSet s) {
    const auto ids = model.criteria_ids(s);
    return std::find(ids.begin(), ids.end(), criterion) != ids.end();
  };
  if (in(CriterionSet::Benefit)) {
    scan.set = CriterionSet::Benefit;
  } else if (in(CriterionSet::Cost)) {
    scan.set = CriterionSet::Cost;
  } else {
    throw Error(Errc::UnknownCriterion, "criterion '" + criterion + "'");
  }
  const ScoreVector bs0 = weighted_scores(min_max_normalize(benefit_raw), benefit_w);
  const ScoreVector cs0 = weighted_scores(min_max_normalize(cost_raw), cost_w);
  scan.baseline = final_scores(bs0, cs0, top_k);

  const bool benefit = scan.set == CriterionSet::Benefit;
  const ScoreMatrix norm =
      min_max_normalize(benefit ? benefit_raw : cost_raw);
  for (double d : deltas) {
    SensitivityPoint p;
    p.delta = d;
    p.weights = reweight(benefit ? benefit_w : cost_w, criterion, d);
    const ScoreVector s = weighted_scores(norm, p.weights);
    p.ranking = benefit ? final_scores(s, cs0, top_k) : final_scores(bs0, s, top_k);
    for (std::size_t i = 0; i < p.ranking.entries.size(); ++i) {
      const std::size_t before = scan.baseline.entries[i].rank;
      const std::size_t after = p.ranking.entries[i].rank;
      if (before != after) {
        p.changes.push_back({p.ranking.entries[i].alternative, before, after});
      }
    }
    scan.points.push_back(std::move(p));
  }
  return scan;
}

}  // namespace ahp
