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
#include <array>
#include <cmath>
#include <cstdint>
#include <exception>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "ahp/error.hpp"
#include "ahp/matrix.hpp"
#include "ahp/pcm.hpp"
#include "ahp/scale.hpp"

namespace ahp {

/// Judgments are acceptable when CR is strictly below this.
inline constexpr double kConsistencyThreshold = 0.1;

struct PowerIterationOptions {
  double tolerance = 1e-12;
  std::size_t max_iterations = 100000;
  /// Positive start vector; empty means uniform 1/n.
  std::vector<double> start;
};

struct Eigenpair {
  double lambda_max = 0.0;
  std::vector<double> vector;  ///< L1-normalized, strictly positive
  std::size_t iterations = 0;
};

namespace detail {

// Power iteration with L1 renormalization. For a positive matrix the sum of
// M·v with Σv = 1 is the Rayleigh-type estimate of the Perron root.
inline Eigenpair power_iteration(const SquareMatrix& m,
                                 const PowerIterationOptions& opts) {
  const std::size_t n = m.size();
  std::vector<double> v(n, 1.0 / static_cast<double>(n));
  if (!opts.start.empty()) {
    if (opts.start.size() != n) {
      throw Error(Errc::DimensionMismatch, "start vector length");
    }
    double s = 0.0;
    for (double x : opts.start) {
      if (!(x > 0.0)) {
        throw Error(Errc::NonPositiveEntry, "start vector must be positive");
      }
      s += x;
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = opts.start[i] / s;
  }
  std::vector<double> w(n);
  double lambda = 0.0;
  for (std::size_t it = 1; it <= opts.max_iterations; ++it) {
    m.multiply(v, w);
    double s = 0.0;
    for (double x : w) s += x;
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double next = w[i] / s;
      diff = std::max(diff, std::abs(next - v[i]));
      v[i] = next;
    }
    const double prev = lambda;
    lambda = s;
    if (diff < opts.tolerance && std::abs(lambda - prev) < opts.tolerance) {
      return {lambda, std::move(v), it};
    }
  }
  throw Error(Errc::NoConvergence,
              "power iteration did not settle after " +
                  std::to_string(opts.max_iterations) + " iterations");
}

}  // namespace detail

/// Dominant eigenvalue and L1-normalized positive eigenvector.
inline Eigenpair principal_eigenpair(const PairwiseComparisonMatrix& pcm,
                                     const PowerIterationOptions& opts = {}) {
  return detail::power_iteration(pcm.entries(), opts);
}

/// ‖M·v − λ·v‖∞
inline double eigen_residual(const SquareMatrix& m, const Eigenpair& e) {
  std::vector<double> mv(m.size());
  m.multiply(e.vector, mv);
  double r = 0.0;
  for (std::size_t i = 0; i < mv.size(); ++i) {
    r = std::max(r, std::abs(mv[i] - e.lambda_max * e.vector[i]));
  }
  return r;
}

/// Random consistency index by matrix dimension, 1..15.
class RandomIndexTable {
 public:
  static constexpr std::size_t kMaxDimension = 15;

  constexpr explicit RandomIndexTable(std::array<double, kMaxDimension> ri)
      : ri_(ri) {}

  /// The published table, including its dip at n = 12.
  static constexpr RandomIndexTable standard() {
    return RandomIndexTable({0.00, 0.00, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41,
                             1.45, 1.49, 1.51, 1.48, 1.56, 1.57, 1.59});
  }

  double at(std::size_t n) const {
    if (n < 1 || n > kMaxDimension) {
      throw Error(Errc::DimensionOutOfTable,
                  "no random index for dimension " + std::to_string(n));
    }
    return ri_[n - 1];
  }

  constexpr std::size_t max_dimension() const noexcept { return kMaxDimension; }

 private:
  std::array<double, kMaxDimension> ri_;
};

struct ConsistencyReport {
  double lambda_max = 0.0;
  std::size_t n = 0;
  double ci = 0.0;
  double ri = 0.0;
  double cr = 0.0;
  bool consistent = true;
};

inline double consistency_index(double lambda_max, std::size_t n) {
  if (n <= 1) return 0.0;
  return (lambda_max - static_cast<double>(n)) / static_cast<double>(n - 1);
}

struct ConsistencyRatio {
  double cr = 0.0;
  bool consistent = true;
};

/// CR = CI / RI(n); defined as 0 for n <= 2 where RI vanishes.
inline ConsistencyRatio consistency_ratio(double ci, std::size_t n,
                                          const RandomIndexTable& table) {
  const double ri = table.at(n);
  if (n <= 2) return {0.0, true};
  const double cr = ci / ri;
  return {cr, cr < kConsistencyThreshold};
}

struct WeightVector {
  CriteriaIds criteria;
  std::vector<double> weights;

  double weight(const std::string& id) const {
    return weights[detail::index_of(criteria, id)];
  }
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

struct DerivedWeights {
  WeightVector weights;
  ConsistencyReport report;
};

/// Principal-eigenvector weights plus the consistency report. In strict mode
/// a CR at or above 0.1 raises Inconsistent instead of returning weights.
inline DerivedWeights derive_weights(
    const PairwiseComparisonMatrix& pcm,
    const RandomIndexTable& table = RandomIndexTable::standard(),
    bool strict = false, const PowerIterationOptions& opts = {}) {
  const std::size_t n = pcm.size();
  const double ri = table.at(n);
  Eigenpair e = principal_eigenpair(pcm, opts);
  const double ci = consistency_index(e.lambda_max, n);
  const auto [cr, consistent] = consistency_ratio(ci, n, table);
  if (strict && !consistent) {
    throw Error(Errc::Inconsistent, "CR = " + std::to_string(cr) +
                                        " is not below " +
                                        std::to_string(kConsistencyThreshold));
  }
  // the iterate is already L1-normalized; renormalize once more so that the
  // weights sum to 1 up to a single rounding pass
  const double s = std::accumulate(e.vector.begin(), e.vector.end(), 0.0);
  for (double& x : e.vector) x /= s;
  return {WeightVector{pcm.criteria(), std::move(e.vector)},
          ConsistencyReport{e.lambda_max, n, ci, ri, cr, consistent}};
}

/// Pairs whose judgments deviate most from the derived weights, ranked by
/// |log(m[i][j]·w[j]/w[i])|. Only i < j is reported.
struct PairDeviation {
  std::string a;
  std::string b;
  double deviation = 0.0;
};

inline std::vector<PairDeviation> worst_pairs(
    const PairwiseComparisonMatrix& pcm, const WeightVector& w,
    std::size_t count) {
  std::vector<PairDeviation> all;
  const std::size_t n = pcm.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d =
          std::abs(std::log(pcm(i, j) * w.weights[j] / w.weights[i]));
      all.push_back({pcm.criteria()[i], pcm.criteria()[j], d});
    }
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const auto& x, const auto& y) {
                     return x.deviation > y.deviation;
                   });
  if (all.size() > count) all.resize(count);
  return all;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// CI of one random reciprocal matrix; the generator is keyed on the sample
// index so any sharding of the sample range produces the same values.
inline double random_matrix_ci(std::size_t n, std::uint64_t seed,
                               std::uint64_t index) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
  std::uniform_int_distribution<std::size_t> pick(0, kJudgmentScale.size() - 1);
  SquareMatrix m = SquareMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Judgment v = kJudgmentScale[pick(rng)];
      m(i, j) = v.value();
      m(j, i) = v.reciprocal().value();
    }
  }
  const Eigenpair e = power_iteration(m, {});
  return consistency_index(e.lambda_max, n);
}

}  // namespace detail

/// Mean CI of `samples` random reciprocal matrices whose upper-triangle
/// entries are uniform over the 17 scale values. Deterministic in
/// (n, samples, seed) regardless of `threads` (0 = hardware concurrency).
inline double simulate_random_index(std::size_t n, std::size_t samples,
                                    std::uint64_t seed,
                                    unsigned threads = 0) {
  if (n < 1 || n > RandomIndexTable::kMaxDimension) {
    throw Error(Errc::DimensionOutOfTable,
                "cannot simulate dimension " + std::to_string(n));
  }
  if (samples == 0) throw Error(Errc::EmptyInput, "samples must be >= 1");
  if (n <= 2) return 0.0;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, samples));

  std::vector<double> ci(samples);
  std::vector<std::exception_ptr> failures(threads);
  auto work = [&](std::size_t shard, std::size_t begin, std::size_t end) {
    try {
      for (std::size_t k = begin; k < end; ++k) {
        ci[k] = detail::random_matrix_ci(n, seed, k);
      }
    } catch (...) {
      failures[shard] = std::current_exception();
    }
  };
  std::vector<std::jthread> pool;
  const std::size_t chunk = (samples + threads - 1) / threads;
  for (std::size_t b = 0, shard = 0; b < samples; b += chunk, ++shard) {
    pool.emplace_back(work, shard, b, std::min(samples, b + chunk));
  }
  pool.clear();  // joins
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  double sum = 0.0;
  for (double x : ci) sum += x;
  return sum / static_cast<double>(samples);
}

}  // namespace ahp
