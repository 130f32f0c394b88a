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

// Shared test helpers. The oracles below are written from the definitions
// and deliberately share no code with the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "ahp/ahp.hpp"

namespace ahp::test {

inline std::filesystem::path fixture_dir() { return AHP_FIXTURE_DIR; }

inline std::string fixture(const std::string& rel) { return (fixture_dir() / rel).string(); }

inline const io::Manifest& manifest() {
  static const io::Manifest m = io::load_manifest(fixture_dir() / "manifest.json");
  return m;
}

inline std::vector<std::string> paths_of(const std::string& key) {
  std::vector<std::string> out;
  for (const auto& p : manifest().questionnaires.at(key)) out.push_back(p.string());
  return out;
}

inline std::vector<Questionnaire> fixture_questionnaires(const std::string& key) {
  return io::load_questionnaires(paths_of(key));
}

inline PairwiseComparisonMatrix fixture_pcm(const std::string& key) {
  return io::load_pcm(manifest().file(key).string());
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return a.size() == b.size() ? d : INFINITY;
}

using Rows = std::vector<std::vector<double>>;

inline Rows rows_of(const PairwiseComparisonMatrix& p) { return p.entries().to_rows(); }

namespace oracle {

// (Π x)^(1/N) by direct product.
inline double geomean(const std::vector<double>& xs) {
  long double prod = 1.0L;
  for (double x : xs) prod *= x;
  return static_cast<double>(std::pow(prod, 1.0L / static_cast<long double>(xs.size())));
}

inline Rows geomean_matrix(const std::vector<Rows>& ms) {
  const std::size_t n = ms.front().size();
  Rows out(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<double> xs;
      for (const auto& m : ms) xs.push_back(m[i][j]);
      out[i][j] = geomean(xs);
    }
  }
  return out;
}

inline Rows matmul(const Rows& a, const Rows& b) {
  const std::size_t n = a.size();
  Rows c(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

struct Perron {
  double lambda = 0.0;
  std::vector<double> w;  // sums to 1
};

// Principal pair by repeated squaring: M^(2^k) tends to rank one with every
// column proportional to the Perron vector. λ from the mean of (Mw)_i / w_i.
inline Perron perron(const Rows& m) {
  const std::size_t n = m.size();
  Rows p = m;
  for (int k = 0; k < 60; ++k) {
    p = matmul(p, p);
    double s = 0.0;
    for (const auto& r : p) {
      for (double x : r) s += x;
    }
    for (auto& r : p) {
      for (double& x : r) x /= s;
    }
  }
  Perron out;
  out.w.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.w[i] += p[i][j];
  }
  double s = 0.0;
  for (double x : out.w) s += x;
  for (double& x : out.w) x /= s;
  for (std::size_t i = 0; i < n; ++i) {
    double mw = 0.0;
    for (std::size_t j = 0; j < n; ++j) mw += m[i][j] * out.w[j];
    out.lambda += mw / out.w[i];
  }
  out.lambda /= static_cast<double>(n);
  return out;
}

// Column-wise min-max with degenerate columns set to 1.
inline Rows min_max(const Rows& raw) {
  Rows out = raw;
  const std::size_t cols = raw.front().size();
  for (std::size_t c = 0; c < cols; ++c) {
    double lo = raw[0][c];
    double hi = raw[0][c];
    for (const auto& r : raw) {
      lo = std::min(lo, r[c]);
      hi = std::max(hi, r[c]);
    }
    for (std::size_t r = 0; r < raw.size(); ++r) {
      out[r][c] = hi == lo ? 1.0 : (raw[r][c] - lo) / (hi - lo);
    }
  }
  return out;
}

inline std::vector<double> weighted(const Rows& norm, const std::vector<double>& w) {
  std::vector<double> out(norm.size(), 0.0);
  for (std::size_t r = 0; r < norm.size(); ++r) {
    for (std::size_t c = 0; c < w.size(); ++c) out[r] += norm[r][c] * w[c];
  }
  return out;
}

}  // namespace oracle

// ---------------------------------------------------------------------------
// Random instances

inline CriteriaIds make_ids(std::size_t n) {
  CriteriaIds ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("c" + std::to_string(i));
  return ids;
}

inline std::vector<double> random_weights(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> w(n);
  double s = 0.0;
  for (double& x : w) s += (x = u(rng));
  for (double& x : w) x /= s;
  return w;
}

// m[i][j] = w_i / w_j: perfectly consistent.
inline PairwiseComparisonMatrix consistent_pcm(const std::vector<double>& w) {
  const std::size_t n = w.size();
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? 1.0 : w[i] / w[j];
  }
  return validate_pcm(m, make_ids(n), kInternalReciprocityTol);
}

inline Questionnaire random_questionnaire(std::mt19937_64& rng, const CriteriaIds& ids,
                                          const std::string& respondent) {
  std::uniform_int_distribution<std::size_t> pick(0, kJudgmentScale.size() - 1);
  Questionnaire q{respondent, ids, {}};
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      q.judgments.push_back({ids[i], ids[j], kJudgmentScale[pick(rng)]});
    }
  }
  return q;
}

inline PairwiseComparisonMatrix random_pcm(std::mt19937_64& rng, std::size_t n) {
  return complete_from_upper(random_questionnaire(rng, make_ids(n), "r"));
}

inline Rows random_rows(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                        double lo = -100.0, double hi = 100.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  Rows out(rows, std::vector<double>(cols));
  for (auto& r : out) {
    for (double& x : r) x = u(rng);
  }
  return out;
}

}  // namespace ahp::test
