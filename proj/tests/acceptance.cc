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

// Acceptance gate: one PASS/FAIL line per criterion. Tolerances and time
// budgets are fixed here, independent of the fixture manifest.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "ahp/http_service.hpp"
#include "cli.hpp"
#include "support.hpp"

namespace {

using namespace ahp;
using Clock = std::chrono::steady_clock;

constexpr double kAggregationTol = 5e-4;
constexpr double kEigenTol = 1e-3;
constexpr double kWeightTol = 5e-4;
constexpr double kPipelineTol = 5e-4;
constexpr double kIndexTol = 1e-4;
constexpr double kCarbonTol = 0.5;
constexpr double kRecoveryTol = 1e-8;
constexpr double kOracleTol = 1e-12;
constexpr double kRandomIndexTol = 0.1;
constexpr std::size_t kRandomIndexSamples = 100000;
constexpr std::uint64_t kRandomIndexSeed = 20240601;
constexpr double kFastBudget = 1.0;   // seconds
constexpr double kRandomIndexBudget = 60.0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "FAILED ") + what;
  }
};

std::string num(double v, int prec = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", prec, v);
  return buf;
}

double max_entry_error(const PairwiseComparisonMatrix& a, const PairwiseComparisonMatrix& b) {
  double e = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) e = std::max(e, std::abs(a(i, j) - b(i, j)));
  }
  return e;
}

Outcome aggregation_fidelity() {
  Outcome o;
  for (const auto& [qs, pcm] : {std::pair{"glass_benefit", "glass_benefit_pcm"},
                                std::pair{"glass_cost", "glass_cost_pcm"},
                                std::pair{"benefit", "benefit_pcm"}}) {
    const auto agg = aggregate_questionnaires(test::fixture_questionnaires(qs));
    const auto printed = test::fixture_pcm(pcm);
    const double err = agg.criteria() == printed.criteria() ? max_entry_error(agg, printed) : INFINITY;
    o.check(err <= kAggregationTol, std::string(qs) + " max|err| " + num(err, 3));
  }
  return o;
}

struct PublishedReport {
  const char* key;
  double lambda, ci, cr;
};
constexpr PublishedReport kReports[] = {{"glass_benefit_pcm", 10.3774, 0.0419, 0.0281},
                                        {"glass_cost_pcm", 5.1593, 0.0398, 0.0355},
                                        {"benefit_pcm", 11.4623, 0.0462, 0.0306}};

Outcome eigen_fidelity() {
  Outcome o;
  for (const auto& p : kReports) {
    const auto r = derive_weights(test::fixture_pcm(p.key)).report;
    const bool ok = std::abs(r.lambda_max - p.lambda) <= kEigenTol &&
                    std::abs(r.ci - p.ci) <= kEigenTol && std::abs(r.cr - p.cr) <= kEigenTol &&
                    r.consistent;
    o.check(ok, std::string(p.key) + " lambda " + num(r.lambda_max, 6) + " CI " + num(r.ci, 3) +
                    " CR " + num(r.cr, 3));
  }
  return o;
}

Outcome weight_fidelity() {
  struct Want {
    const char* key;
    std::vector<double> w;
    std::vector<double> alt;  // printed variant, same length; NaN where none
  };
  const double x = NAN;
  const std::vector<Want> wants = {
      {"glass_benefit_pcm",
       {0.1491, 0.1300, 0.0813, 0.1016, 0.1066, 0.0617, 0.0668, 0.1788, 0.0776, 0.0464},
       {x, x, x, 0.1017, x, x, x, x, x, x}},
      {"glass_cost_pcm", {0.2780, 0.3139, 0.1634, 0.0987, 0.1460}, {x, x, 0.1633, x, x}},
      {"benefit_pcm",
       {0.1452, 0.1272, 0.0765, 0.0953, 0.1027, 0.0547, 0.0618, 0.1650, 0.0745, 0.0425, 0.0546},
       std::vector<double>(11, x)}};
  Outcome o;
  for (const auto& want : wants) {
    const auto w = derive_weights(test::fixture_pcm(want.key)).weights.weights;
    double worst = 0.0;
    bool ok = w.size() == want.w.size();
    for (std::size_t i = 0; ok && i < w.size(); ++i) {
      double e = std::abs(w[i] - want.w[i]);
      if (!std::isnan(want.alt[i])) e = std::min(e, std::abs(w[i] - want.alt[i]));
      worst = std::max(worst, e);
    }
    ok = ok && worst <= kWeightTol;
    o.check(ok, std::string(want.key) + " max|err| " + num(worst, 3));
  }
  return o;
}

Outcome pipeline_fidelity() {
  const test::Rows table5 = {
      {0.0540, 0.0977, 0.0449, 0.0000, 1.0000, 0.0000, 0.0402, 1.0000, 0.0003, 1.0000, 0.0000},
      {1.0000, 0.0000, 0.0338, 0.7031, 0.0000, 1.0000, 1.0000, 1.0000, 0.0003, 0.0500, 0.0000},
      {0.4712, 0.1880, 1.0000, 1.0000, 0.2593, 0.0000, 0.1360, 1.0000, 0.0010, 0.0750, 1.0000},
      {0.0000, 1.0000, 0.0000, 0.0560, 0.2593, 0.0000, 0.0000, 1.0000, 1.0000, 0.0000, 0.0000},
      {0.1323, 0.4337, 0.0000, 0.0560, 0.2593, 0.0000, 0.0000, 1.0000, 0.0016, 0.0000, 0.0000},
      {0.1724, 0.0143, 0.2823, 0.5547, 1.0000, 0.0000, 0.1153, 1.0000, 0.0000, 0.0125, 0.0000}};
  const test::Rows table8 = {{0.0030, 1.0000, 0.0532, 0.0532, 1.0000},
                             {0.0060, 0.0422, 1.0000, 1.0000, 1.0000},
                             {1.0000, 0.0000, 0.0134, 0.0134, 1.0000},
                             {0.1470, 0.0248, 0.0000, 0.0000, 1.0000},
                             {0.0000, 0.0248, 0.0000, 0.0000, 1.0000},
                             {0.0060, 0.0422, 1.0000, 1.0000, 1.0000}};
  const std::vector<double> bs = {0.3364, 0.4984, 0.5220, 0.3986, 0.2714, 0.3766};
  const std::vector<double> cs = {0.4746, 0.4230, 0.4275, 0.1946, 0.1538, 0.4230};
  const std::vector<double> fs = {-0.13827331, 0.075331369, 0.094564818,
                                  0.203986922, 0.117649746, -0.04641927};
  const std::vector<std::string> top3 = {"paper", "cardboard", "rigid_plastic"};

  const auto model = io::load_model(test::fixture("model.json"));
  const auto r = score_and_rank(model, io::load_score_matrix(test::fixture("data/benefit.csv")),
                                io::load_score_matrix(test::fixture("data/cost.csv")),
                                derive_weights(test::fixture_pcm("benefit_pcm")).weights,
                                derive_weights(test::fixture_pcm("glass_cost_pcm")).weights, 3);
  auto table_err = [](const ScoreMatrix& m, const test::Rows& want) {
    double e = 0.0;
    for (std::size_t i = 0; i < want.size(); ++i) {
      for (std::size_t j = 0; j < want[i].size(); ++j) e = std::max(e, std::abs(m(i, j) - want[i][j]));
    }
    return e;
  };
  std::vector<double> got_fs;
  for (const auto& e : r.ranking.entries) got_fs.push_back(e.fs);
  Outcome o;
  const double e5 = table_err(r.benefit_normalized, table5);
  const double e8 = table_err(r.cost_normalized, table8);
  const double ebs = test::max_abs_diff(r.bs.scores, bs);
  const double ecs = test::max_abs_diff(r.cs.scores, cs);
  const double efs = test::max_abs_diff(got_fs, fs);
  o.check(e5 <= kPipelineTol, "benefit normalized " + num(e5, 2));
  o.check(e8 <= kPipelineTol, "cost normalized " + num(e8, 2));
  o.check(ebs <= kPipelineTol, "BS " + num(ebs, 2));
  o.check(ecs <= kPipelineTol, "CS " + num(ecs, 2));
  o.check(efs <= kPipelineTol, "FS " + num(efs, 2));
  std::string sel;
  for (const auto& s : r.ranking.selected) sel += (sel.empty() ? "" : ",") + s;
  o.check(r.ranking.selected == top3, "top-3 " + sel);
  return o;
}

Outcome preprocessing_fidelity() {
  Outcome o;
  const auto glass = io::load_composition(test::fixture("composition/glass.json"));
  const double want_si[] = {0.0070, 0.0570, 0.1049};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& c = glass.components[k];
    const double si = scarcity_index(c.demand, c.storage);
    o.check(std::abs(si - want_si[k]) <= kIndexTol, c.material + " SI " + num(si, 3));
  }
  const double lim = limitedness_index(glass);
  o.check(std::abs(lim - 0.0089) <= kIndexTol, "limitedness " + num(lim, 3));
  const double carbon = carbon_from_electricity(484.0);
  o.check(std::abs(carbon - 282.0) <= kCarbonTol, "carbon " + num(carbon, 5));
  return o;
}

Outcome property_suite() {
  Outcome o;
  std::mt19937_64 rng(7001);
  double worst_cr = 0.0;
  double worst_w = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 3 + static_cast<std::size_t>(t) % 7;
    const auto w = test::random_weights(rng, n);
    const auto d = derive_weights(test::consistent_pcm(w));
    worst_cr = std::max(worst_cr, std::abs(d.report.cr));
    worst_w = std::max(worst_w, test::max_abs_diff(d.weights.weights, w));
  }
  o.check(worst_cr < kRecoveryTol && worst_w <= kRecoveryTol,
          "recovery CR " + num(worst_cr, 2) + " w " + num(worst_w, 2));

  std::size_t bad = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t rows = 1 + static_cast<std::size_t>(t) % 8;
    const std::size_t cols = 1 + static_cast<std::size_t>(t / 8) % 6;
    const auto raw = test::random_rows(rng, rows, cols);
    std::vector<std::string> alts;
    for (std::size_t i = 0; i < rows; ++i) alts.push_back("a" + std::to_string(i));
    const auto n = min_max_normalize(ScoreMatrix::from_rows(alts, test::make_ids(cols), raw));
    for (std::size_t c = 0; c < cols; ++c) {
      bool has0 = false, has1 = false, all1 = true;
      for (std::size_t r = 0; r < rows; ++r) {
        const double v = n(r, c);
        if (v < 0.0 || v > 1.0) ++bad;
        has0 |= v == 0.0;
        has1 |= v == 1.0;
        all1 &= v == 1.0;
        for (std::size_t s = 0; s < rows; ++s) {
          if (raw[r][c] < raw[s][c] && v > n(s, c)) ++bad;
        }
      }
      if (!((has0 && has1) || all1)) ++bad;
    }
  }
  o.check(bad == 0, "normalization violations " + std::to_string(bad));

  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t rows = 1 + static_cast<std::size_t>(t) % 6;
    const std::size_t cols = 1 + static_cast<std::size_t>(t / 6) % 6;
    const auto raw = test::random_rows(rng, rows, cols);
    std::vector<std::string> alts;
    for (std::size_t i = 0; i < rows; ++i) alts.push_back("a" + std::to_string(i));
    const auto ids = test::make_ids(cols);
    const auto w = test::random_weights(rng, cols);
    const auto got =
        weighted_scores(min_max_normalize(ScoreMatrix::from_rows(alts, ids, raw)), {ids, w});
    worst = std::max(worst, test::max_abs_diff(got.scores,
                                               test::oracle::weighted(test::oracle::min_max(raw), w)));
  }
  o.check(worst <= kOracleTol, "oracle max|err| " + num(worst, 2));
  return o;
}

Outcome monte_carlo_ri() {
  Outcome o;
  const auto table = RandomIndexTable::standard();
  for (std::size_t n = 3; n <= 10; ++n) {
    const double sim = simulate_random_index(n, kRandomIndexSamples, kRandomIndexSeed);
    o.check(std::abs(sim - table.at(n)) <= kRandomIndexTol,
            "n=" + std::to_string(n) + " " + num(sim, 3));
  }
  return o;
}

Outcome service_equivalence() {
  Outcome o;
  service::SessionStore store;
  httplib::Server server;
  service::register_routes(server, store);
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  httplib::Client client("127.0.0.1", port);

  struct Case {
    const char* model;
    const char* set;
    const char* key;
  };
  const Case cases[] = {{"glass_model.json", "benefit", "glass_benefit"},
                        {"glass_model.json", "cost", "glass_cost"},
                        {"model.json", "benefit", "benefit"}};
  for (const auto& c : cases) {
    const auto created = client.Post("/sessions", io::read_file(test::fixture(c.model)),
                                     "application/json");
    const std::string id = io::json::parse(created->body)["id"];
    for (const auto& q : test::fixture_questionnaires(c.key)) {
      for (const auto& pj : q.judgments) {
        const io::json body = {{"respondent", q.respondent}, {"set", c.set}, {"a", pj.a},
                               {"b", pj.b}, {"value", pj.value.to_string()}};
        client.Put("/sessions/" + id + "/judgments", body.dump(), "application/json");
      }
    }
    const auto res = client.Get("/sessions/" + id + "/weights?set=" + c.set);
    std::ostringstream out, err;
    cli::run_cli({"weights", "--questionnaires",
                  test::fixture(std::string("questionnaires/") + c.key + "/*.json"), "--format",
                  "json"},
                 out, err);
    const bool same = res && res->status == 200 &&
                      io::detail::dump(io::json::parse(res->body)) == out.str();
    o.check(same, std::string(c.key) + (same ? " identical" : " differs"));
  }
  server.stop();
  worker.join();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"Aggregation fidelity", kFastBudget, aggregation_fidelity},
      {"Eigen fidelity", kFastBudget, eigen_fidelity},
      {"Weight fidelity", kFastBudget, weight_fidelity},
      {"Pipeline fidelity", kFastBudget, pipeline_fidelity},
      {"Preprocessing fidelity", kFastBudget, preprocessing_fidelity},
      {"Property suite", 0.0, property_suite},
      {"Monte-Carlo RI", kRandomIndexBudget, monte_carlo_ri},
      {"Service equivalence", 0.0, service_equivalence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.budget > 0.0) o.check(secs < c.budget, "runtime " + num(secs, 3) + " s");
    std::printf("%s  %-24s %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
