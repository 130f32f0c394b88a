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

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ahp/eigen.hpp"
#include "ahp/error.hpp"
#include "ahp/hierarchy.hpp"
#include "ahp/io.hpp"
#include "ahp/pcm.hpp"
#include "ahp/pipeline.hpp"
#include "ahp/scale.hpp"
#include "ahp/scoring.hpp"

namespace ahp::service {

using json = nlohmann::json;

inline CriterionSet parse_set(std::string_view s) {
  if (s == "benefit") return CriterionSet::Benefit;
  if (s == "cost") return CriterionSet::Cost;
  throw Error(Errc::ParseError, "set must be 'benefit' or 'cost', got '" + std::string(s) + "'");
}

struct MissingJudgment {
  std::string respondent;  ///< empty when nobody has answered yet
  std::string a;
  std::string b;
};

/// IncompleteJudgments with the list of unanswered pairs attached.
class IncompleteError : public Error {
 public:
  IncompleteError(const std::string& detail, std::vector<MissingJudgment> missing)
      : Error(Errc::IncompleteJudgments, detail), missing_(std::move(missing)) {}
  const std::vector<MissingJudgment>& missing() const noexcept { return missing_; }

 private:
  std::vector<MissingJudgment> missing_;
};

/// In-memory sessions, each guarded by its own mutex. Mutations can be
/// appended to a JSON-lines journal and replayed on construction.
class SessionStore {
 public:
  explicit SessionStore(std::optional<std::filesystem::path> journal = std::nullopt)
      : journal_path_(std::move(journal)) {
    if (journal_path_ && std::filesystem::exists(*journal_path_)) replay();
  }

  std::string create_session(DecisionModel model) {
    model = validate_model(std::move(model));
    std::string id = new_id();
    {
      std::unique_lock lock(map_mu_);
      sessions_.emplace(id, std::make_shared<Session>(id, model));
    }
    append({{"op", "create"}, {"id", id}, {"model", io::model_to_json(model)}});
    return id;
  }

  /// Stores a judgment (either orientation) and returns the refreshed
  /// snapshot of that criterion set.
  json put_judgment(const std::string& id, const std::string& respondent,
                    CriterionSet set, const std::string& a, const std::string& b,
                    Judgment value) {
    auto s = find(id);
    std::lock_guard lock(s->mu);
    apply_judgment(*s, respondent, set, a, b, value);
    append({{"op", "judgment"}, {"id", id}, {"respondent", respondent},
            {"set", to_string(set)}, {"a", a}, {"b", b}, {"value", value.to_string()}});
    return snapshot(*s, set, respondent);
  }

  /// Weights document for a set; IncompleteError until every respondent has
  /// judged every pair.
  json get_weights(const std::string& id, CriterionSet set) const {
    auto s = find(id);
    std::lock_guard lock(s->mu);
    const auto& d = s->derived[index(set)];
    if (!d) throw incomplete(*s, set);
    return io::weights_to_json(d->pcm, d->weights);
  }

  /// Stores the raw matrices for later what-if runs and ranks.
  json score_session(const std::string& id, const ScoreMatrix& benefit_raw,
                     const ScoreMatrix& cost_raw, std::size_t top_k) {
    auto s = find(id);
    std::lock_guard lock(s->mu);
    ScoreMatrix b = align_to_model(benefit_raw, s->model, CriterionSet::Benefit);
    ScoreMatrix c = align_to_model(cost_raw, s->model, CriterionSet::Cost);
    const auto& db = require_derived(*s, CriterionSet::Benefit);
    const auto& dc = require_derived(*s, CriterionSet::Cost);
    const PipelineResult r =
        score_and_rank(s->model, b, c, db.weights.weights, dc.weights.weights, top_k);
    s->benefit_raw = std::move(b);
    s->cost_raw = std::move(c);
    touch(*s);
    append({{"op", "score_data"}, {"id", id},
            {"benefit", io::score_matrix_to_json(*s->benefit_raw)},
            {"cost", io::score_matrix_to_json(*s->cost_raw)}});
    json out = io::ranking_to_json(r.ranking);
    out["consistency"] = {{"benefit", io::consistency_to_json(db.weights.report)},
                          {"cost", io::consistency_to_json(dc.weights.report)}};
    return out;
  }

  json run_sensitivity(const std::string& id, std::optional<CriterionSet> set,
                       const std::string& criterion, const std::vector<double>& deltas,
                       std::size_t top_k) const {
    auto s = find(id);
    std::lock_guard lock(s->mu);
    if (set) {
      const auto ids = s->model.criteria_ids(*set);
      if (std::find(ids.begin(), ids.end(), criterion) == ids.end()) {
        throw Error(Errc::UnknownCriterion, "criterion '" + criterion + "' is not in the " +
                                                std::string(to_string(*set)) + " set");
      }
    }
    if (!s->benefit_raw || !s->cost_raw) {
      throw Error(Errc::NoScoreData, "score the session before running sensitivity");
    }
    const auto& db = require_derived(*s, CriterionSet::Benefit);
    const auto& dc = require_derived(*s, CriterionSet::Cost);
    return io::sensitivity_to_json(sensitivity_scan(s->model, db.weights.weights,
                                                    dc.weights.weights, *s->benefit_raw,
                                                    *s->cost_raw, criterion, deltas, top_k));
  }

  json describe(const std::string& id) const {
    auto s = find(id);
    std::lock_guard lock(s->mu);
    json sets = json::object();
    for (auto set : {CriterionSet::Benefit, CriterionSet::Cost}) {
      sets[std::string(to_string(set))] = snapshot(*s, set, "");
    }
    return {{"id", s->id},
            {"model", io::model_to_json(s->model)},
            {"sets", sets},
            {"has_score_data", s->benefit_raw.has_value()},
            {"created", s->created},
            {"updated", s->updated}};
  }

  std::size_t size() const {
    std::shared_lock lock(map_mu_);
    return sessions_.size();
  }

 private:
  using Pair = std::pair<std::size_t, std::size_t>;
  using Judgments = std::map<Pair, Judgment>;

  struct Derived {
    PairwiseComparisonMatrix pcm;
    DerivedWeights weights;
  };

  struct Session {
    Session(std::string id_, DecisionModel model_)
        : id(std::move(id_)), model(std::move(model_)), created(now()), updated(created) {}
    std::string id;
    DecisionModel model;
    std::map<std::string, Judgments> judgments[2];  // by respondent
    std::optional<Derived> derived[2];
    std::optional<ScoreMatrix> benefit_raw;
    std::optional<ScoreMatrix> cost_raw;
    std::int64_t created;
    std::int64_t updated;
    mutable std::mutex mu;
  };

  static std::size_t index(CriterionSet s) { return s == CriterionSet::Benefit ? 0 : 1; }

  static std::int64_t now() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
  }

  static void touch(Session& s) { s.updated = now(); }

  std::string new_id() {
    std::lock_guard lock(rng_mu_);
    std::uniform_int_distribution<std::uint64_t> d;
    std::ostringstream ss;
    ss << std::hex << d(rng_) << d(rng_);
    return ss.str();
  }

  std::shared_ptr<Session> find(const std::string& id) const {
    std::shared_lock lock(map_mu_);
    const auto it = sessions_.find(id);
    if (it == sessions_.end()) throw Error(Errc::UnknownSession, "session '" + id + "'");
    return it->second;
  }

  static std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

  void apply_judgment(Session& s, const std::string& respondent, CriterionSet set,
                      const std::string& a, const std::string& b, Judgment value) {
    if (respondent.empty()) throw Error(Errc::ParseError, "respondent must not be empty");
    const CriteriaIds ids = s.model.criteria_ids(set);
    const std::size_t i = detail::index_of(ids, a);
    const std::size_t j = detail::index_of(ids, b);
    if (i == j) throw Error(Errc::DuplicatePair, "self-pair (" + a + "," + b + ")");
    auto& slot = s.judgments[index(set)][respondent];
    if (i < j) {
      slot[{i, j}] = value;
    } else {
      slot[{j, i}] = value.reciprocal();
    }
    recompute(s, set);
    touch(s);
  }

  static bool complete(const Session& s, CriterionSet set) {
    const auto& by_resp = s.judgments[index(set)];
    const std::size_t need = pair_count(s.model.criteria(set).size());
    if (by_resp.empty() || s.model.criteria(set).empty()) return false;
    for (const auto& [r, js] : by_resp) {
      if (js.size() != need) return false;
    }
    return true;
  }

  static PairwiseComparisonMatrix to_pcm(const Judgments& js, const CriteriaIds& ids) {
    Questionnaire q;
    q.criteria = ids;
    for (const auto& [p, v] : js) q.judgments.push_back({ids[p.first], ids[p.second], v});
    return complete_from_upper(q, ids);
  }

  static void recompute(Session& s, CriterionSet set) {
    auto& slot = s.derived[index(set)];
    if (!complete(s, set)) {
      slot.reset();
      return;
    }
    const CriteriaIds ids = s.model.criteria_ids(set);
    std::vector<PairwiseComparisonMatrix> pcms;
    for (const auto& [r, js] : s.judgments[index(set)]) pcms.push_back(to_pcm(js, ids));
    PairwiseComparisonMatrix agg = aggregate_geometric_mean(pcms);
    DerivedWeights w = derive_weights(agg);
    slot.emplace(Derived{std::move(agg), std::move(w)});
  }

  static IncompleteError incomplete(const Session& s, CriterionSet set) {
    const CriteriaIds ids = s.model.criteria_ids(set);
    std::vector<MissingJudgment> missing;
    const auto& by_resp = s.judgments[index(set)];
    auto add_missing = [&](const std::string& r, const Judgments* js) {
      for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
          if (!js || !js->count({i, j})) missing.push_back({r, ids[i], ids[j]});
        }
      }
    };
    if (by_resp.empty()) {
      add_missing("", nullptr);
    } else {
      for (const auto& [r, js] : by_resp) add_missing(r, &js);
    }
    return IncompleteError(std::to_string(missing.size()) + " " +
                               std::string(to_string(set)) + " judgments missing",
                           std::move(missing));
  }

  static const Derived& require_derived(const Session& s, CriterionSet set) {
    const auto& d = s.derived[index(set)];
    if (!d) throw incomplete(s, set);
    return *d;
  }

  static json snapshot(const Session& s, CriterionSet set, const std::string& respondent) {
    const std::size_t need = pair_count(s.model.criteria(set).size());
    const auto& by_resp = s.judgments[index(set)];
    std::size_t judged = 0;
    json respondents = json::array();
    for (const auto& [r, js] : by_resp) {
      judged += js.size();
      respondents.push_back(r);
    }
    const std::size_t total = need * by_resp.size();
    json out = {{"set", to_string(set)},
                {"respondents", respondents},
                {"judged", judged},
                {"required", total},
                {"completeness", total == 0 ? 0.0 : static_cast<double>(judged) /
                                                        static_cast<double>(total)},
                {"complete", s.derived[index(set)].has_value()}};
    if (!respondent.empty()) {
      const auto it = by_resp.find(respondent);
      const std::size_t mine = it == by_resp.end() ? 0 : it->second.size();
      out["respondent"] = respondent;
      out["respondent_completeness"] =
          need == 0 ? 1.0 : static_cast<double>(mine) / static_cast<double>(need);
      if (it != by_resp.end() && mine == need) {
        const auto own = derive_weights(to_pcm(it->second, s.model.criteria_ids(set)));
        out["respondent_consistency"] = io::consistency_to_json(own.report);
      }
    }
    const auto& d = s.derived[index(set)];
    out["weights"] = d ? io::weights_to_json(d->pcm, d->weights) : json(nullptr);
    return out;
  }

  void append(const json& entry) {
    if (!journal_path_ || replaying_) return;
    std::lock_guard lock(journal_mu_);
    std::ofstream out(*journal_path_, std::ios::app);
    if (!out) throw Error(Errc::IoFailure, "cannot append to journal");
    out << entry.dump() << "\n";
  }

  void replay() {
    replaying_ = true;
    std::ifstream in(*journal_path_);
    std::string line;
    std::size_t lineno = 0;
    const std::string src = journal_path_->string();
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      const json e = io::detail::parse_json(line, src + ":" + std::to_string(lineno));
      const std::string op = e.value("op", "");
      const std::string id = e.value("id", "");
      if (op == "create") {
        auto model = io::model_from_json(e.at("model"), src);
        sessions_.emplace(id, std::make_shared<Session>(id, std::move(model)));
      } else if (op == "judgment") {
        auto s = find(id);
        apply_judgment(*s, e.at("respondent").get<std::string>(),
                       parse_set(e.at("set").get<std::string>()), e.at("a").get<std::string>(),
                       e.at("b").get<std::string>(),
                       Judgment::parse(e.at("value").get<std::string>()));
      } else if (op == "score_data") {
        auto s = find(id);
        s->benefit_raw = io::score_matrix_from_json(e.at("benefit"), src);
        s->cost_raw = io::score_matrix_from_json(e.at("cost"), src);
      } else {
        throw Error(Errc::ParseError, src + ":" + std::to_string(lineno) + ": unknown op '" +
                                          op + "'");
      }
    }
    replaying_ = false;
  }

  std::optional<std::filesystem::path> journal_path_;
  bool replaying_ = false;
  std::mutex journal_mu_;
  mutable std::shared_mutex map_mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mutex rng_mu_;
  std::mt19937_64 rng_{std::random_device{}()};
};

}  // namespace ahp::service
