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

#include "cli.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ahp/ahp.hpp"
#include "ahp/http_service.hpp"

namespace ahp::cli {
namespace {

struct Options {
  std::string model;
  std::vector<std::string> questionnaires;
  std::string pcm;
  std::string benefit_pcm;
  std::string cost_pcm;
  std::string benefit_weights;
  std::string cost_weights;
  std::string benefit_data;
  std::string cost_data;
  std::size_t top = 3;
  bool strict = false;
  bool force = false;
  std::string format = "text";
  std::string out_path;
  bool simulate = false;
  std::size_t samples = 100000;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  std::string bind = "127.0.0.1";
  int port = 8080;
  std::string journal;
  std::string ui_dir;
};

class Inconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Questionnaire> load_globbed(const std::vector<std::string>& patterns) {
  std::vector<std::string> paths;
  for (const auto& p : patterns) {
    for (auto& f : io::expand_glob(p)) paths.push_back(std::move(f));
  }
  return io::load_questionnaires(paths);
}

void emit(const Options& o, std::ostream& out, const std::string& body) {
  if (o.out_path.empty()) {
    out << body;
  } else {
    io::write_file(o.out_path, body);
  }
}

struct SetWeights {
  WeightVector weights;
  std::optional<ConsistencyReport> report;  // absent when read from a weights file
};

SetWeights resolve_weights(const Options& o, const DecisionModel& model, CriterionSet set,
                           const std::vector<Questionnaire>& qs) {
  const bool benefit = set == CriterionSet::Benefit;
  const std::string& weights_file = benefit ? o.benefit_weights : o.cost_weights;
  const std::string& pcm_file = benefit ? o.benefit_pcm : o.cost_pcm;
  const CriteriaIds ids = model.criteria_ids(set);
  if (!weights_file.empty()) {
    WeightVector w = io::weight_vector_from_json(
        io::detail::parse_json(io::read_file(weights_file), weights_file), weights_file);
    return {w, std::nullopt};
  }
  std::optional<PairwiseComparisonMatrix> pcm;
  if (!pcm_file.empty()) {
    pcm = align_to_model(io::load_pcm(pcm_file), model, set);
  } else {
    const auto mine = questionnaires_for(qs, ids);
    if (mine.empty()) {
      throw Error(Errc::EmptyInput, "no " + std::string(to_string(set)) +
                                        " judgments: pass --" + std::string(to_string(set)) +
                                        "-pcm, --" + std::string(to_string(set)) +
                                        "-weights or matching --questionnaires");
    }
    pcm = aggregate_questionnaires(mine, ids);
  }
  DerivedWeights d = derive_weights(*pcm);
  return {std::move(d.weights), d.report};
}

struct Scored {
  SetWeights benefit;
  SetWeights cost;
  PipelineResult result;
};

Scored run_scoring(const Options& o, std::ostream& err) {
  const DecisionModel model = io::load_model(o.model);
  const std::vector<Questionnaire> qs =
      o.questionnaires.empty() ? std::vector<Questionnaire>{} : load_globbed(o.questionnaires);
  Scored s;
  s.benefit = resolve_weights(o, model, CriterionSet::Benefit, qs);
  s.cost = resolve_weights(o, model, CriterionSet::Cost, qs);
  for (const auto* sw : {&s.benefit, &s.cost}) {
    if (sw->report && !sw->report->consistent) {
      const std::string which = sw == &s.benefit ? "benefit" : "cost";
      if (!o.force) {
        throw Inconsistency(which + " judgments have CR " + io::detail::fixed4(sw->report->cr) +
                            " >= 0.1; revise them or pass --force");
      }
      err << "warning: " << which << " judgments inconsistent (CR "
          << io::detail::fixed4(sw->report->cr) << "), continuing because of --force\n";
    }
  }
  s.result = score_and_rank(model, io::load_score_matrix(o.benefit_data),
                            io::load_score_matrix(o.cost_data), s.benefit.weights,
                            s.cost.weights, o.top);
  return s;
}

std::string pcm_to_text(const PairwiseComparisonMatrix& pcm) {
  std::size_t w = 7;
  for (const auto& id : pcm.criteria()) w = std::max(w, id.size() + 1);
  std::string out = io::detail::pad_right("", w);
  for (const auto& id : pcm.criteria()) out += io::detail::pad_left(id, 8);
  out += "\n";
  for (std::size_t i = 0; i < pcm.size(); ++i) {
    out += io::detail::pad_right(pcm.criteria()[i], w);
    for (std::size_t j = 0; j < pcm.size(); ++j) {
      out += io::detail::pad_left(io::detail::fixed4(pcm(i, j)), 8);
    }
    out += "\n";
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const Environment& env) {
  Options o;
  CLI::App app{"Pairwise-comparison decision engine", "ahp"};
  app.require_subcommand(1, 1);
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    c->add_option("--out", o.out_path, "Write output to PATH instead of stdout");
  };
  auto add_judgment_sources = [&](CLI::App* c) {
    c->add_option("--questionnaires", o.questionnaires,
                  "Questionnaire files (glob, repeatable); matched to sets by criteria");
    c->add_option("--benefit-pcm", o.benefit_pcm, "Benefit comparison matrix (JSON)");
    c->add_option("--cost-pcm", o.cost_pcm, "Cost comparison matrix (JSON)");
    c->add_option("--benefit-weights", o.benefit_weights, "Benefit weights (output of `weights`)");
    c->add_option("--cost-weights", o.cost_weights, "Cost weights (output of `weights`)");
    c->add_option("--model", o.model, "Decision model (JSON)")->required();
    c->add_option("--benefit-data", o.benefit_data, "Raw benefit score matrix (CSV)")
        ->required();
    c->add_option("--cost-data", o.cost_data, "Raw cost score matrix (CSV)")->required();
    c->add_flag("--force", o.force, "Score even when CR >= 0.1");
  };

  auto* aggregate = app.add_subcommand("aggregate", "Questionnaires -> comparison matrix");
  aggregate->add_option("--questionnaires", o.questionnaires, "Questionnaire files (glob)")
      ->required();
  add_format(aggregate);

  auto* weights = app.add_subcommand("weights", "Comparison matrix -> weights + consistency");
  weights->add_option("--pcm", o.pcm, "Comparison matrix (JSON)");
  weights->add_option("--questionnaires", o.questionnaires, "Questionnaire files (glob)");
  weights->add_flag("--strict", o.strict, "Exit 3 when CR >= 0.1");
  add_format(weights);

  auto* score = app.add_subcommand("score", "Model + raw data + weights -> BS/CS");
  add_judgment_sources(score);
  add_format(score);

  auto* rank = app.add_subcommand("rank", "Full pipeline -> ranking report");
  add_judgment_sources(rank);
  rank->add_option("--top", o.top, "Number of alternatives to select")
      ->check(CLI::PositiveNumber);
  add_format(rank);

  auto* ri = app.add_subcommand("ri-table", "Random consistency index table");
  ri->add_flag("--simulate", o.simulate, "Compare against a Monte-Carlo estimate");
  ri->add_option("--samples", o.samples, "Random matrices per dimension")
      ->check(CLI::PositiveNumber);
  ri->add_option("--seed", o.seed, "Simulation seed");
  ri->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  add_format(ri);

  auto* serve = app.add_subcommand("serve", "Start the HTTP session service");
  serve->add_option("--bind", o.bind, "Bind address");
  serve->add_option("--port", o.port, "Port")->check(CLI::Range(1, 65535));
  serve->add_option("--journal", o.journal, "Append-only JSON-lines journal");
  serve->add_option("--ui-dir", o.ui_dir, "Serve static UI assets from DIR");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  const bool json_out = o.format == "json";
  try {
    if (*aggregate) {
      const auto qs = load_globbed(o.questionnaires);
      const auto pcm = aggregate_questionnaires(qs);
      emit(o, out, json_out ? io::serialize_pcm(pcm) : pcm_to_text(pcm));
      return kExitOk;
    }
    if (*weights) {
      if (o.pcm.empty() == o.questionnaires.empty()) {
        err << "error: weights needs exactly one of --pcm or --questionnaires\n";
        return kExitUsage;
      }
      const PairwiseComparisonMatrix pcm = o.pcm.empty()
                                               ? aggregate_questionnaires(load_globbed(o.questionnaires))
                                               : io::load_pcm(o.pcm);
      const DerivedWeights d = derive_weights(pcm);
      emit(o, out,
           json_out ? io::detail::dump(io::weights_to_json(pcm, d))
                    : io::weights_to_text(d, env.color));
      if (o.strict && !d.report.consistent) {
        err << "error: CR " << io::detail::fixed4(d.report.cr) << " is not below 0.1\n";
        return kExitInconsistent;
      }
      return kExitOk;
    }
    if (*score) {
      const Scored s = run_scoring(o, err);
      emit(o, out,
           json_out ? io::detail::dump(io::scores_to_json(s.result.bs, s.result.cs))
                    : io::scores_to_text(s.result.bs, s.result.cs));
      return kExitOk;
    }
    if (*rank) {
      const Scored s = run_scoring(o, err);
      emit(o, out,
           json_out ? io::detail::dump(io::ranking_to_json(s.result.ranking))
                    : io::ranking_to_text(s.result.ranking, env.color));
      return kExitOk;
    }
    if (*ri) {
      const auto table = RandomIndexTable::standard();
      if (!o.simulate) {
        if (json_out) {
          io::json rows = io::json::array();
          for (std::size_t n = 1; n <= table.max_dimension(); ++n) {
            rows.push_back({{"dimension", n}, {"ri", table.at(n)}});
          }
          emit(o, out, io::detail::dump(rows));
        } else {
          emit(o, out, io::ri_table_csv(table));
        }
        return kExitOk;
      }
      io::json rows = io::json::array();
      std::string csv = "dimension,ri,simulated,difference\n";
      for (std::size_t n = 1; n <= table.max_dimension(); ++n) {
        const double sim = simulate_random_index(n, o.samples, o.seed, o.threads);
        rows.push_back({{"dimension", n}, {"ri", table.at(n)}, {"simulated", sim}});
        csv += std::to_string(n) + "," + io::detail::fixed4(table.at(n)) + "," +
               io::detail::fixed4(sim) + "," + io::detail::fixed4(sim - table.at(n)) + "\n";
      }
      emit(o, out, json_out ? io::detail::dump(rows) : csv);
      return kExitOk;
    }
    if (*serve) {
      service::ServeOptions so;
      so.bind = o.bind;
      so.port = o.port;
      if (!o.journal.empty()) so.journal = o.journal;
      if (!o.ui_dir.empty()) so.ui_dir = o.ui_dir;
      if (!service::serve(so, err)) {
        err << "error: cannot listen on " << o.bind << ":" << o.port << "\n";
        return kExitData;
      }
      return kExitOk;
    }
  } catch (const Inconsistency& e) {
    err << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::Inconsistent ? kExitInconsistent : kExitData;
  }
  return kExitUsage;
}

}  // namespace ahp::cli
