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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ahp/error.hpp"
#include "ahp/io.hpp"
#include "ahp/scale.hpp"
#include "ahp/service.hpp"
#include "httplib.h"

namespace ahp::service {

inline int http_status(Errc code) {
  switch (code) {
    case Errc::UnknownSession: return 404;
    case Errc::IncompleteJudgments:
    case Errc::NoScoreData: return 409;
    case Errc::ParseError:
    case Errc::SchemaVersionUnsupported: return 400;
    default: return 422;
  }
}

/// Problem-details body: {status, code, detail}.
inline json problem(int status, std::string_view code, const std::string& detail) {
  return {{"status", status}, {"code", code}, {"detail", detail}};
}

namespace detail {

inline void send(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

inline json body_json(const httplib::Request& req) {
  try {
    return json::parse(req.body);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, "request body: " + io::detail::line_col(req.body, e.byte) +
                                      ": malformed JSON");
  }
}

inline std::string body_string(const json& b, const char* key) {
  return io::detail::string_field(b, key, "request body");
}

inline Judgment body_judgment(const json& b) {
  const json& v = io::detail::field(b, "value", "request body", "");
  if (v.is_string()) return Judgment::parse(v.get<std::string>());
  if (v.is_number_integer()) return Judgment::integer(v.get<int>());
  throw Error(Errc::OffScaleJudgment, "value must be a scale string like \"3\" or \"1/3\"");
}

inline std::size_t body_top(const json& b) {
  const auto it = b.find("top");
  if (it == b.end()) return 0;
  if (!it->is_number_integer() || it->get<long long>() < 1) {
    throw Error(Errc::ParseError, "request body: field 'top' must be an integer >= 1");
  }
  return it->get<std::size_t>();
}

// Wraps a handler so library errors become problem-details responses.
template <typename F>
auto guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const IncompleteError& e) {
      json body = problem(409, to_string(e.code()), e.detail());
      json missing = json::array();
      for (const auto& m : e.missing()) {
        missing.push_back({{"respondent", m.respondent.empty() ? json(nullptr) : json(m.respondent)},
                           {"a", m.a},
                           {"b", m.b}});
      }
      body["missing"] = missing;
      send(res, 409, body);
    } catch (const Error& e) {
      const int status = http_status(e.code());
      send(res, status, problem(status, to_string(e.code()), e.detail()));
    } catch (const json::exception& e) {
      send(res, 400, problem(400, "ParseError", e.what()));
    }
  };
}

}  // namespace detail

/// Installs the session API on `server`. The store must outlive the server.
inline void register_routes(httplib::Server& server, SessionStore& store) {
  using detail::guarded;
  using detail::send;
  const std::string id = "([0-9A-Za-z_-]+)";

  server.Get("/healthz", guarded([](const httplib::Request&, httplib::Response& res) {
               send(res, 200, {{"status", "ok"}});
             }));

  server.Post("/sessions", guarded([&store](const httplib::Request& req, httplib::Response& res) {
                const json b = detail::body_json(req);
                const json& m = b.contains("model") ? b.at("model") : b;
                send(res, 201, {{"id", store.create_session(io::model_from_json(m, "model"))}});
              }));

  server.Get("/sessions/" + id,
             guarded([&store](const httplib::Request& req, httplib::Response& res) {
               send(res, 200, store.describe(req.matches[1]));
             }));

  server.Put("/sessions/" + id + "/judgments",
             guarded([&store](const httplib::Request& req, httplib::Response& res) {
               const json b = detail::body_json(req);
               send(res, 200,
                    store.put_judgment(req.matches[1], detail::body_string(b, "respondent"),
                                       parse_set(detail::body_string(b, "set")),
                                       detail::body_string(b, "a"), detail::body_string(b, "b"),
                                       detail::body_judgment(b)));
             }));

  server.Get("/sessions/" + id + "/weights",
             guarded([&store](const httplib::Request& req, httplib::Response& res) {
               const std::string set =
                   req.has_param("set") ? req.get_param_value("set") : "benefit";
               send(res, 200, store.get_weights(req.matches[1], parse_set(set)));
             }));

  server.Post("/sessions/" + id + "/score",
              guarded([&store](const httplib::Request& req, httplib::Response& res) {
                const json b = detail::body_json(req);
                const ScoreMatrix benefit = io::score_matrix_from_json(
                    io::detail::field(b, "benefit", "request body", ""), "benefit");
                const ScoreMatrix cost = io::score_matrix_from_json(
                    io::detail::field(b, "cost", "request body", ""), "cost");
                send(res, 200,
                     store.score_session(req.matches[1], benefit, cost, detail::body_top(b)));
              }));

  server.Post("/sessions/" + id + "/sensitivity",
              guarded([&store](const httplib::Request& req, httplib::Response& res) {
                const json b = detail::body_json(req);
                std::optional<CriterionSet> set;
                if (b.contains("set")) set = parse_set(detail::body_string(b, "set"));
                const json& ds = io::detail::field(b, "deltas", "request body", "");
                if (!ds.is_array()) {
                  throw Error(Errc::ParseError, "request body: 'deltas' must be an array");
                }
                std::vector<double> deltas;
                for (const auto& d : ds) {
                  if (!d.is_number()) {
                    throw Error(Errc::ParseError, "request body: 'deltas' must hold numbers");
                  }
                  deltas.push_back(d.get<double>());
                }
                send(res, 200,
                     store.run_sensitivity(req.matches[1], set,
                                           detail::body_string(b, "criterion"), deltas,
                                           detail::body_top(b)));
              }));
}

struct ServeOptions {
  std::string bind = "127.0.0.1";
  int port = 8080;
  std::optional<std::filesystem::path> journal;
  std::optional<std::filesystem::path> ui_dir;
};

/// Blocks until the server stops. Returns false if the socket could not be
/// bound or the UI directory is missing.
inline bool serve(const ServeOptions& opts, std::ostream& log) {
  SessionStore store(opts.journal);
  httplib::Server server;
  register_routes(server, store);
  if (opts.ui_dir) {
    if (!server.set_mount_point("/", opts.ui_dir->string())) {
      log << "ui directory '" << opts.ui_dir->string() << "' not found\n";
      return false;
    }
  }
  log << "listening on http://" << opts.bind << ":" << opts.port << "\n" << std::flush;
  return server.listen(opts.bind, opts.port);
}

}  // namespace ahp::service
