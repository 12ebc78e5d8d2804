// Copyright 2026 The c4learn Authors
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

#include "c4learn/http_server.hpp"

#include <functional>

#include "c4learn/error.hpp"
#include "httplib.h"

namespace c4learn {

namespace {

using Handler = std::function<Json(const httplib::Request&)>;

void reply(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_header("Access-Control-Allow-Origin", "*");
  res.set_content(body.dump(), "application/json");
}

httplib::Server::Handler wrap(Handler fn, int ok_status = 200) {
  return [fn = std::move(fn), ok_status](const httplib::Request& req, httplib::Response& res) {
    try {
      reply(res, ok_status, fn(req));
    } catch (const Error& e) {
      reply(res, http_status(e.code()), error_body(e));
    } catch (const std::exception& e) {
      reply(res, 500, Json{{"error", "Internal"}, {"message", e.what()}});
    }
  };
}

Json body_of(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  try {
    return Json::parse(req.body);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("request body is not JSON: ") + e.what());
  }
}

int int_param(const httplib::Request& req, const char* key, int fallback) {
  if (!req.has_param(key)) return fallback;
  try {
    return std::stoi(req.get_param_value(key));
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError, std::string("query parameter '") + key + "' must be an integer");
  }
}

}  // namespace

HttpServer::HttpServer(Service& service)
    : service_(service), server_(std::make_unique<httplib::Server>()) {
  auto& s = *server_;
  Service& svc = service_;
  s.Post("/teach", wrap([&svc](const auto& req) { return svc.create_teaching_session(body_of(req)); }, 201));
  s.Post("/teach/:id/demo", wrap([&svc](const auto& req) {
           return svc.submit_demonstration(req.path_params.at("id"), body_of(req));
         }));
  s.Post("/teach/:id/answer", wrap([&svc](const auto& req) {
           return svc.submit_answer(req.path_params.at("id"), body_of(req));
         }));
  s.Get("/teach/:id", wrap([&svc](const auto& req) { return svc.teaching_state(req.path_params.at("id")); }));
  s.Get("/rules", wrap([&svc](const auto&) { return svc.list_rules(); }));
  s.Get("/rules/:id", wrap([&svc](const auto& req) { return svc.get_rule(req.path_params.at("id")); }));
  s.Post("/play", wrap([&svc](const auto& req) { return svc.create_play_session(body_of(req)); }, 201));
  s.Post("/play/:id/move", wrap([&svc](const auto& req) {
           return svc.submit_move(req.path_params.at("id"), body_of(req));
         }));
  s.Get("/play/:id", wrap([&svc](const auto& req) {
          return svc.play_state(req.path_params.at("id"), int_param(req, "since", -1),
                                int_param(req, "wait_ms", 0));
        }));
  s.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return server_->listen_after_bind(); }

void HttpServer::stop() { server_->stop(); }

void HttpServer::wait_until_ready() const { server_->wait_until_ready(); }

}  // namespace c4learn
