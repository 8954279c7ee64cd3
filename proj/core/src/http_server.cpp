/*
 * Copyright 2026 The affectnav Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "affectnav/http_server.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include <httplib.h>

#include "affectnav/errors.hpp"
#include "affectnav/report.hpp"
#include "json_codec.hpp"

namespace affectnav {
namespace {

using detail::json;

class BadRequest : public Error {
public:
    explicit BadRequest(const std::string& message) : Error("bad_request", message) {}
};

class Unauthorized : public Error {
public:
    Unauthorized() : Error("unauthorized", "missing or wrong X-Admin-Token") {}
};

int status_for(const std::string& code) {
    if (code == "unknown_session") return 404;
    if (code == "bad_request") return 400;
    if (code == "unauthorized") return 401;
    if (code == "empty_catalog") return 404;
    return 422;
}

void send_json(httplib::Response& res, int status, const std::string& body) {
    res.status = status;
    res.set_content(body, "application/json");
}

void send_error(httplib::Response& res, const std::string& code, const std::string& message) {
    send_json(res, status_for(code), json{{"error", {{"code", code}, {"message", message}}}}.dump());
}

json parse_body(const httplib::Request& req, bool allow_empty) {
    if (req.body.empty()) {
        if (allow_empty) return json::object();
        throw BadRequest("request body required");
    }
    try {
        auto j = json::parse(req.body);
        if (!j.is_object()) throw BadRequest("request body must be a JSON object");
        return j;
    } catch (const json::parse_error& e) {
        throw BadRequest(std::string("malformed JSON: ") + e.what());
    }
}

std::optional<double> query_number(const httplib::Request& req, const char* name) {
    if (!req.has_param(name)) return std::nullopt;
    const auto text = req.get_param_value(name);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw BadRequest(std::string("query parameter ") + name + " must be a number");
    }
    return v;
}

// Runs fn, mapping library errors onto JSON error responses.
template <typename Fn>
void guarded(httplib::Response& res, Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        send_error(res, e.code(), e.what());
    } catch (const json::exception& e) {
        send_error(res, "bad_request", e.what());
    } catch (const std::invalid_argument& e) {
        send_error(res, "bad_request", e.what());
    } catch (const std::exception& e) {
        res.status = 500;
        res.set_content(json{{"error", {{"code", "internal"}, {"message", e.what()}}}}.dump(), "application/json");
    }
}

} // namespace

struct HttpServer::Impl {
    ConciergeService& service;
    std::string admin_token;
    httplib::Server server;

    Impl(ConciergeService& s, std::string token) : service(s), admin_token(std::move(token)) { routes(); }

    void routes() {
        server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                    {"Access-Control-Allow-Headers", "Content-Type, X-Admin-Token"},
                                    {"Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS"}});
        server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

        server.Post("/sessions", [this](const httplib::Request& req, httplib::Response& res) {
            guarded(res, [&] {
                const auto body = parse_body(req, true);
                std::optional<std::string> persona;
                if (body.contains("persona") && !body["persona"].is_null()) {
                    persona = body["persona"].get<std::string>();
                }
                const auto id = service.create_session(persona);
                send_json(res, 201, detail::session_state(service.session(id)).dump());
            });
        });

        server.Post(R"(/sessions/([0-9a-f]+)/utterances)", [this](const httplib::Request& req, httplib::Response& res) {
            guarded(res, [&] {
                const auto body = parse_body(req, false);
                if (!body.contains("frame") || !body["frame"].is_string()) {
                    throw BadRequest("'frame' (case-frame notation) is required");
                }
                Utterance u{body["frame"].get<std::string>(), detail::context_from_json(body.value("context", json()))};
                const auto report = service.post_utterance(req.matches[1], u);
                send_json(res, 200, turn_report_json(report));
            });
        });

        server.Get(R"(/sessions/([0-9a-f]+)/state)", [this](const httplib::Request& req, httplib::Response& res) {
            guarded(res, [&] { send_json(res, 200, session_state_json(service.session(req.matches[1]))); });
        });

        server.Get(R"(/sessions/([0-9a-f]+)/recommendations)",
                   [this](const httplib::Request& req, httplib::Response& res) {
                       guarded(res, [&] {
                           RankQuery q;
                           const auto lat = query_number(req, "lat");
                           const auto lon = query_number(req, "lon");
                           if (lat.has_value() != lon.has_value()) throw BadRequest("lat and lon go together");
                           if (lat) q.here = GeoPoint{*lat, *lon};
                           q.radius_km = query_number(req, "radius_km");
                           if (q.radius_km && !q.here) throw BadRequest("radius_km needs lat and lon");
                           if (q.radius_km && *q.radius_km < 0.0) throw BadRequest("radius_km must be >= 0");
                           const auto ranked = service.recommendations(req.matches[1], q);
                           send_json(res, 200, ranked_spots_json(ranked));
                       });
                   });

        server.Get(R"(/admin/fv/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
            guarded(res, [&] {
                const std::string term = req.matches[1];
                std::optional<std::string> persona;
                if (req.has_param("persona")) persona = req.get_param_value("persona");
                std::optional<std::string_view> pv;
                if (persona) pv = *persona;
                const auto hit = service.engine().fv_store().lookup(term, pv);
                send_json(res, 200,
                          json{{"term", term}, {"value", hit.value}, {"provenance", provenance_name(hit.provenance)}}
                              .dump());
            });
        });

        server.Put(R"(/admin/fv/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
            guarded(res, [&] {
                if (!admin_token.empty() && req.get_header_value("X-Admin-Token") != admin_token) {
                    throw Unauthorized();
                }
                const std::string term = req.matches[1];
                const auto body = parse_body(req, false);
                if (!body.contains("value") || !body["value"].is_number()) throw BadRequest("'value' is required");
                const auto value = body["value"].get<double>();
                const auto layer = body.value("layer", std::string(kDefaultLayer));
                service.engine().fv_store().upsert(term, value, layer);
                send_json(res, 200, json{{"term", term}, {"value", value}, {"layer", layer}}.dump());
            });
        });

        server.Get("/spots", [this](const httplib::Request&, httplib::Response& res) {
            guarded(res, [&] { send_json(res, 200, catalog_json(service.engine().catalog())); });
        });
    }
};

HttpServer::HttpServer(ConciergeService& service, std::string admin_token)
    : impl_(std::make_unique<Impl>(service, std::move(admin_token))) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
    if (impl_) impl_->server.stop();
}

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

} // namespace affectnav
