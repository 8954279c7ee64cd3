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

#pragma once

// HTTP+JSON facade over ConciergeService.
//
//   POST /sessions                               {"persona": "..."}?
//   POST /sessions/{id}/utterances               {"frame": "...", "context": {...}}
//   GET  /sessions/{id}/state
//   GET  /sessions/{id}/recommendations?lat=&lon=&radius_km=
//   GET  /admin/fv/{term}?persona=
//   PUT  /admin/fv/{term}                        {"value": x, "layer": "default"}
//   GET  /spots
//
// Errors come back as {"error": {"code": "...", "message": "..."}}.
// When an admin token is configured, PUT /admin/fv requires it in the
// X-Admin-Token header.

#include <memory>
#include <string>

#include "affectnav/service.hpp"

namespace affectnav {

class HttpServer {
public:
    HttpServer(ConciergeService& service, std::string admin_token = {});
    ~HttpServer();

    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    // port 0 binds an ephemeral port. Returns the bound port, or -1.
    int bind(const std::string& host, int port);
    // Blocks until stop().
    bool listen_after_bind();
    void stop();
    void wait_until_ready() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace affectnav
