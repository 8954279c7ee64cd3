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

#include <gtest/gtest.h>

#include <httplib.h>
#include <json.hpp>

#include <memory>
#include <string>
#include <thread>

#include "affectnav/http_server.hpp"
#include "affectnav/service.hpp"
#include "test_support.hpp"

using namespace affectnav;
using nlohmann::json;

class HttpTest : public ::testing::Test {
protected:
    void SetUp() override {
        service = std::make_unique<ConciergeService>(testsupport::engine_in(dir.path()));
        server = std::make_unique<HttpServer>(*service, "token-1");
        port = server->bind("127.0.0.1", 0);
        ASSERT_GT(port, 0);
        thread = std::thread([this] { server->listen_after_bind(); });
        server->wait_until_ready();
        client = std::make_unique<httplib::Client>("127.0.0.1", port);
    }
    void TearDown() override {
        server->stop();
        if (thread.joinable()) thread.join();
    }

    std::string new_session() {
        const auto res = client->Post("/sessions", "{}", "application/json");
        EXPECT_EQ(res->status, 201);
        return json::parse(res->body)["id"].get<std::string>();
    }

    static void expect_error(const httplib::Result& res, int status, const std::string& code) {
        ASSERT_TRUE(res);
        EXPECT_EQ(res->status, status) << res->body;
        const auto body = json::parse(res->body);
        EXPECT_EQ(body["error"]["code"], code);
        EXPECT_TRUE(body["error"]["message"].is_string());
    }

    testsupport::TempDir dir;
    std::unique_ptr<ConciergeService> service;
    std::unique_ptr<HttpServer> server;
    std::unique_ptr<httplib::Client> client;
    std::thread thread;
    int port = 0;
};

TEST_F(HttpTest, SessionLifecycle) {
    const auto created = client->Post("/sessions", R"J({"persona": "alice"})J", "application/json");
    ASSERT_TRUE(created);
    EXPECT_EQ(created->status, 201);
    EXPECT_EQ(created->get_header_value("Access-Control-Allow-Origin"), "*");
    const auto body = json::parse(created->body);
    EXPECT_EQ(body["state"], "quiet");
    EXPECT_EQ(body["persona"], "alice");
    const std::string id = body["id"];

    const auto turn = client->Post("/sessions/" + id + "/utterances",
                                   R"J({"frame": "V(S:I, O:okonomiyaki, P:eat)"})J", "application/json");
    ASSERT_TRUE(turn);
    EXPECT_EQ(turn->status, 200);
    const auto report = json::parse(turn->body);
    EXPECT_EQ(report["previous_state"], "quiet");
    EXPECT_EQ(report["new_state"], "happy");
    EXPECT_EQ(report["chosen_group"], 2);
    EXPECT_EQ(report["emotions"][0]["type"], "joy");
    EXPECT_EQ(report["recommendations"].size(), 3u);

    const auto state = json::parse(client->Get("/sessions/" + id + "/state")->body);
    EXPECT_EQ(state["state"], "happy");
    EXPECT_EQ(state["turns"], 1);
}

TEST_F(HttpTest, ContextFlags) {
    const auto id = new_session();
    const auto res = client->Post("/sessions/" + id + "/utterances",
                                  R"J({"frame": "V(S:guide, O:camera, P:break)",
                                      "context": {"agent": "other", "approval": "disapprove"}})J",
                                  "application/json");
    ASSERT_EQ(res->status, 200);
    const auto report = json::parse(res->body);
    EXPECT_EQ(report["emotions"][2]["type"], "anger");
    // anger, distress and disliking share one strength; from quiet the sad
    // target of distress is the cheapest.
    EXPECT_EQ(report["new_state"], "sad");
    EXPECT_EQ(report["chosen_group"], 5);
}

TEST_F(HttpTest, Recommendations) {
    const auto id = new_session();
    auto res = client->Get("/sessions/" + id + "/recommendations");
    ASSERT_EQ(res->status, 200);
    EXPECT_EQ(json::parse(res->body)["spots"].size(), 10u);
    res = client->Get("/sessions/" + id + "/recommendations?lat=34.3955&lon=132.4536&radius_km=0");
    ASSERT_EQ(res->status, 200);
    const auto spots = json::parse(res->body)["spots"];
    ASSERT_EQ(spots.size(), 1u);
    EXPECT_EQ(spots[0]["name"], "Atomic Bomb Dome");
    EXPECT_EQ(spots[0]["km"], 0.0);
    expect_error(client->Get("/sessions/" + id + "/recommendations?lat=35&lon=135&radius_km=1"), 404,
                 "empty_catalog");
    expect_error(client->Get("/sessions/" + id + "/recommendations?lat=35"), 400, "bad_request");
    expect_error(client->Get("/sessions/" + id + "/recommendations?lat=abc&lon=1"), 400, "bad_request");
}

TEST_F(HttpTest, Errors) {
    expect_error(client->Get("/sessions/0123456789abcdef/state"), 404, "unknown_session");
    const auto id = new_session();
    const std::string path = "/sessions/" + id + "/utterances";
    expect_error(client->Post(path, R"J({"frame": "V(S:I, X:foo, P:go)"})J", "application/json"), 422,
                 "unknown_signature");
    expect_error(client->Post(path, R"J({"frame": "V(S:I, P:go"})J", "application/json"), 422, "syntax_error");
    expect_error(client->Post(path, R"J({"frame": "V(S:I, P:go)", "context": {"prospect": "confirmed"}})J",
                              "application/json"),
                 422, "context_error");
    expect_error(client->Post(path, R"J({"text": "hi"})J", "application/json"), 400, "bad_request");
    expect_error(client->Post(path, "not json", "application/json"), 400, "bad_request");
    expect_error(client->Post(path, R"J({"frame": "V(S:I, P:go)", "context": {"mood": "x"}})J", "application/json"),
                 400, "bad_request");
    // Failed turns leave the session alone.
    EXPECT_EQ(json::parse(client->Get("/sessions/" + id + "/state")->body)["turns"], 0);
}

TEST_F(HttpTest, AdminFv) {
    auto res = client->Get("/admin/fv/okonomiyaki");
    ASSERT_EQ(res->status, 200);
    EXPECT_EQ(json::parse(res->body)["value"], 0.8);
    EXPECT_EQ(json::parse(res->body)["provenance"], "default");

    expect_error(client->Put("/admin/fv/okonomiyaki", R"J({"value": -0.5})J", "application/json"), 401,
                 "unauthorized");
    httplib::Headers auth{{"X-Admin-Token", "token-1"}};
    res = client->Put("/admin/fv/okonomiyaki", auth, R"J({"value": -0.5, "layer": "bob"})J", "application/json");
    ASSERT_EQ(res->status, 200);
    res = client->Get("/admin/fv/okonomiyaki?persona=bob");
    EXPECT_EQ(json::parse(res->body)["value"], -0.5);
    EXPECT_EQ(json::parse(res->body)["provenance"], "personal");
    EXPECT_EQ(json::parse(client->Get("/admin/fv/okonomiyaki")->body)["value"], 0.8);
    expect_error(client->Put("/admin/fv/okonomiyaki", auth, R"J({"value": 1.5})J", "application/json"), 422,
                 "range_error");
    expect_error(client->Put("/admin/fv/okonomiyaki", auth, R"J({})J", "application/json"), 400, "bad_request");
    EXPECT_EQ(json::parse(client->Get("/admin/fv/unheard-of")->body)["provenance"], "unknown");
}

TEST_F(HttpTest, SpotsAndPreflight) {
    const auto res = client->Get("/spots");
    ASSERT_EQ(res->status, 200);
    EXPECT_EQ(json::parse(res->body)["spots"].size(), 10u);
    const auto pre = client->Options("/sessions");
    ASSERT_TRUE(pre);
    EXPECT_EQ(pre->status, 204);
    EXPECT_NE(pre->get_header_value("Access-Control-Allow-Headers").find("X-Admin-Token"), std::string::npos);
}
