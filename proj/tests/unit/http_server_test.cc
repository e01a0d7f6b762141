// Copyright 2026 The AdjustSat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "adjustsat/http_server.h"

#include <fstream>
#include <thread>

#include <gtest/gtest.h>

#include "adjustsat/error.h"
#include "adjustsat/event_log.h"
#include "support/net_client.h"
#include "support/signals.h"
#include "support/study.h"

namespace adjustsat::harness {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no adjustsat::Error thrown";
  return ErrorCode::kIo;
}

void WriteFile(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream(path, std::ios::binary) << text;
}

TEST(ParseBindAddressTest, SplitsHostAndPort) {
  EXPECT_EQ(ParseBindAddress("127.0.0.1:8080"),
            (std::pair<std::string, unsigned short>{"127.0.0.1", 8080}));
  EXPECT_EQ(ParseBindAddress("0.0.0.0:0").second, 0);
  EXPECT_EQ(ParseBindAddress("[::1]:9000").first, "::1");
}

TEST(ParseBindAddressTest, RejectsMalformed) {
  for (const char* bad : {"8080", ":8080", "localhost:", "host:80x", "host:70000"}) {
    EXPECT_EQ(CodeOf([&] { ParseBindAddress(bad); }), ErrorCode::kInvalidArgument)
        << bad;
  }
}

TEST(ResolveCachePathTest, AcceptsVersionsAndIndex) {
  testing::TempDir dir;
  WriteFile(dir / "wdr1" / "v+0.0.wav", "x");
  const auto v = ResolveCachePath(dir.path(), "/cache/wdr1/v+0.0.wav");
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->filename(), "v+0.0.wav");
  EXPECT_TRUE(ResolveCachePath(dir.path(), "/cache/wdr1/index.json").has_value());
  EXPECT_TRUE(ResolveCachePath(dir.path(), "/cache/wdr1/v-2.0.wav?x=1").has_value());
}

TEST(ResolveCachePathTest, RejectsEscapesAndOtherFiles) {
  testing::TempDir dir;
  for (const char* bad :
       {"/cache/../etc/passwd", "/cache/wdr1/../../x.wav", "/cache/%2e%2e/v.wav",
        "/cache/wdr1/%2f..%2fv.wav", "/cache/wdr1/notes.txt", "/cache/wdr1",
        "/cache/a/b/v+0.0.wav", "/cache/.hidden/v+0.0.wav", "/static/v+0.0.wav",
        "/cache/wdr1/v+0.0.wav%"}) {
    EXPECT_FALSE(ResolveCachePath(dir.path(), bad).has_value()) << bad;
  }
}

class HttpServerTest : public ::testing::Test {
 protected:
  HttpServerTest()
      : playlist_(testing::PresentationPlaylist(30'000)),
        service_(playlist_, all_, ServiceConfig{results_.path()}) {
    WriteFile(cache_ / "wdr1" / "v+0.0.wav", "RIFFdata");
    WriteFile(cache_ / "wdr1" / "index.json", "{}\n");
    WriteFile(cache_ / "secret.txt", "nope");
  }

  ~HttpServerTest() override { StopServer(); }

  void StartServer(std::optional<fs::path> static_root = std::nullopt) {
    server_ = std::make_unique<HttpServer>(
        service_, ServerOptions{"127.0.0.1:0", cache_.path(), static_root});
    thread_ = std::thread([this] { server_->Run(); });
  }

  void StopServer() {
    if (!server_) return;
    server_->Stop();
    thread_.join();
    server_.reset();
  }

  testing::HttpReply Get(const std::string& target) {
    return testing::HttpGet("127.0.0.1", server_->port(), target);
  }

  testing::TempDir results_;
  testing::TempDir cache_;
  testing::AllVersionsPresent all_;
  std::shared_ptr<const session::Playlist> playlist_;
  SessionService service_;
  std::unique_ptr<HttpServer> server_;
  std::thread thread_;
};

TEST_F(HttpServerTest, BindsAnEphemeralPort) {
  StartServer();
  EXPECT_NE(server_->port(), 0);
  EXPECT_EQ(server_->address(), "127.0.0.1:" + std::to_string(server_->port()));
}

TEST_F(HttpServerTest, PortInUse) {
  StartServer();
  const std::string bind = "127.0.0.1:" + std::to_string(server_->port());
  EXPECT_EQ(CodeOf([&] { HttpServer other(service_, ServerOptions{bind, cache_.path()}); }),
            ErrorCode::kAddressInUse);
}

TEST_F(HttpServerTest, BadBindHost) {
  EXPECT_EQ(CodeOf([&] {
              HttpServer s(service_, ServerOptions{"not-an-ip:0", cache_.path()});
            }),
            ErrorCode::kInvalidArgument);
}

TEST_F(HttpServerTest, VersionEndpoint) {
  StartServer();
  const auto r = Get("/api/version");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.content_type, "application/json");
  const json body = json::parse(r.body);
  EXPECT_EQ(body["toolkit_version"], std::string(session::kToolkitVersion));
  EXPECT_EQ(body["protocol"], 1);
}

TEST_F(HttpServerTest, ServesCacheFiles) {
  StartServer();
  auto r = Get("/cache/wdr1/v+0.0.wav");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.content_type, "audio/wav");
  EXPECT_EQ(r.body, "RIFFdata");
  r = Get("/cache/wdr1/index.json");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.content_type, "application/json");
  EXPECT_EQ(Get("/cache/wdr1/v-9.0.wav").status, 404);
  EXPECT_EQ(Get("/cache/../secret.txt").status, 403);
  EXPECT_EQ(Get("/cache/wdr1/%2e%2e%2fsecret.txt").status, 403);
}

TEST_F(HttpServerTest, PlaceholderWithoutUi) {
  StartServer();
  const auto r = Get("/");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.content_type, "text/html; charset=utf-8");
  EXPECT_NE(r.body.find("/ws"), std::string::npos);
  EXPECT_EQ(Get("/app.js").status, 404);
  EXPECT_EQ(Get("/ws").status, 426);
}

TEST_F(HttpServerTest, ServesStaticUi) {
  testing::TempDir ui;
  WriteFile(ui / "index.html", "<html>ui</html>");
  WriteFile(ui / "assets" / "app.js", "console.log(1)");
  StartServer(ui.path());
  auto r = Get("/");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body, "<html>ui</html>");
  r = Get("/assets/app.js");
  EXPECT_EQ(r.content_type, "application/javascript");
  EXPECT_EQ(r.body, "console.log(1)");
  EXPECT_EQ(Get("/missing.css").status, 404);
  EXPECT_EQ(Get("/../secret.txt").status, 403);
  EXPECT_EQ(Get("/.env").status, 403);
}

TEST_F(HttpServerTest, WebSocketSession) {
  StartServer();
  testing::WsClient client("127.0.0.1", server_->port());
  auto r = client.Hello("P07");
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0]["type"], "audio");
  EXPECT_EQ(r[1]["view"]["phase"], "Training");

  testing::WsClient second("127.0.0.1", server_->port());
  r = second.Hello("P08");
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0]["type"], "busy");

  r = client.Exchange(json{{"type", "nonsense"}});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0]["type"], "error");

  for (const auto& e : testing::ScriptedSession(*playlist_)) r = client.Send(e);
  EXPECT_EQ(r.back()["view"]["phase"], "Done");
  EXPECT_EQ(r.back()["view"]["message"], std::string(session::kCompletionMessage));
  client.Close();
  second.Close();
  StopServer();
  EXPECT_EQ(service_.completed_sessions(), 1u);
  EXPECT_TRUE(fs::exists(service_.results_csv()));
}

TEST_F(HttpServerTest, DisconnectPausesTheSession) {
  StartServer();
  {
    testing::WsClient client("127.0.0.1", server_->port());
    client.Hello("P09");
    client.Send({500, session::KnobDelta{1}});
    client.Close();
  }
  // The server notices the close asynchronously; until then the pid is busy.
  testing::WsClient again("127.0.0.1", server_->port());
  std::vector<json> r;
  for (int attempt = 0; attempt < 100; ++attempt) {
    r = again.Hello("P09");
    if (!r.empty() && r.back()["type"] != "busy") break;
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  ASSERT_FALSE(r.empty());
  EXPECT_EQ(r.back()["view"]["paused"], true);
  again.Close();
}

}  // namespace
}  // namespace adjustsat::harness
