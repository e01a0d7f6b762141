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

#ifndef ADJUSTSAT_HTTP_SERVER_H_
#define ADJUSTSAT_HTTP_SERVER_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "adjustsat/session_service.h"

namespace adjustsat::harness {

struct ServerOptions {
  std::string bind = "127.0.0.1:8080";  // port 0 picks a free port
  std::filesystem::path cache_root;
  // UI build to serve at "/"; a placeholder page is served when unset.
  std::optional<std::filesystem::path> static_root;
};

// HTTP + WebSocket front end of a SessionService, run on one thread:
//   GET /ws                       WebSocket, text frames of the protocol
//   GET /cache/<item>/<file>      rendered versions and index.json (read-only)
//   GET /api/version              {"toolkit_version": ..., "protocol": 1}
//   GET /<path>                   static UI assets
class HttpServer {
 public:
  // Binds immediately. Throws kAddressInUse or kInvalidArgument (bad bind).
  HttpServer(SessionService& service, ServerOptions options);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  unsigned short port() const;
  std::string address() const;

  // Serves until Stop() or SIGINT/SIGTERM when `handle_signals` is set.
  void Run(bool handle_signals = false);
  // Safe from any thread.
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Splits "host:port"; throws kInvalidArgument.
std::pair<std::string, unsigned short> ParseBindAddress(const std::string& bind);

// Maps a request path under /cache/ to a file inside `root`, or nullopt for
// anything that could escape it or is not a version file or index.
std::optional<std::filesystem::path> ResolveCachePath(
    const std::filesystem::path& root, std::string_view target);

}  // namespace adjustsat::harness

#endif  // ADJUSTSAT_HTTP_SERVER_H_
