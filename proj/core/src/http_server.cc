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

#include <atomic>
#include <cctype>
#include <charconv>
#include <deque>
#include <fstream>
#include <iostream>
#include <sstream>

#include <boost/asio/ip/tcp.hpp>
#include <boost/asio/signal_set.hpp>
#include <boost/asio/steady_timer.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>
#include <fmt/format.h>

#include "adjustsat/error.h"
#include "adjustsat/event_log.h"

namespace adjustsat::harness {

namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
namespace net = boost::asio;
using tcp = net::ip::tcp;

namespace {

constexpr std::string_view kPlaceholderPage =
    "<!doctype html>\n<html><head><meta charset=\"utf-8\">"
    "<title>adjustsat</title></head>\n<body><h1>adjustsat session service"
    "</h1>\n<p>No UI build is configured. Connect a client to <code>/ws"
    "</code>.</p></body></html>\n";

std::optional<std::string> PercentDecode(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '%') {
      out.push_back(s[i]);
      continue;
    }
    if (i + 2 >= s.size()) return std::nullopt;
    int v = 0;
    const auto [p, ec] = std::from_chars(s.data() + i + 1, s.data() + i + 3, v, 16);
    if (ec != std::errc() || p != s.data() + i + 3) return std::nullopt;
    out.push_back(static_cast<char>(v));
    i += 2;
  }
  return out;
}

// Decoded path segments, or nullopt when any segment is unsafe.
std::optional<std::vector<std::string>> SafeSegments(std::string_view path) {
  const std::size_t q = path.find_first_of("?#");
  if (q != std::string_view::npos) path = path.substr(0, q);
  std::vector<std::string> segments;
  std::size_t start = 0;
  while (start <= path.size()) {
    const std::size_t slash = path.find('/', start);
    const std::string_view raw = path.substr(
        start, slash == std::string_view::npos ? std::string_view::npos : slash - start);
    if (!raw.empty()) {
      std::optional<std::string> seg = PercentDecode(raw);
      if (!seg || seg->empty() || seg->front() == '.') return std::nullopt;
      for (char c : *seg) {
        const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '.' ||
                        c == '_' || c == '-' || c == '+';
        if (!ok) return std::nullopt;
      }
      segments.push_back(std::move(*seg));
    }
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return segments;
}

// Final guard: the resolved file must sit under the resolved root.
std::optional<std::filesystem::path> Contained(const std::filesystem::path& root,
                                               const std::filesystem::path& rel) {
  std::error_code ec;
  const auto base = std::filesystem::weakly_canonical(root, ec);
  if (ec) return std::nullopt;
  const auto full = std::filesystem::weakly_canonical(root / rel, ec);
  if (ec) return std::nullopt;
  auto b = base.begin();
  auto f = full.begin();
  for (; b != base.end(); ++b, ++f) {
    if (f == full.end() || *b != *f) return std::nullopt;
  }
  return full;
}

std::optional<std::filesystem::path> ResolveStaticPath(
    const std::filesystem::path& root, std::string_view target) {
  auto segments = SafeSegments(target);
  if (!segments) return std::nullopt;
  std::filesystem::path rel;
  for (const std::string& s : *segments) rel /= s;
  if (segments->empty()) rel = "index.html";
  auto path = Contained(root, rel);
  if (path && std::filesystem::is_directory(*path)) *path /= "index.html";
  return path;
}

std::string_view MimeType(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".html" || ext == ".htm") return "text/html; charset=utf-8";
  if (ext == ".js" || ext == ".mjs") return "application/javascript";
  if (ext == ".css") return "text/css";
  if (ext == ".json") return "application/json";
  if (ext == ".wav") return "audio/wav";
  if (ext == ".svg") return "image/svg+xml";
  if (ext == ".png") return "image/png";
  if (ext == ".ico") return "image/x-icon";
  return "application/octet-stream";
}

beast::string_view Sv(std::string_view s) { return {s.data(), s.size()}; }

using Request = http::request<http::string_body>;

class WsSession : public std::enable_shared_from_this<WsSession> {
 public:
  WsSession(tcp::socket socket, SessionService& service, ConnectionId id)
      : ws_(std::move(socket)), service_(service), id_(id) {}

  void Start(Request req) {
    ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.async_accept(req, [self = shared_from_this()](beast::error_code ec) {
      if (!ec) self->DoRead();
    });
  }

 private:
  void DoRead() {
    ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec,
                                                         std::size_t) {
      self->OnRead(ec);
    });
  }

  void OnRead(beast::error_code ec) {
    if (ec) {
      service_.OnDisconnect(id_);
      return;
    }
    const std::string text = beast::buffers_to_string(buffer_.data());
    buffer_.consume(buffer_.size());
    for (const nlohmann::json& reply : service_.OnText(id_, text)) {
      Send(reply.dump());
    }
    DoRead();
  }

  void Send(std::string message) {
    queue_.push_back(std::move(message));
    if (queue_.size() == 1) DoWrite();
  }

  void DoWrite() {
    ws_.text(true);
    ws_.async_write(net::buffer(queue_.front()),
                    [self = shared_from_this()](beast::error_code ec, std::size_t) {
                      if (ec) return;
                      self->queue_.pop_front();
                      if (!self->queue_.empty()) self->DoWrite();
                    });
  }

  websocket::stream<beast::tcp_stream> ws_;
  SessionService& service_;
  ConnectionId id_;
  beast::flat_buffer buffer_;
  std::deque<std::string> queue_;
};

class HttpSession : public std::enable_shared_from_this<HttpSession> {
 public:
  HttpSession(tcp::socket socket, SessionService& service,
              const ServerOptions& options, std::atomic<ConnectionId>& next_id)
      : stream_(std::move(socket)),
        service_(service),
        options_(options),
        next_id_(next_id) {}

  void Start() { DoRead(); }

 private:
  void DoRead() {
    req_ = {};
    stream_.expires_after(std::chrono::seconds(30));
    http::async_read(stream_, buffer_, req_,
                     [self = shared_from_this()](beast::error_code ec, std::size_t) {
                       self->OnRead(ec);
                     });
  }

  void OnRead(beast::error_code ec) {
    if (ec == http::error::end_of_stream) {
      stream_.socket().shutdown(tcp::socket::shutdown_send, ec);
      return;
    }
    if (ec) return;
    if (websocket::is_upgrade(req_)) {
      if (req_.target() == "/ws") {
        stream_.expires_never();
        std::make_shared<WsSession>(stream_.release_socket(), service_, next_id_++)
            ->Start(std::move(req_));
        return;
      }
      return SendText(http::status::not_found, "text/plain", "not found\n");
    }
    Handle();
  }

  void Handle() {
    if (req_.method() != http::verb::get && req_.method() != http::verb::head) {
      return SendText(http::status::method_not_allowed, "text/plain",
                      "method not allowed\n");
    }
    const std::string_view target(req_.target().data(), req_.target().size());
    if (target == "/api/version") {
      const nlohmann::json body{{"toolkit_version", session::kToolkitVersion},
                                {"protocol", 1}};
      return SendText(http::status::ok, "application/json", body.dump() + "\n");
    }
    if (target.starts_with("/cache/")) {
      const auto path = ResolveCachePath(options_.cache_root, target);
      if (!path) return SendText(http::status::forbidden, "text/plain", "forbidden\n");
      return SendFile(*path);
    }
    if (target == "/ws") {
      return SendText(http::status::upgrade_required, "text/plain",
                      "websocket upgrade required\n");
    }
    if (!options_.static_root) {
      if (target == "/" || target == "/index.html") {
        return SendText(http::status::ok, "text/html; charset=utf-8",
                        std::string(kPlaceholderPage));
      }
      return SendText(http::status::not_found, "text/plain", "not found\n");
    }
    const auto path = ResolveStaticPath(*options_.static_root, target);
    if (!path) return SendText(http::status::forbidden, "text/plain", "forbidden\n");
    SendFile(*path);
  }

  void SendFile(const std::filesystem::path& path) {
    beast::error_code ec;
    http::file_body::value_type body;
    body.open(path.string().c_str(), beast::file_mode::scan, ec);
    if (ec) return SendText(http::status::not_found, "text/plain", "not found\n");
    const auto size = body.size();
    auto res = std::make_shared<http::response<http::file_body>>(
        std::piecewise_construct, std::make_tuple(std::move(body)),
        std::make_tuple(http::status::ok, req_.version()));
    res->set(http::field::content_type, Sv(MimeType(path)));
    res->set(http::field::cache_control, "no-cache");
    res->content_length(size);
    res->keep_alive(req_.keep_alive());
    if (req_.method() == http::verb::head) {
      auto head = std::make_shared<http::response<http::empty_body>>(
          http::status::ok, req_.version());
      head->set(http::field::content_type, Sv(MimeType(path)));
      head->content_length(size);
      head->keep_alive(req_.keep_alive());
      return Write(std::move(head));
    }
    Write(std::move(res));
  }

  void SendText(http::status status, std::string_view type, std::string body) {
    auto res = std::make_shared<http::response<http::string_body>>(status,
                                                                   req_.version());
    res->set(http::field::content_type, Sv(type));
    res->keep_alive(req_.keep_alive());
    if (req_.method() != http::verb::head) res->body() = std::move(body);
    res->prepare_payload();
    Write(std::move(res));
  }

  template <class Response>
  void Write(std::shared_ptr<Response> res) {
    http::async_write(stream_, *res,
                      [self = shared_from_this(), res](beast::error_code ec,
                                                       std::size_t) {
                        if (ec) return;
                        if (res->need_eof()) {
                          self->stream_.socket().shutdown(
                              tcp::socket::shutdown_send, ec);
                          return;
                        }
                        self->DoRead();
                      });
  }

  beast::tcp_stream stream_;
  SessionService& service_;
  const ServerOptions& options_;
  std::atomic<ConnectionId>& next_id_;
  beast::flat_buffer buffer_;
  Request req_;
};

}  // namespace

struct HttpServer::Impl {
  Impl(SessionService& s, ServerOptions o)
      : service(s), options(std::move(o)), acceptor(ioc), tick(ioc) {}

  void Accept() {
    acceptor.async_accept(ioc, [this](beast::error_code ec,
                                                        tcp::socket socket) {
      if (ec) {
        if (ec == net::error::operation_aborted) return;
      } else {
        std::make_shared<HttpSession>(std::move(socket), service, options, next_id)
            ->Start();
      }
      Accept();
    });
  }

  void ScheduleTick() {
    tick.expires_after(std::chrono::seconds(1));
    tick.async_wait([this](beast::error_code ec) {
      if (ec) return;
      service.Tick();
      ScheduleTick();
    });
  }

  SessionService& service;
  ServerOptions options;
  net::io_context ioc{1};
  tcp::acceptor acceptor;
  net::steady_timer tick;
  std::atomic<ConnectionId> next_id{1};
};

std::pair<std::string, unsigned short> ParseBindAddress(const std::string& bind) {
  const std::size_t colon = bind.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == bind.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "bind address must be host:port, got '" + bind + "'");
  }
  std::string host = bind.substr(0, colon);
  if (host.size() > 2 && host.front() == '[' && host.back() == ']') {
    host = host.substr(1, host.size() - 2);
  }
  unsigned port = 0;
  const char* first = bind.data() + colon + 1;
  const char* last = bind.data() + bind.size();
  const auto [p, ec] = std::from_chars(first, last, port);
  if (ec != std::errc() || p != last || port > 65535) {
    throw Error(ErrorCode::kInvalidArgument, "bad port in '" + bind + "'");
  }
  return {host, static_cast<unsigned short>(port)};
}

std::optional<std::filesystem::path> ResolveCachePath(
    const std::filesystem::path& root, std::string_view target) {
  constexpr std::string_view kPrefix = "/cache/";
  if (!target.starts_with(kPrefix)) return std::nullopt;
  auto segments = SafeSegments(target.substr(kPrefix.size()));
  if (!segments || segments->size() != 2) return std::nullopt;
  const std::string& file = (*segments)[1];
  const bool version = file.starts_with("v") && file.ends_with(".wav");
  if (!version && file != "index.json") return std::nullopt;
  return Contained(root, std::filesystem::path((*segments)[0]) / file);
}

HttpServer::HttpServer(SessionService& service, ServerOptions options)
    : impl_(std::make_unique<Impl>(service, std::move(options))) {
  const auto [host, port] = ParseBindAddress(impl_->options.bind);
  beast::error_code ec;
  const auto address = net::ip::make_address(host, ec);
  if (ec) {
    throw Error(ErrorCode::kInvalidArgument, "bad bind host '" + host + "'");
  }
  const tcp::endpoint endpoint(address, port);
  auto& acceptor = impl_->acceptor;
  acceptor.open(endpoint.protocol(), ec);
  if (!ec) acceptor.set_option(net::socket_base::reuse_address(true), ec);
  if (!ec) acceptor.bind(endpoint, ec);
  if (ec == net::error::address_in_use) {
    throw Error(ErrorCode::kAddressInUse,
                impl_->options.bind + " is already in use");
  }
  if (!ec) acceptor.listen(net::socket_base::max_listen_connections, ec);
  if (ec) {
    throw Error(ErrorCode::kIo,
                "cannot listen on " + impl_->options.bind + ": " + ec.message());
  }
}

HttpServer::~HttpServer() = default;

unsigned short HttpServer::port() const {
  return impl_->acceptor.local_endpoint().port();
}

std::string HttpServer::address() const {
  const tcp::endpoint ep = impl_->acceptor.local_endpoint();
  return fmt::format("{}:{}", ep.address().to_string(), ep.port());
}

void HttpServer::Run(bool handle_signals) {
  std::optional<net::signal_set> signals;
  if (handle_signals) {
    signals.emplace(impl_->ioc, SIGINT, SIGTERM);
    signals->async_wait([this](beast::error_code, int) { Stop(); });
  }
  impl_->Accept();
  impl_->ScheduleTick();
  impl_->ioc.run();
}

void HttpServer::Stop() {
  net::post(impl_->ioc, [impl = impl_.get()] {
    beast::error_code ec;
    impl->acceptor.close(ec);
    impl->tick.cancel();
    impl->ioc.stop();
  });
}

}  // namespace adjustsat::harness
