// Copyright 2026 The Poncelet Loci Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// HTTP facade. Handlers are pure functions of the request so they can be
// tested without a socket; `serve` binds them to cpp-httplib routes.

#ifndef PONCELET_SERVER_HPP_
#define PONCELET_SERVER_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace poncelet {

struct HttpResponse {
  int status = 200;
  std::string body;  // JSON
};

HttpResponse handle_families();
HttpResponse handle_locus(std::string_view body);
// `playlists` is the file text loaded at startup, empty if that failed.
HttpResponse handle_playlists(const std::optional<std::string>& playlists);

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::optional<std::string> playlists;
  std::string static_dir;  // UI bundle; not served when empty
};

// The routes bound to a socket.
class HttpService {
 public:
  explicit HttpService(ServerOptions opts);
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  // Blocks until stop(). Returns false when the socket cannot be bound.
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace poncelet

#endif  // PONCELET_SERVER_HPP_
