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


#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "poncelet/experiment.hpp"
#include "poncelet/server.hpp"

int main(int argc, char** argv) {
  CLI::App app{"HTTP service for the Poncelet engine"};
  poncelet::ServerOptions opts;
  std::string playlists = PONCELET_DEFAULT_PLAYLISTS;
  app.add_option("--host", opts.host, "Bind address");
  app.add_option("--port", opts.port, "Port");
  app.add_option("--playlists", playlists, "Playlist file");
  app.add_option("--static", opts.static_dir, "Directory served at /");
  CLI11_PARSE(app, argc, argv);

  try {
    std::ifstream in(playlists);
    if (!in) throw std::runtime_error("cannot read " + playlists);
    std::stringstream ss;
    ss << in.rdbuf();
    poncelet::parse_playlists(ss.str());
    opts.playlists = ss.str();
  } catch (const std::exception& e) {
    std::cerr << "poncelet-server: playlists: " << e.what() << "\n";
    return 1;
  }

  std::cerr << "listening on " << opts.host << ":" << opts.port << "\n";
  poncelet::HttpService service(opts);
  if (!service.listen()) {
    std::cerr << "poncelet-server: cannot bind " << opts.host << ":" << opts.port << "\n";
    return 1;
  }
  return 0;
}
