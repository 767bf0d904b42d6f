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


#include "poncelet/server.hpp"

#include <algorithm>

#include "httplib.h"
#include "json.hpp"
#include "poncelet/errors.hpp"
#include "poncelet/experiment.hpp"

namespace poncelet {

using nlohmann::json;

namespace {

json family_entry(FamilyKind k, std::initializer_list<const char*> params) {
  return {{"kind", family_name(k)}, {"params", params}, {"fixed", fixed_centers(k)}};
}

HttpResponse error_response(int status, const std::string& msg, const std::string& field = "") {
  json j{{"error", msg}};
  if (!field.empty()) j["field"] = field;
  return {status, j.dump()};
}

}  // namespace

HttpResponse handle_families() {
  json fams = json::array();
  fams.push_back(family_entry(FamilyKind::Confocal, {"ab"}));
  fams.push_back(family_entry(FamilyKind::Incircle, {"ab"}));
  fams.push_back(family_entry(FamilyKind::Circumcircle, {"aux"}));
  fams.push_back(family_entry(FamilyKind::Homothetic, {"ab"}));
  fams.push_back(family_entry(FamilyKind::Dual, {"ab"}));
  fams.push_back(family_entry(FamilyKind::ExcentralOfConfocal, {"ab"}));
  fams.push_back(family_entry(FamilyKind::Poristic, {"aux"}));
  fams.push_back(family_entry(FamilyKind::BrocardPorism, {"seed"}));
  json pins = json::array();
  for (MountPin p : kAllMountPins) pins.push_back(pin_name(p));
  json mounted = family_entry(FamilyKind::Mounted, {"ab", "pin"});
  mounted["pins"] = pins;
  return {200, json{{"families", fams}, {"mounted", mounted}}.dump()};
}

HttpResponse handle_locus(std::string_view body) {
  ExperimentConfig cfg;
  try {
    cfg = from_json(body);
  } catch (const ValidationError& e) {
    return error_response(400, e.what(), e.field());
  } catch (const ParseError& e) {
    return error_response(400, e.what());
  }

  try {
    const FamilySpec spec = make_family_spec(cfg);
    json loci = json::array();
    for (int i = 0; i < kChannelCount; ++i) {
      const Channel& ch = cfg.channels[i];
      if (ch.locus_type == LocusType::Off) continue;
      const Locus l = sample_locus(spec, ch, cfg.samples);
      json pts = json::array();
      for (const Point2& p : l.points) pts.push_back({p.x, p.y});
      loci.push_back({{"channel", i + 1},
                      {"label", ch.label()},
                      {"class", std::string(1, curve_code(l.cls))},
                      {"points", pts},
                      {"skipped", l.skipped}});
    }
    Channel inv = cfg.channels[0];
    if (inv.locus_type == LocusType::Off) inv.locus_type = LocusType::Xn;
    const InvariantReport rep = detect_invariants(spec, inv, std::max(cfg.samples, 64));
    json entries = json::array();
    for (const InvariantEntry& e : rep.entries) {
      entries.push_back({{"name", e.name}, {"mean", e.mean}, {"spread", e.spread},
                         {"invariant", e.invariant}});
    }
    json out{{"config", json::parse(to_json(cfg))},
             {"url", to_url(cfg)},
             {"loci", loci},
             {"invariants", {{"line", rep.line()}, {"tolerance", rep.tolerance}, {"entries", entries}}}};
    return {200, out.dump()};
  } catch (const GeometryError& e) {
    return error_response(422, std::string(errc_name(e.code())) + ": " + e.what());
  } catch (const ValidationError& e) {
    return error_response(400, e.what(), e.field());
  }
}

HttpResponse handle_playlists(const std::optional<std::string>& playlists) {
  if (!playlists) return error_response(500, "playlists unavailable");
  return {200, *playlists};
}

struct HttpService::Impl {
  ServerOptions opts;
  httplib::Server svr;
};

HttpService::HttpService(ServerOptions opts) : impl_(std::make_unique<Impl>()) {
  impl_->opts = std::move(opts);
  Impl* im = impl_.get();
  auto reply = [](httplib::Response& res, const HttpResponse& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  im->svr.Get("/api/families", [reply](const httplib::Request&, httplib::Response& res) {
    reply(res, handle_families());
  });
  im->svr.Post("/api/locus", [reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_locus(req.body));
  });
  im->svr.Get("/api/playlists", [reply, im](const httplib::Request&, httplib::Response& res) {
    reply(res, handle_playlists(im->opts.playlists));
  });
  if (!im->opts.static_dir.empty()) im->svr.set_mount_point("/", im->opts.static_dir);
}

HttpService::~HttpService() = default;

bool HttpService::listen() { return impl_->svr.listen(impl_->opts.host, impl_->opts.port); }

void HttpService::stop() { impl_->svr.stop(); }

}  // namespace poncelet
