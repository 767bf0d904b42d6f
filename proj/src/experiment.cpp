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


#include "poncelet/experiment.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "poncelet/errors.hpp"

namespace poncelet {

using nlohmann::json;

namespace {

constexpr std::array<Rgb, kChannelCount> kPalette = {
    Rgb{0xd6, 0x27, 0x28}, Rgb{0x1f, 0x77, 0xb4}, Rgb{0x2c, 0xa0, 0x2c}, Rgb{0x94, 0x67, 0xbd}};

constexpr int kMaxSamples = 100000;

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

bool reads_aux(FamilyKind k) {
  return k == FamilyKind::Circumcircle || k == FamilyKind::Poristic;
}

[[noreturn]] void invalid(const std::string& field, const std::string& msg) {
  throw ValidationError(field, field + ": " + msg);
}

// --- JSON helpers ---

void check_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) invalid(path.empty() ? "config" : path, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || it.key() == k;
    if (!ok) {
      const std::string field = path.empty() ? it.key() : path + "." + it.key();
      invalid(field, "unknown field");
    }
  }
}

std::string join(const std::string& path, const char* key) {
  return path.empty() ? std::string(key) : path + "." + key;
}

const json& require(const json& j, const std::string& path, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) invalid(join(path, key), "required field missing");
  return *it;
}

double get_number(const json& v, const std::string& field) {
  if (!v.is_number()) invalid(field, "expected a number");
  return v.get<double>();
}

int get_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) invalid(field, "expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < -1000000000 || x > 1000000000) invalid(field, "integer out of range");
  return static_cast<int>(x);
}

std::string get_string(const json& v, const std::string& field) {
  if (!v.is_string()) invalid(field, "expected a string");
  return v.get<std::string>();
}

bool get_bool(const json& v, const std::string& field) {
  if (!v.is_boolean()) invalid(field, "expected a boolean");
  return v.get<bool>();
}

Rgb get_color(const json& v, const std::string& field) {
  const auto c = parse_hex(get_string(v, field));
  if (!c) invalid(field, "expected a #rrggbb color");
  return *c;
}

json channel_to_json(const Channel& ch) {
  return json{{"locus", locus_type_name(ch.locus_type)},
              {"triangle", derived_name(ch.triangle_type)},
              {"center", ch.center},
              {"partner", ch.partner},
              {"cevian", {{"kind", cevian_name(ch.cevian)}, {"center", ch.cevian_center}}},
              {"color", to_hex(ch.color)}};
}

Channel channel_from_json(const json& j, const std::string& path, const Channel& defaults) {
  check_keys(j, path, {"locus", "triangle", "center", "partner", "cevian", "color"});
  Channel ch = defaults;
  if (auto it = j.find("locus"); it != j.end()) {
    const auto t = parse_locus_type(get_string(*it, join(path, "locus")));
    if (!t) invalid(join(path, "locus"), "unknown locus type");
    ch.locus_type = *t;
  }
  if (auto it = j.find("triangle"); it != j.end()) {
    const auto t = parse_derived(get_string(*it, join(path, "triangle")));
    if (!t) invalid(join(path, "triangle"), "unknown triangle type");
    ch.triangle_type = *t;
  }
  if (auto it = j.find("center"); it != j.end()) ch.center = get_int(*it, join(path, "center"));
  if (auto it = j.find("partner"); it != j.end()) ch.partner = get_int(*it, join(path, "partner"));
  if (auto it = j.find("cevian"); it != j.end()) {
    const std::string cp = join(path, "cevian");
    check_keys(*it, cp, {"kind", "center"});
    if (auto k = it->find("kind"); k != it->end()) {
      const auto c = parse_cevian(get_string(*k, join(cp, "kind")));
      if (!c) invalid(join(cp, "kind"), "unknown cevian kind");
      ch.cevian = *c;
    }
    if (auto k = it->find("center"); k != it->end()) {
      ch.cevian_center = get_int(*k, join(cp, "center"));
    }
  }
  if (auto it = j.find("color"); it != j.end()) ch.color = get_color(*it, join(path, "color"));
  return ch;
}

json config_to_json(const ExperimentConfig& cfg) {
  json fam{{"kind", family_name(cfg.family.kind)}, {"ab", cfg.family.ab}};
  if (cfg.family.aux) fam["aux"] = *cfg.family.aux;
  if (cfg.family.pin) fam["pin"] = pin_name(*cfg.family.pin);
  if (cfg.family.seed) fam["seed"] = *cfg.family.seed;
  json channels = json::array();
  for (const Channel& ch : cfg.channels) channels.push_back(channel_to_json(ch));
  return json{{"version", kConfigVersion},
              {"family", fam},
              {"swap_axes", cfg.swap_axes},
              {"channels", channels},
              {"samples", cfg.samples},
              {"rmax", cfg.rmax},
              {"rotation", cfg.rotation},
              {"background", to_hex(cfg.background)}};
}

ExperimentConfig config_from_json(const json& j, Strictness mode) {
  check_keys(j, "", {"version", "family", "swap_axes", "channels", "samples", "rmax", "rotation",
                     "background"});
  const int version = get_int(require(j, "", "version"), "version");
  if (version != kConfigVersion) {
    invalid("version", fmt::format("unsupported version {} (expected {})", version, kConfigVersion));
  }
  ExperimentConfig cfg;
  const json& fam = require(j, "", "family");
  check_keys(fam, "family", {"kind", "ab", "aux", "pin", "seed"});
  const auto kind = parse_family(get_string(require(fam, "family", "kind"), "family.kind"));
  if (!kind) invalid("family.kind", "unknown family");
  cfg.family.kind = *kind;
  cfg.family.ab = get_number(require(fam, "family", "ab"), "family.ab");
  if (auto it = fam.find("aux"); it != fam.end()) cfg.family.aux = get_number(*it, "family.aux");
  if (auto it = fam.find("pin"); it != fam.end()) {
    const auto p = parse_pin(get_string(*it, "family.pin"));
    if (!p) invalid("family.pin", "unknown mount pin");
    cfg.family.pin = *p;
  }
  if (auto it = fam.find("seed"); it != fam.end()) {
    if (!it->is_array() || it->size() != 3) invalid("family.seed", "expected three side lengths");
    std::array<double, 3> s{};
    for (int i = 0; i < 3; ++i) s[i] = get_number((*it)[i], fmt::format("family.seed[{}]", i));
    cfg.family.seed = s;
  }
  if (auto it = j.find("swap_axes"); it != j.end()) cfg.swap_axes = get_bool(*it, "swap_axes");
  if (auto it = j.find("channels"); it != j.end()) {
    if (!it->is_array()) invalid("channels", "expected an array");
    if (it->size() != kChannelCount) {
      invalid("channels", fmt::format("exactly {} channels required", kChannelCount));
    }
    const auto defaults = ExperimentConfig::default_channels();
    for (int i = 0; i < kChannelCount; ++i) {
      cfg.channels[i] = channel_from_json((*it)[i], fmt::format("channels[{}]", i), defaults[i]);
    }
  }
  if (auto it = j.find("samples"); it != j.end()) cfg.samples = get_int(*it, "samples");
  if (auto it = j.find("rmax"); it != j.end()) cfg.rmax = get_number(*it, "rmax");
  if (auto it = j.find("rotation"); it != j.end()) cfg.rotation = get_int(*it, "rotation");
  if (auto it = j.find("background"); it != j.end()) cfg.background = get_color(*it, "background");
  validate(cfg, mode);
  return cfg;
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(fmt::format("malformed JSON at line {}, column {}", line, col), line, col);
  }
}

// --- URL helpers ---

std::string percent_decode(std::string_view s, int offset) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '%') {
      int v = 0;
      if (i + 2 >= s.size()) {
        throw ParseError("truncated percent escape", 1, offset + static_cast<int>(i) + 1);
      }
      const auto r = std::from_chars(s.data() + i + 1, s.data() + i + 3, v, 16);
      if (r.ptr != s.data() + i + 3) {
        throw ParseError("bad percent escape", 1, offset + static_cast<int>(i) + 1);
      }
      out.push_back(static_cast<char>(v));
      i += 2;
    } else if (s[i] == '+') {
      out.push_back(' ');
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

struct UrlValue {
  std::string text;
  int column;
};

double url_double(const std::string& key, const UrlValue& v) {
  double x = 0;
  const char* b = v.text.data();
  const char* e = b + v.text.size();
  const auto r = std::from_chars(b, e, x);
  if (v.text.empty() || r.ec != std::errc() || r.ptr != e) {
    throw ParseError(fmt::format("{}: expected a number", key), 1, v.column);
  }
  return x;
}

int url_int(const std::string& key, const UrlValue& v) {
  int x = 0;
  const char* b = v.text.data();
  const char* e = b + v.text.size();
  const auto r = std::from_chars(b, e, x);
  if (v.text.empty() || r.ec != std::errc() || r.ptr != e) {
    throw ParseError(fmt::format("{}: expected an integer", key), 1, v.column);
  }
  return x;
}

Rgb url_color(const std::string& key, const UrlValue& v) {
  const auto c = parse_hex("#" + v.text);
  if (!c) throw ParseError(fmt::format("{}: expected rrggbb", key), 1, v.column);
  return *c;
}

}  // namespace

std::array<Channel, kChannelCount> ExperimentConfig::default_channels() {
  std::array<Channel, kChannelCount> ch{};
  for (int i = 0; i < kChannelCount; ++i) ch[i].color = kPalette[i];
  ch[0].locus_type = LocusType::Xn;
  ch[0].center = 1;
  return ch;
}

void validate(ExperimentConfig& cfg, Strictness mode) {
  FamilyParams& f = cfg.family;
  if (!std::isfinite(f.ab) || !(f.ab > 0.0)) invalid("family.ab", "a/b must be positive");
  if (f.ab < 1.0) {
    if (mode == Strictness::Strict) invalid("family.ab", "a/b must be >= 1");
    f.ab = 1.0 / f.ab;
    cfg.swap_axes = !cfg.swap_axes;
  }
  if (f.ab > 100.0) invalid("family.ab", "a/b must be <= 100");
  if (f.aux) {
    if (!reads_aux(f.kind)) invalid("family.aux", "not used by this family");
    const double x = *f.aux;
    if (!std::isfinite(x) || !(x > 0.0)) invalid("family.aux", "must be positive");
    if (f.kind == FamilyKind::Poristic && x > 0.5) invalid("family.aux", "inradius must be <= R/2");
    if (f.kind == FamilyKind::Circumcircle && x > 100.0) invalid("family.aux", "must be <= 100");
  }
  if (f.pin && f.kind != FamilyKind::Mounted) invalid("family.pin", "only mounted families");
  if (f.seed) {
    if (f.kind != FamilyKind::BrocardPorism) invalid("family.seed", "only the brocard family");
    const auto& s = *f.seed;
    for (double x : s) {
      if (!std::isfinite(x) || !(x > 0.0)) invalid("family.seed", "sides must be positive");
    }
    if (seed_triangle(s).is_degenerate(1e-9)) invalid("family.seed", "sides violate the triangle inequality");
  }
  if (cfg.samples < 8) invalid("samples", "samples must be >= 8");
  if (cfg.samples > kMaxSamples) invalid("samples", fmt::format("samples must be <= {}", kMaxSamples));
  if (!std::isfinite(cfg.rmax) || !(cfg.rmax > 0.0)) invalid("rmax", "rmax must be > 0");
  if (cfg.rotation != 0 && cfg.rotation != 90 && cfg.rotation != 180 && cfg.rotation != 270) {
    invalid("rotation", "rotation must be 0, 90, 180 or 270");
  }
  for (int i = 0; i < kChannelCount; ++i) {
    const Channel& ch = cfg.channels[i];
    const std::string p = fmt::format("channels[{}]", i);
    try {
      validate_channel(ch);
    } catch (const ValidationError& e) {
      invalid(p + "." + e.field(), e.what());
    }
    if (ch.locus_type != LocusType::Off && is_envelope(ch.locus_type) && cfg.samples < 32) {
      invalid("samples", "envelopes need at least 32 samples");
    }
  }
}

std::string to_json(const ExperimentConfig& cfg) { return config_to_json(cfg).dump(2); }

ExperimentConfig from_json(std::string_view text, Strictness mode) {
  return config_from_json(parse_text(text), mode);
}

std::string to_url(const ExperimentConfig& cfg) {
  const ExperimentConfig d;
  std::vector<std::string> parts;
  auto add = [&](std::string_view k, const std::string& v) { parts.push_back(fmt::format("{}={}", k, v)); };
  if (cfg.family.kind != d.family.kind) add("fam", std::string(family_name(cfg.family.kind)));
  if (cfg.family.ab != d.family.ab) add("ab", shortest(cfg.family.ab));
  if (cfg.family.aux) add("aux", shortest(*cfg.family.aux));
  if (cfg.family.pin) add("pin", std::string(pin_name(*cfg.family.pin)));
  if (cfg.family.seed) {
    const auto& s = *cfg.family.seed;
    add("seed", shortest(s[0]) + "," + shortest(s[1]) + "," + shortest(s[2]));
  }
  if (cfg.samples != d.samples) add("n", std::to_string(cfg.samples));
  if (cfg.rmax != d.rmax) add("rmax", shortest(cfg.rmax));
  if (cfg.rotation != d.rotation) add("rot", std::to_string(cfg.rotation));
  if (cfg.background != d.background) add("bg", to_hex(cfg.background).substr(1));
  if (cfg.swap_axes != d.swap_axes) add("swap", cfg.swap_axes ? "1" : "0");
  for (int i = 0; i < kChannelCount; ++i) {
    const Channel& c = cfg.channels[i];
    const Channel& dc = d.channels[i];
    const int n = i + 1;
    if (c.locus_type != dc.locus_type) add(fmt::format("l{}", n), std::string(locus_type_name(c.locus_type)));
    if (c.triangle_type != dc.triangle_type) add(fmt::format("t{}", n), std::string(derived_name(c.triangle_type)));
    if (c.center != dc.center) add(fmt::format("x{}", n), std::to_string(c.center));
    if (c.partner != dc.partner) add(fmt::format("m{}", n), std::to_string(c.partner));
    if (c.cevian != dc.cevian) add(fmt::format("cv{}", n), std::string(cevian_name(c.cevian)));
    if (c.cevian_center != dc.cevian_center) add(fmt::format("cm{}", n), std::to_string(c.cevian_center));
    if (c.color != dc.color) add(fmt::format("c{}", n), to_hex(c.color).substr(1));
  }
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += '&';
    out += p;
  }
  return out;
}

ExperimentConfig from_url(std::string_view query, Strictness mode) {
  int offset = 0;
  if (!query.empty() && query.front() == '?') {
    query.remove_prefix(1);
    offset = 1;
  }
  std::map<std::string, UrlValue> kv;
  std::size_t pos = 0;
  while (pos < query.size()) {
    std::size_t amp = query.find('&', pos);
    if (amp == std::string_view::npos) amp = query.size();
    const std::string_view part = query.substr(pos, amp - pos);
    const int col = offset + static_cast<int>(pos) + 1;
    if (!part.empty()) {
      const std::size_t eq = part.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        throw ParseError("expected key=value", 1, col);
      }
      const std::string key = percent_decode(part.substr(0, eq), col - 1);
      const int vcol = col + static_cast<int>(eq) + 1;
      if (kv.count(key)) throw ParseError(fmt::format("duplicate key '{}'", key), 1, col);
      kv[key] = UrlValue{percent_decode(part.substr(eq + 1), vcol - 1), vcol};
    }
    pos = amp + 1;
  }

  ExperimentConfig cfg;
  for (const auto& [key, v] : kv) {
    if (key == "fam") {
      const auto k = parse_family(v.text);
      if (!k) invalid("family.kind", "unknown family '" + v.text + "'");
      cfg.family.kind = *k;
    } else if (key == "ab") {
      cfg.family.ab = url_double(key, v);
    } else if (key == "aux") {
      cfg.family.aux = url_double(key, v);
    } else if (key == "pin") {
      const auto p = parse_pin(v.text);
      if (!p) invalid("family.pin", "unknown mount pin '" + v.text + "'");
      cfg.family.pin = *p;
    } else if (key == "seed") {
      std::array<double, 3> s{};
      std::size_t start = 0;
      for (int i = 0; i < 3; ++i) {
        const std::size_t comma = i < 2 ? v.text.find(',', start) : v.text.size();
        if (comma == std::string::npos) throw ParseError("seed: expected three numbers", 1, v.column);
        s[i] = url_double(key, UrlValue{v.text.substr(start, comma - start), v.column + static_cast<int>(start)});
        start = comma + 1;
      }
      cfg.family.seed = s;
    } else if (key == "n") {
      cfg.samples = url_int(key, v);
    } else if (key == "rmax") {
      cfg.rmax = url_double(key, v);
    } else if (key == "rot") {
      cfg.rotation = url_int(key, v);
    } else if (key == "bg") {
      cfg.background = url_color(key, v);
    } else if (key == "swap") {
      if (v.text != "0" && v.text != "1") throw ParseError("swap: expected 0 or 1", 1, v.column);
      cfg.swap_axes = v.text == "1";
    } else {
      // Per-channel keys: a prefix followed by the channel number.
      std::size_t digit = key.find_first_of("0123456789");
      int n = 0;
      if (digit != std::string::npos && digit + 1 == key.size()) n = key[digit] - '0';
      if (n < 1 || n > kChannelCount) invalid("url." + key, "unknown key");
      Channel& ch = cfg.channels[n - 1];
      const std::string prefix = key.substr(0, digit);
      const std::string field = fmt::format("channels[{}]", n - 1);
      if (prefix == "l") {
        const auto t = parse_locus_type(v.text);
        if (!t) invalid(field + ".locus", "unknown locus type '" + v.text + "'");
        ch.locus_type = *t;
      } else if (prefix == "t") {
        const auto t = parse_derived(v.text);
        if (!t) invalid(field + ".triangle", "unknown triangle type '" + v.text + "'");
        ch.triangle_type = *t;
      } else if (prefix == "x") {
        ch.center = url_int(key, v);
      } else if (prefix == "m") {
        ch.partner = url_int(key, v);
      } else if (prefix == "cv") {
        const auto c = parse_cevian(v.text);
        if (!c) invalid(field + ".cevian.kind", "unknown cevian kind '" + v.text + "'");
        ch.cevian = *c;
      } else if (prefix == "cm") {
        ch.cevian_center = url_int(key, v);
      } else if (prefix == "c") {
        ch.color = url_color(key, v);
      } else {
        invalid("url." + key, "unknown key");
      }
    }
  }
  validate(cfg, mode);
  return cfg;
}

Triangle seed_triangle(const std::array<double, 3>& sides) {
  const auto [a, b, c] = sides;
  const double x = (c * c - b * b + a * a) / (2.0 * a);
  const double y = std::sqrt(std::max(0.0, c * c - x * x));
  Triangle t{{Point2{x, y}, Point2{0.0, 0.0}, Point2{a, 0.0}}};
  if (t.is_degenerate()) return t;
  const double R = t.circumradius();
  for (Point2& p : t.v) p = p / R;
  return t;
}

FamilySpec make_family_spec(const FamilyParams& p, bool swap_axes) {
  const Ellipse outer = swap_axes ? Ellipse({0, 0}, 1.0, p.ab) : Ellipse({0, 0}, p.ab, 1.0);
  switch (p.kind) {
    case FamilyKind::Circumcircle:
      return concentric_spec(p.kind, Ellipse::circle({0, 0}, 1.0), p.aux.value_or(p.ab));
    case FamilyKind::ExcentralOfConfocal:
      return excentral_of_confocal_spec(outer);
    case FamilyKind::Poristic:
      return poristic_spec(1.0, p.aux.value_or(0.4));
    case FamilyKind::BrocardPorism:
      return brocard_spec(p.seed ? seed_triangle(*p.seed) : default_brocard_seed());
    case FamilyKind::Mounted:
      return mounted_spec(p.pin.value_or(MountPin::Major), outer);
    default:
      return concentric_spec(p.kind, outer);
  }
}

// Keeps the sign of zero, which a bare "-0" would lose to the integer parser.
static std::string exact_number(double x) {
  if (x == 0.0 && std::signbit(x)) return "-0.0";
  return fmt::format("{:.17g}", x);
}

std::string export_loci_json(const std::vector<Locus>& loci) {
  if (loci.empty()) throw GeometryError(Errc::empty_input, "no loci to export");
  std::string out = fmt::format("{{\n  \"version\": {},\n  \"loci\": [", kConfigVersion);
  for (std::size_t i = 0; i < loci.size(); ++i) {
    const Locus& l = loci[i];
    out += i ? ",\n    {" : "\n    {";
    out += fmt::format("\"channel\": {}, ", channel_to_json(l.channel).dump());
    out += fmt::format("\"label\": {}, ", json(l.channel.label()).dump());
    out += fmt::format("\"class\": \"{}\", \"samples\": {},\n      \"points\": [", curve_code(l.cls), l.samples);
    for (std::size_t k = 0; k < l.points.size(); ++k) {
      out += fmt::format("{}[{}, {}]", k ? ", " : "", exact_number(l.points[k].x),
                         exact_number(l.points[k].y));
    }
    out += "],\n      \"skipped\": [";
    for (std::size_t k = 0; k < l.skipped.size(); ++k) {
      out += fmt::format("{}{}", k ? ", " : "", l.skipped[k]);
    }
    out += "]}";
  }
  out += "\n  ]\n}\n";
  return out;
}

std::vector<Locus> parse_loci_json(std::string_view text) {
  const json j = parse_text(text);
  check_keys(j, "", {"version", "loci"});
  if (get_int(require(j, "", "version"), "version") != kConfigVersion) {
    invalid("version", "unsupported version");
  }
  const json& arr = require(j, "", "loci");
  if (!arr.is_array()) invalid("loci", "expected an array");
  std::vector<Locus> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = fmt::format("loci[{}]", i);
    const json& e = arr[i];
    check_keys(e, p, {"channel", "label", "class", "samples", "points", "skipped"});
    Locus l;
    l.channel = channel_from_json(require(e, p, "channel"), p + ".channel", Channel{});
    const std::string cls = get_string(require(e, p, "class"), p + ".class");
    const auto c = cls.size() == 1 ? curve_from_code(cls[0]) : std::nullopt;
    if (!c) invalid(p + ".class", "unknown curve code");
    l.cls = *c;
    l.samples = get_int(require(e, p, "samples"), p + ".samples");
    for (const json& pt : require(e, p, "points")) {
      if (!pt.is_array() || pt.size() != 2) invalid(p + ".points", "expected [x, y]");
      l.points.push_back({get_number(pt[0], p + ".points"), get_number(pt[1], p + ".points")});
    }
    for (const json& s : require(e, p, "skipped")) l.skipped.push_back(get_int(s, p + ".skipped"));
    out.push_back(std::move(l));
  }
  return out;
}

Point2 rotate_quarter(Point2 p, int degrees) {
  switch (((degrees % 360) + 360) % 360) {
    case 90: return {-p.y, p.x};
    case 180: return {-p.x, -p.y};
    case 270: return {p.y, -p.x};
    default: return p;
  }
}

std::string export_svg(const std::vector<Locus>& loci, const ExperimentConfig& cfg) {
  if (loci.empty()) throw GeometryError(Errc::empty_input, "no loci to export");
  const double h = cfg.rmax;  // b = 1 in config units
  const double stroke = h / 400.0;
  auto svg_point = [&](Point2 p) {
    const Point2 q = rotate_quarter(p, cfg.rotation);
    return Point2{q.x, -q.y};
  };
  std::string out = fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
      "viewBox=\"{} {} {} {}\" style=\"background:{}\">\n",
      shortest(-h), shortest(-h), shortest(2 * h), shortest(2 * h), to_hex(cfg.background));
  for (const Locus& l : loci) {
    const std::string color = to_hex(l.channel.color);
    if (l.cls == CurveClass::Point) {
      Point2 c{0, 0};
      for (const Point2& p : l.points) c += p;
      c = svg_point(c / static_cast<double>(l.points.size()));
      out += fmt::format("  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>\n", shortest(c.x),
                         shortest(c.y), shortest(4 * stroke), color);
      continue;
    }
    out += fmt::format("  <polyline fill=\"none\" stroke=\"{}\" stroke-width=\"{}\" points=\"", color,
                       shortest(stroke));
    for (std::size_t k = 0; k < l.points.size(); ++k) {
      const Point2 q = svg_point(l.points[k]);
      out += fmt::format("{}{},{}", k ? " " : "", shortest(q.x), shortest(q.y));
    }
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::vector<Playlist> parse_playlists(std::string_view text) {
  const json j = parse_text(text);
  check_keys(j, "", {"version", "playlists"});
  if (get_int(require(j, "", "version"), "version") != kConfigVersion) {
    invalid("version", "unsupported version");
  }
  const json& arr = require(j, "", "playlists");
  if (!arr.is_array() || arr.empty()) invalid("playlists", "expected a non-empty array");
  std::vector<Playlist> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = fmt::format("playlists[{}]", i);
    check_keys(arr[i], p, {"name", "items"});
    Playlist pl;
    pl.name = get_string(require(arr[i], p, "name"), p + ".name");
    const json& items = require(arr[i], p, "items");
    if (!items.is_array() || items.empty()) invalid(p + ".items", "expected a non-empty array");
    for (std::size_t k = 0; k < items.size(); ++k) {
      const std::string ip = fmt::format("{}.items[{}]", p, k);
      check_keys(items[k], ip, {"caption", "config"});
      PlaylistItem item;
      item.caption = get_string(require(items[k], ip, "caption"), ip + ".caption");
      try {
        item.config = config_from_json(require(items[k], ip, "config"), Strictness::Strict);
      } catch (const ValidationError& e) {
        throw ValidationError(ip + ".config." + e.field(), ip + ".config." + e.what());
      }
      pl.items.push_back(std::move(item));
    }
    out.push_back(std::move(pl));
  }
  return out;
}

std::vector<Playlist> load_playlists(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read playlists file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_playlists(ss.str());
}

}  // namespace poncelet
