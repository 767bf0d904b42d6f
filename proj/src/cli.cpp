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


#include "poncelet/cli.hpp"

#include <fmt/format.h>

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "poncelet/errors.hpp"
#include "poncelet/experiment.hpp"
#include "poncelet/verify.hpp"

namespace poncelet {

namespace {

struct SceneFlags {
  std::string config_path;
  std::string url;
  std::string family;
  double ab = 1.5;
  std::optional<double> aux;
  std::string pin;
  std::string triangle = "reference";
  int samples = 720;
  bool lenient = false;
};

void add_scene_flags(CLI::App* cmd, SceneFlags& f) {
  cmd->add_option("--config", f.config_path, "Load an experiment config (JSON)");
  cmd->add_option("--url", f.url, "Load an experiment config from a URL query");
  cmd->add_option("--family", f.family, "Family kind");
  cmd->add_option("--ab", f.ab, "Outer aspect ratio a/b");
  cmd->add_option("--aux", f.aux, "Circumcircle caustic aspect or poristic inradius");
  cmd->add_option("--pin", f.pin, "Mounted pin configuration");
  cmd->add_option("--triangle", f.triangle, "Derived triangle");
  cmd->add_option("--samples", f.samples, "Samples over t");
  cmd->add_flag("--lenient", f.lenient, "Accept a/b < 1 by swapping axes");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config", "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Config from --config/--url, or from the family flags with channel 1 set by
// `first`. Throws ValidationError.
ExperimentConfig scene_config(const SceneFlags& f, const CLI::App* cmd, const Channel& first) {
  const Strictness mode = f.lenient ? Strictness::Lenient : Strictness::Strict;
  if (!f.config_path.empty()) return from_json(read_file(f.config_path), mode);
  if (cmd->count("--url")) return from_url(f.url, mode);
  if (f.family.empty()) throw ValidationError("family", "--family is required");
  ExperimentConfig cfg;
  const auto kind = parse_family(f.family);
  if (!kind) throw ValidationError("family", "unknown family '" + f.family + "'");
  cfg.family.kind = *kind;
  cfg.family.ab = f.ab;
  cfg.family.aux = f.aux;
  if (!f.pin.empty()) {
    const auto p = parse_pin(f.pin);
    if (!p) throw ValidationError("pin", "unknown mount pin '" + f.pin + "'");
    cfg.family.pin = *p;
  }
  cfg.samples = f.samples;
  for (int i = 1; i < kChannelCount; ++i) cfg.channels[i].locus_type = LocusType::Off;
  const Rgb color = cfg.channels[0].color;
  cfg.channels[0] = first;
  cfg.channels[0].color = color;
  validate(cfg, mode);
  return cfg;
}

DerivedKind triangle_flag(const std::string& name) {
  const auto t = parse_derived(name);
  if (!t) throw ValidationError("triangle", "unknown triangle type '" + name + "'");
  return *t;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

nlohmann::json report_json(const InvariantReport& rep) {
  nlohmann::json entries = nlohmann::json::array();
  for (const InvariantEntry& e : rep.entries) {
    entries.push_back({{"name", e.name},
                       {"mean", e.mean},
                       {"spread", e.spread},
                       {"invariant", e.invariant},
                       {"count", e.count}});
  }
  return {{"tolerance", rep.tolerance},
          {"retained", rep.retained},
          {"skipped", rep.skipped},
          {"line", rep.line()},
          {"entries", entries}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poncelet triangle families: loci, classification, invariants"};
  app.name("poncelet");
  app.require_subcommand(1);

  SceneFlags locus_flags;
  std::string locus_type = "xn", cevian = "off", out_path, format = "json";
  int center_id = 1, partner = 2, cevian_center = 1;
  double env_delta = 0.0;
  CLI::App* locus = app.add_subcommand("locus", "Trace loci and print their curve classes");
  add_scene_flags(locus, locus_flags);
  locus->add_option("--center", center_id, "Triangle center index");
  locus->add_option("--partner", partner, "Second center for env");
  locus->add_option("--locus-type", locus_type, "xn, v1..v3, env, e12, e23, e31, e1x..e3x, omega1, omega2");
  locus->add_option("--cevian", cevian, "cevian, anticevian, circumcevian, pedal, antipedal");
  locus->add_option("--cevian-center", cevian_center, "Center the cevian construction is about");
  locus->add_option("--envelope-delta", env_delta, "Parameter step for envelope points");
  locus->add_option("--out", out_path, "Export file");
  locus->add_option("--format", format, "json or svg")->check(CLI::IsMember({"json", "svg"}));

  SceneFlags inv_flags;
  double tol = kDefaultInvariantTol;
  CLI::App* inv = app.add_subcommand("invariants", "Report conserved quantities over a family");
  add_scene_flags(inv, inv_flags);
  inv->add_option("--tol", tol, "Relative spread tolerance");

  std::vector<double> sweep;
  int verify_samples = 720;
  double verify_tol = kDefaultInvariantTol, perturb = 0.0;
  CLI::App* verify = app.add_subcommand("verify", "Run the conserved-quantity matrix");
  verify->add_option("--ab-sweep", sweep, "Aspect ratios to check")->delimiter(',');
  verify->add_option("--samples", verify_samples, "Samples over t");
  verify->add_option("--tol", verify_tol, "Relative spread tolerance");
  verify->add_option("--perturb-caustic", perturb)->group("");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*locus) {
      Channel first;
      const auto lt = parse_locus_type(locus_type);
      if (!lt || *lt == LocusType::Off) {
        throw ValidationError("locus-type", "unknown locus type '" + locus_type + "'");
      }
      first.locus_type = *lt;
      first.center = center_id;
      first.partner = partner;
      first.triangle_type = triangle_flag(locus_flags.triangle);
      const auto cv = parse_cevian(cevian);
      if (!cv) throw ValidationError("cevian", "unknown cevian kind '" + cevian + "'");
      first.cevian = *cv;
      first.cevian_center = cevian_center;
      const ExperimentConfig cfg = scene_config(locus_flags, locus, first);
      const FamilySpec spec = make_family_spec(cfg);
      SampleOptions so;
      if (env_delta > 0.0) so.envelope_delta = env_delta;
      std::vector<Locus> loci;
      for (const Channel& ch : cfg.channels) {
        if (ch.locus_type == LocusType::Off) continue;
        loci.push_back(sample_locus(spec, ch, cfg.samples, so));
        out << ch.label() << "(" << curve_code(loci.back().cls) << ")\n";
      }
      if (!out_path.empty()) {
        write_file(out_path, format == "svg" ? export_svg(loci, cfg) : export_loci_json(loci));
      }
      return kExitOk;
    }
    if (*inv) {
      Channel first;
      first.locus_type = LocusType::Xn;
      first.triangle_type = triangle_flag(inv_flags.triangle);
      const ExperimentConfig cfg = scene_config(inv_flags, inv, first);
      const FamilySpec spec = make_family_spec(cfg);
      const InvariantReport rep =
          detect_invariants(spec, cfg.channels[0], std::max(cfg.samples, 64), tol);
      out << (rep.invariant_names().empty() ? "none" : rep.line()) << "\n" << report_json(rep).dump() << "\n";
      return kExitOk;
    }
    if (*verify) {
      VerifyOptions o;
      if (!sweep.empty()) o.ab_sweep = sweep;
      o.samples = verify_samples;
      o.tol = verify_tol;
      o.caustic_perturbation = perturb;
      const VerifyResult r = run_verify(o);
      out << format_verify(r);
      return r.all_pass() ? kExitOk : kExitFailure;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    if (e.field() == "family") err << app.get_subcommands().front()->help();
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GeometryError& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return kExitCompute;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCompute;
  }
  return kExitUsage;
}

}  // namespace poncelet
