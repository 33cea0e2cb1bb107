// Copyright 2026 The mmbox Authors
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

#include "mmbox/cli/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "mmbox/error.hpp"

namespace mmbox::cli {

namespace {

class ConfigError : public Error {
 public:
  using Error::Error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Flat key=value lines; blank lines and lines starting with '#' are skipped.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(t.substr(0, eq));
    if (key.empty()) throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
    if (kv.count(key) != 0) throw ConfigError("duplicate config key '" + key + "'");
    kv[key] = trim(t.substr(eq + 1));
  }
  return kv;
}

std::string long_name(const CLI::Option* opt) {
  if (!opt->get_lnames().empty()) return opt->get_lnames().front();
  return opt->get_name(true, false);
}

bool is_help(const CLI::Option* opt) {
  const auto& l = opt->get_lnames();
  return std::find(l.begin(), l.end(), "help") != l.end();
}

// Options of the app and the chosen subcommand keyed by long name.
std::map<std::string, CLI::Option*> option_table(CLI::App& app, CLI::App* sub) {
  std::map<std::string, CLI::Option*> table;
  for (CLI::App* a : {&app, sub}) {
    for (CLI::Option* opt : a->get_options()) {
      if (!is_help(opt)) table[long_name(opt)] = opt;
    }
  }
  return table;
}

std::set<std::string> given_keys(const std::vector<std::string>& args) {
  std::set<std::string> keys;
  for (const auto& a : args) {
    if (a.rfind("--", 0) != 0) continue;
    keys.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2));
  }
  return keys;
}

std::string option_value(const CLI::Option* opt) {
  if (opt->get_expected_max() == 0) return opt->count() > 0 && opt->as<bool>() ? "true" : "false";
  if (opt->count() == 0) {
    const std::string d = opt->get_default_str();
    return d == "{}" || d == "[]" ? "" : d;
  }
  std::string joined;
  for (const auto& r : opt->results()) joined += (joined.empty() ? "" : ",") + r;
  return joined;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const IoError*>(&e) != nullptr) return kExitIo;
  if (dynamic_cast<const SizeError*>(&e) != nullptr ||
      dynamic_cast<const PreconditionError*>(&e) != nullptr ||
      dynamic_cast<const UnsupportedError*>(&e) != nullptr) {
    return kExitSize;
  }
  if (dynamic_cast<const ConfigError*>(&e) != nullptr ||
      dynamic_cast<const DomainError*>(&e) != nullptr ||
      dynamic_cast<const DimensionError*>(&e) != nullptr) {
    return kExitConfig;
  }
  return kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Box-distance bounds, certificates and concentration experiments", "mmbox"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Master seed");
  app.add_option("--tol", g.tol, "Numerical tolerance");
  app.add_option("--out", g.out, "Output file (default: stdout)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--config", g.config, "Flat key=value config file; flags override it");

  BoundsArgs bounds;
  auto* sb = app.add_subcommand("bounds", "Certified lower-bound tables");
  sb->add_option("kind,--kind", bounds.kind, "sphere | cp | so")->required();
  sb->add_option("--m", bounds.m, "Smaller dimensions")->delimiter(',');
  sb->add_option("--n", bounds.n, "Larger dimensions")->delimiter(',');
  sb->add_option("--C1", bounds.C1, "Growth constant for n_k");
  sb->add_option("--C2", bounds.C2, "Growth constant for m_k");
  sb->add_option("--C3", bounds.C3, "Gap constant for n_k - m_k");
  sb->add_option("--k", bounds.k, "Finite-k indices")->delimiter(',');

  BoxArgs box;
  auto* sx = app.add_subcommand("box", "Box-distance bounds between two spaces");
  sx->add_option("--x", box.x, "First space file");
  sx->add_option("--y", box.y, "Second space file");
  sx->add_option("--x-sample", box.x_sample, "First space sampler spec kind:n[:N][:variant]");
  sx->add_option("--y-sample", box.y_sample, "Second space sampler spec");
  sx->add_option("--lambda", box.lambda, "Box parameter lambda");
  sx->add_option("--mode", box.mode, "exact | local | seeded-restart");
  sx->add_option("--restarts", box.restarts, "Random restarts");
  sx->add_option("--refinement", box.refinement, "Atom split factor for exact search");
  sx->add_option("--max-evaluations", box.max_evaluations, "Plan evaluations per descent");
  sx->add_flag("--assert-uniform", box.assert_uniform, "Treat both inputs as uniformly distributed");
  sx->add_option("--codim1", box.codim1, "sphere | cp: projection coupling curve instead");
  sx->add_option("--n", box.n, "Dimensions for --codim1")->delimiter(',');
  sx->add_option("--N", box.N, "Sample size for --codim1");
  sx->add_option("--eps", box.eps, "Band width for --codim1");
  sx->add_option("--seeds", box.seeds, "Seeds per dimension for --codim1");

  ConcentrationArgs conc;
  auto* sc = app.add_subcommand("concentration", "Observable-diameter curves");
  sc->add_option("--kind", conc.kind, "sphere | cp | so | hamming");
  sc->add_option("--n", conc.n, "Dimension grid")->delimiter(',');
  sc->add_option("--N", conc.N, "Sample size");
  sc->add_option("--kappa", conc.kappa, "Partial-diameter mass defect");
  sc->add_option("--seeds", conc.seeds, "Seeds (default: --seed)")->delimiter(',');
  sc->add_flag("--exhaustive", conc.exhaustive, "Enumerate Hamming cube vertices");
  sc->add_option("--metric", conc.metric, "SO metric: frobenius | geodesic");
  sc->add_option("--tail-eps", conc.tail_eps, "Deviation for the tail-mass column");
  sc->add_option("--ascent", conc.ascent, "Coordinate-ascent iterations");

  CertifyArgs cert;
  auto* sv = app.add_subcommand("certify", "Volume-comparison certificate check");
  sv->add_option("--x", cert.x, "kind:n or file:PATH")->required();
  sv->add_option("--y", cert.y, "kind:n or file:PATH")->required();
  sv->add_option("--a", cert.a, "Radius parameter a")->required();
  sv->add_option("--c", cert.c, "Claimed bound c")->required();
  sv->add_option("--uniformity-tol", cert.uniformity_tol, "Max center std-dev of ball masses");

  FactsArgs facts;
  auto* sf = app.add_subcommand("facts", "Model-space constants");
  sf->add_option("kind,--kind", facts.kind, "sphere | cp | so | hamming")->required();
  sf->add_option("--n", facts.n, "Parameters")->delimiter(',');

  std::vector<std::string> args = args_in;
  try {
    // Locate the subcommand and the config file before the real parse.
    CLI::App* sub = nullptr;
    std::string config_path;
    static const std::set<std::string> valued = {"--seed", "--tol", "--out", "--format",
                                                 "--config"};
    for (std::size_t i = 1; i < args.size(); ++i) {
      const std::string& a = args[i];
      if (a == "--config" && i + 1 < args.size()) config_path = args[i + 1];
      if (a.rfind("--config=", 0) == 0) config_path = a.substr(9);
      if (sub == nullptr && a.rfind("-", 0) != 0) {
        sub = app.get_subcommand_no_throw(a);
        if (sub == nullptr) break;
      }
      if (valued.count(a) != 0) ++i;
    }
    if (!config_path.empty() && sub != nullptr) {
      const auto table = option_table(app, sub);
      const auto given = given_keys(args);
      for (const auto& [key, value] : read_config(config_path)) {
        if (key == "config" || key == "help" || table.count(key) == 0) {
          throw ConfigError("unknown config key '" + key + "' for " + sub->get_name());
        }
        if (given.count(key) != 0 || value.empty()) continue;
        if (table.at(key)->get_positional() && table.at(key)->get_lnames().empty()) {
          throw ConfigError("config key '" + key + "' cannot be set from a file");
        }
        args.push_back("--" + key + "=" + value);
      }
    }

    // An empty value leaves the option unset, matching empty config entries;
    // for grids that is the empty list.
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < args.size(); ++i) {
      const std::string& a = args[i];
      const bool is_long = a.rfind("--", 0) == 0 && a.size() > 2;
      if (is_long && a.back() == '=') continue;
      if (is_long && a.find('=') == std::string::npos && i + 1 < args.size() &&
          args[i + 1].empty()) {
        ++i;
        continue;
      }
      kept.push_back(a);
    }
    args = std::move(kept);

    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    CommandResult result;
    if (sub == sb) {
      result = cmd_bounds(g, bounds);
    } else if (sub == sx) {
      result = cmd_box(g, box);
    } else if (sub == sc) {
      result = cmd_concentration(g, conc);
    } else if (sub == sv) {
      result = cmd_certify(g, cert);
    } else {
      result = cmd_facts(g, facts);
    }
    for (const auto& [key, opt] : option_table(app, sub)) {
      if (key == "out" || key == "config") continue;
      result.output.config[key] = option_value(opt);
    }
    if (g.out.empty()) {
      write_output(result.output, g.format, out);
    } else {
      std::ofstream file(g.out, std::ios::binary);
      if (!file) throw IoError("cannot open output file '" + g.out + "'");
      write_output(result.output, g.format, file);
      file.flush();
      if (!file) throw IoError("failed writing output file '" + g.out + "'");
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace mmbox::cli
