// Copyright 2026 The qecc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qecc/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "qecc/error.hpp"

namespace qecc {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(std::string_view key, std::string_view text) {
  const std::string v = trim(text);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty() || !std::isfinite(out)) {
    throw ConfigError("'" + std::string(key) + "': expected a number, got '" + v + "'");
  }
  return out;
}

std::size_t parse_count(std::string_view key, std::string_view text) {
  const std::string v = trim(text);
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
    throw ConfigError("'" + std::string(key) + "': expected a non-negative integer, got '" + v + "'");
  }
  return out;
}

std::uint64_t parse_u64(std::string_view key, std::string_view text) {
  const std::string v = trim(text);
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
    throw ConfigError("'" + std::string(key) + "': expected an unsigned integer, got '" + v + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view text) {
  const std::string v = trim(text);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("'" + std::string(key) + "': expected true/false, got '" + v + "'");
}

std::vector<double> parse_list(std::string_view key, std::string_view text) {
  std::string v(text);
  for (auto& c : v) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(v);
  std::vector<double> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_double(key, tok));
  return out;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += format_double(values[i]);
  }
  return out;
}

std::string optional_double(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

struct KeyHandler {
  std::function<void(RunConfig&, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;
};

using KeyTable = std::vector<std::pair<std::string, KeyHandler>>;

const KeyTable& key_table() {
  static const KeyTable table = [] {
    KeyTable t;
    auto add = [&](std::string key, KeyHandler h) { t.emplace_back(std::move(key), std::move(h)); };
    add("lattice.n_spins", {[](RunConfig& c, std::string_view v) { c.n_spins = parse_count("lattice.n_spins", v); },
                            [](const RunConfig& c) { return std::to_string(c.n_spins); }});
    add("lattice.topology", {[](RunConfig& c, std::string_view v) {
                               const std::string s = trim(v);
                               if (s != "ring" && s != "custom") throw ConfigError("lattice.topology must be ring or custom");
                               c.topology = s;
                             },
                             [](const RunConfig& c) { return c.topology; }});
    add("lattice.edges", {[](RunConfig& c, std::string_view v) { c.edges = parse_edge_list(v); },
                          [](const RunConfig& c) {
                            std::string out;
                            for (const auto& [a, b] : c.edges) {
                              if (!out.empty()) out += ' ';
                              out += std::to_string(a) + ' ' + std::to_string(b);
                            }
                            return out;
                          }});
    add("disorder.b2", {[](RunConfig& c, std::string_view v) { c.disorder.b2 = parse_double("disorder.b2", v); },
                        [](const RunConfig& c) { return format_double(c.disorder.b2); }});
    add("disorder.j2", {[](RunConfig& c, std::string_view v) { c.disorder.j2 = parse_double("disorder.j2", v); },
                        [](const RunConfig& c) { return format_double(c.disorder.j2); }});
    add("disorder.b0", {[](RunConfig& c, std::string_view v) { c.disorder.b0 = parse_double("disorder.b0", v); },
                        [](const RunConfig& c) { return format_double(c.disorder.b0); }});
    add("disorder.tau", {[](RunConfig& c, std::string_view v) {
                           if (trim(v).empty() || trim(v) == "none") {
                             c.disorder.correlation_time.reset();
                           } else {
                             c.disorder.correlation_time = parse_double("disorder.tau", v);
                           }
                         },
                         [](const RunConfig& c) {
                           return c.disorder.correlation_time ? format_double(*c.disorder.correlation_time)
                                                              : std::string("none");
                         }});
    add("disorder.xy_symmetric",
        {[](RunConfig& c, std::string_view v) { c.disorder.xy_symmetric = parse_bool("disorder.xy_symmetric", v); },
         [](const RunConfig& c) { return std::string(c.disorder.xy_symmetric ? "true" : "false"); }});
    add("code.name", {[](RunConfig& c, std::string_view v) {
                        c.code = trim(v);
                        if (c.code.empty()) throw ConfigError("code.name is empty");
                      },
                      [](const RunConfig& c) { return c.code; }});
    add("code.max_errors",
        {[](RunConfig& c, std::string_view v) { c.reference_max_errors = parse_count("code.max_errors", v); },
         [](const RunConfig& c) { return std::to_string(c.reference_max_errors); }});
    add("code.logical", {[](RunConfig& c, std::string_view v) { c.logical = trim(v); },
                         [](const RunConfig& c) { return c.logical; }});
    add("run.t_max", {[](RunConfig& c, std::string_view v) { c.t_max = parse_double("run.t_max", v); },
                      [](const RunConfig& c) { return format_double(c.t_max); }});
    add("run.n_times", {[](RunConfig& c, std::string_view v) { c.n_times = parse_count("run.n_times", v); },
                        [](const RunConfig& c) { return std::to_string(c.n_times); }});
    add("run.times", {[](RunConfig& c, std::string_view v) { c.times = parse_list("run.times", v); },
                      [](const RunConfig& c) { return join(c.times); }});
    add("run.n_realizations",
        {[](RunConfig& c, std::string_view v) { c.n_realizations = parse_count("run.n_realizations", v); },
         [](const RunConfig& c) { return std::to_string(c.n_realizations); }});
    add("run.seed", {[](RunConfig& c, std::string_view v) { c.disorder.seed = parse_u64("run.seed", v); },
                     [](const RunConfig& c) { return std::to_string(c.disorder.seed); }});
    add("run.method", {[](RunConfig& c, std::string_view v) { c.propagation.method = parse_propagation_method(trim(v)); },
                       [](const RunConfig& c) { return to_string(c.propagation.method); }});
    add("run.tolerance",
        {[](RunConfig& c, std::string_view v) { c.propagation.tolerance = parse_double("run.tolerance", v); },
         [](const RunConfig& c) { return format_double(c.propagation.tolerance); }});
    add("run.max_step", {[](RunConfig& c, std::string_view v) {
                           if (trim(v).empty() || trim(v) == "none") {
                             c.propagation.max_step.reset();
                           } else {
                             c.propagation.max_step = parse_double("run.max_step", v);
                           }
                         },
                         [](const RunConfig& c) {
                           return c.propagation.max_step ? format_double(*c.propagation.max_step)
                                                         : std::string("none");
                         }});
    add("run.toggling", {[](RunConfig& c, std::string_view v) { c.toggling = parse_bool("run.toggling", v); },
                         [](const RunConfig& c) { return std::string(c.toggling ? "true" : "false"); }});
    add("run.split", {[](RunConfig& c, std::string_view v) {
                        const std::string s = trim(v);
                        if (s.empty() || s == "none") {
                          c.split.reset();
                          return;
                        }
                        const auto parts = parse_list("run.split", s);
                        if (parts.size() != 2 || parts[0] < 0 || parts[1] < 0 ||
                            parts[0] != std::floor(parts[0]) || parts[1] != std::floor(parts[1])) {
                          throw ConfigError("run.split expects 'k_par,k_perp'");
                        }
                        c.split = SplitBudget{static_cast<std::size_t>(parts[0]),
                                              static_cast<std::size_t>(parts[1])};
                      },
                      [](const RunConfig& c) {
                        return c.split ? std::to_string(c.split->k_par) + "," + std::to_string(c.split->k_perp)
                                       : std::string("none");
                      }});
    add("run.output", {[](RunConfig& c, std::string_view v) { c.output = trim(v); },
                       [](const RunConfig& c) { return c.output; }});
    add("theory.kappa", {[](RunConfig& c, std::string_view v) {
                           if (trim(v).empty()) {
                             c.kappa.reset();
                           } else {
                             c.kappa = parse_double("theory.kappa", v);
                           }
                         },
                         [](const RunConfig& c) { return optional_double(c.kappa); }});
    add("theory.n_spins", {[](RunConfig& c, std::string_view v) {
                             if (trim(v).empty()) {
                               c.theory_n_spins.reset();
                             } else {
                               c.theory_n_spins = parse_count("theory.n_spins", v);
                             }
                           },
                           [](const RunConfig& c) {
                             return c.theory_n_spins ? std::to_string(*c.theory_n_spins) : std::string();
                           }});
    add("theory.degree", {[](RunConfig& c, std::string_view v) {
                            if (trim(v).empty()) {
                              c.theory_degree.reset();
                            } else {
                              c.theory_degree = parse_count("theory.degree", v);
                            }
                          },
                          [](const RunConfig& c) {
                            return c.theory_degree ? std::to_string(*c.theory_degree) : std::string();
                          }});
    add("sweep.axis", {[](RunConfig& c, std::string_view v) {
                         const std::string s = trim(v);
                         if (s != "N" && s != "J/B" && s != "kappa" && s != "B0" && s != "tau" && !s.empty()) {
                           throw ConfigError("sweep.axis must be one of N, J/B, kappa, B0, tau");
                         }
                         c.sweep_axis = s;
                       },
                       [](const RunConfig& c) { return c.sweep_axis; }});
    add("sweep.values", {[](RunConfig& c, std::string_view v) { c.sweep_values = parse_list("sweep.values", v); },
                         [](const RunConfig& c) { return join(c.sweep_values); }});
    add("census.time", {[](RunConfig& c, std::string_view v) { c.census_time = parse_double("census.time", v); },
                        [](const RunConfig& c) { return format_double(c.census_time); }});
    add("census.max_z", {[](RunConfig& c, std::string_view v) { c.census_max_z = parse_count("census.max_z", v); },
                         [](const RunConfig& c) { return std::to_string(c.census_max_z); }});
    add("census.max_xy", {[](RunConfig& c, std::string_view v) { c.census_max_xy = parse_count("census.max_xy", v); },
                          [](const RunConfig& c) { return std::to_string(c.census_max_xy); }});
    return t;
  }();
  return table;
}

const KeyHandler& handler(std::string_view key) {
  for (const auto& [k, h] : key_table()) {
    if (k == key) return h;
  }
  throw ConfigError("unknown config key '" + std::string(key) + "'");
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

RunConfig RunConfig::parse(std::string_view text) {
  RunConfig c;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    c.set(trim(t.substr(0, eq)), t.substr(eq + 1));
  }
  return c;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

void RunConfig::set(std::string_view key, std::string_view value) { handler(key).set(*this, value); }

std::string RunConfig::get(std::string_view key) const { return handler(key).get(*this); }

const std::vector<std::string>& RunConfig::keys() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, h] : key_table()) out.push_back(k);
    return out;
  }();
  return names;
}

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [k, h] : key_table()) out.emplace_back(k, h.get(*this));
  return out;
}

std::vector<double> RunConfig::time_grid() const {
  std::vector<double> grid = times;
  if (grid.empty()) {
    if (n_times == 0) throw ConfigError("run.n_times must be >= 1");
    if (!(t_max >= 0.0)) throw ConfigError("run.t_max must be >= 0");
    if (n_times == 1) {
      grid.push_back(0.0);
    } else {
      if (!(t_max > 0.0)) throw ConfigError("run.t_max must be > 0 for more than one time point");
      for (std::size_t i = 0; i < n_times; ++i) {
        grid.push_back(t_max * static_cast<double>(i) / static_cast<double>(n_times - 1));
      }
    }
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0.0) throw ConfigError("time grid must be non-negative");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw ConfigError("time grid must be strictly increasing");
  }
  return grid;
}

}  // namespace qecc
