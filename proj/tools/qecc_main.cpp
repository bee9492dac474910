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

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <memory>
#include <iostream>
#include <string>
#include <vector>

#include "qecc/qecc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

int exit_code(qecc_status st) {
  switch (st) {
    case QECC_OK:
      return kExitOk;
    case QECC_ERR_CONFIG:
    case QECC_ERR_IO:
      return kExitConfig;
    default:
      return kExitNumerical;
  }
}

int report(qecc_status st) {
  std::cerr << "qecc: " << qecc_last_error() << "\n";
  return exit_code(st);
}

struct Options {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string output;
  bool quiet = false;
};

int run(const std::string& command, const Options& opt, const std::string& code_arg) {
  qecc_config* config = nullptr;
  qecc_status st = opt.config_path.empty() ? qecc_config_create(&config)
                                           : qecc_config_load(opt.config_path.c_str(), &config);
  if (st != QECC_OK) return report(st);
  std::unique_ptr<qecc_config, void (*)(qecc_config*)> guard(config, qecc_config_destroy);

  for (const auto& kv : opt.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "qecc: --set expects key=value, got '" << kv << "'\n";
      return kExitConfig;
    }
    std::string key = kv.substr(0, eq);
    std::string value = kv.substr(eq + 1);
    auto trim = [](std::string& s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    trim(key);
    trim(value);
    if ((st = qecc_config_set(config, key.c_str(), value.c_str())) != QECC_OK) return report(st);
  }
  if (!code_arg.empty() && (st = qecc_config_set(config, "code.name", code_arg.c_str())) != QECC_OK) {
    return report(st);
  }
  if (!opt.output.empty() && (st = qecc_config_set(config, "run.output", opt.output.c_str())) != QECC_OK) {
    return report(st);
  }

  qecc_result* result = nullptr;
  if ((st = qecc_run(config, command.c_str(), &result)) != QECC_OK) return report(st);
  std::unique_ptr<qecc_result, void (*)(qecc_result*)> result_guard(result, qecc_result_destroy);

  size_t needed = 0;
  qecc_config_get(config, "run.output", nullptr, 0, &needed);
  std::string path(needed, '\0');
  if (needed > 0 && qecc_config_get(config, "run.output", path.data(), needed, nullptr) == QECC_OK) {
    path.resize(needed - 1);
  } else {
    path.clear();
  }
  if (path.empty() || path == "-") {
    std::cout << qecc_result_csv(result);
    if (!opt.quiet) std::cerr << qecc_result_summary(result);
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!(out << qecc_result_csv(result))) {
      std::cerr << "qecc: cannot write " << path << "\n";
      return kExitConfig;
    }
    if (!opt.quiet) std::cout << qecc_result_summary(result);
  }
  return qecc_result_passed(result) ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Error-correction limits for random spin Hamiltonians"};
  app.set_version_flag("--version", std::string(qecc_version()));
  app.require_subcommand(1);

  Options opt;
  std::string code_arg;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"theory", "Analytic fidelity bound on a time grid"},
      {"simulate", "Monte Carlo error-space fidelity"},
      {"sweep", "Repeat simulate along one parameter axis"},
      {"verify-code", "Check that a code is non-degenerate"},
      {"chaos", "Participation ratios of energy eigenstates"},
      {"census", "Error-space weight by error class"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-c,--config", opt.config_path, "key = value config file")->check(CLI::ExistingFile);
    sub->add_option("-s,--set", opt.overrides, "Override one key, key=value")->take_all();
    sub->add_option("-o,--output", opt.output, "CSV path (default stdout)");
    sub->add_flag("-q,--quiet", opt.quiet, "Suppress the summary");
    if (name == "verify-code") sub->add_option("code", code_arg, "Builtin code name or code file");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }
  for (CLI::App* sub : app.get_subcommands()) return run(sub->get_name(), opt, code_arg);
  return kExitConfig;
}
