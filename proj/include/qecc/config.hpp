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

#ifndef QECC_CONFIG_HPP
#define QECC_CONFIG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qecc/lattice.hpp"
#include "qecc/pauli_state.hpp"
#include "qecc/propagator.hpp"

namespace qecc {

/// Name of the ideal reference-entangled code (see ReferenceCodeEvaluator).
inline constexpr std::string_view kReferenceCodeName = "reference";

/// Resolved run configuration. The text form is flat `key = value` lines
/// with section prefixes (lattice., disorder., code., run., theory., sweep.,
/// census.); '#' starts a comment.
struct RunConfig {
  // lattice
  std::size_t n_spins = 0;  // 0: take N from the code
  std::string topology = "ring";
  std::vector<Edge> edges;

  DisorderParams disorder;

  // code
  std::string code = "five_qubit";
  std::size_t reference_max_errors = 1;  // K for the reference code
  std::string logical = "zero";

  // run
  double t_max = 1.0;
  std::size_t n_times = 21;
  std::vector<double> times;  // explicit grid, overrides t_max/n_times
  std::size_t n_realizations = 200;
  PropagationSettings propagation;
  bool toggling = false;
  std::optional<SplitBudget> split;
  std::string output;

  // theory
  std::optional<double> kappa;
  std::optional<std::size_t> theory_n_spins;
  std::optional<std::size_t> theory_degree;

  // sweep
  std::string sweep_axis;
  std::vector<double> sweep_values;

  // census
  double census_time = 0.1;
  std::size_t census_max_z = 1;
  std::size_t census_max_xy = 1;

  static RunConfig parse(std::string_view text);
  static RunConfig load(const std::string& path);

  /// Sets one key from its text value; throws ConfigError on unknown keys or
  /// malformed values.
  void set(std::string_view key, std::string_view value);
  std::string get(std::string_view key) const;
  static const std::vector<std::string>& keys();

  /// Every key with its resolved value, in canonical order.
  std::vector<std::pair<std::string, std::string>> echo() const;

  /// Time grid: `times` if given, else n_times points evenly spanning
  /// [0, t_max] (n_times == 1 gives {0}). Throws unless strictly increasing.
  std::vector<double> time_grid() const;

  bool uses_reference_code() const { return code == kReferenceCodeName; }
};

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double v);

}  // namespace qecc

#endif  // QECC_CONFIG_HPP
