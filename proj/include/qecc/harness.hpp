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

#ifndef QECC_HARNESS_HPP
#define QECC_HARNESS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qecc/codes.hpp"
#include "qecc/config.hpp"
#include "qecc/lattice.hpp"
#include "qecc/theory.hpp"

namespace qecc {

inline constexpr const char* kVersion = "1.0.0";

/// Ensemble statistics of the measured fidelity on a time grid, with the
/// matching analytic columns.
struct FidelityCurve {
  std::vector<double> times;
  std::vector<double> mean_f;
  std::vector<double> sem_f;
  std::vector<double> mean_overlap;  // |<psi0|psi(t)>|^2
  std::vector<double> sem_overlap;
  std::vector<double> f1_exact;
  std::vector<double> f1_erf;
  std::vector<double> x0_sq;
  std::size_t n_realizations = 0;
  TheoryParams theory;
  bool time_dependent = false;
  double t_r = 0.0;
  double delta_t = 0.0;
  /// Per-realization fidelity, [realization][time].
  std::vector<std::vector<double>> samples;
  std::vector<std::pair<std::string, std::string>> metadata;

  /// First time the mean fidelity drops through 1/2, linearly interpolated.
  std::optional<double> half_fidelity_time() const;
};

/// Lattice implied by the config (ring or custom; N from the code when not
/// given).
LatticeSpec resolve_lattice(const RunConfig& config);

/// Logical state by name: zero, one, plus, minus, plus_i, or basis:<k>.
std::vector<Complex> logical_amplitudes(const std::string& spec, std::size_t n_logical);

/// Theory parameters matched to a config: N and d from the lattice, K from
/// the code (or split budget total), toggling-frame effective variances when
/// the toggling flag is set, and b0/j0 correlator rates when tau is set.
TheoryParams matched_theory(const RunConfig& config, const LatticeSpec& lattice);

/// Monte Carlo average over n_realizations disorder samples. Realizations
/// are seeded by index, so the result does not depend on the worker count
/// (env QECC_WORKERS).
FidelityCurve run_simulation(const RunConfig& config);

struct RunOutput {
  std::string csv;
  std::string summary;
  bool passed = true;  // verify-code outcome; true for the other commands
};

std::string format_curve_csv(const FidelityCurve& curve, const std::string& command);

RunOutput run_simulate_command(const RunConfig& config);
RunOutput run_sweep(const RunConfig& config);
RunOutput run_theory(const RunConfig& config);
RunOutput run_verify_code(const std::string& name_or_path);
RunOutput run_chaos(const RunConfig& config);
RunOutput run_census(const RunConfig& config);

/// Dispatches by subcommand name: theory, simulate, sweep, verify-code,
/// chaos, census.
RunOutput run_command(const std::string& command, const RunConfig& config);

/// Worker count: QECC_WORKERS if set and positive, else hardware concurrency.
std::size_t worker_count();

}  // namespace qecc

#endif  // QECC_HARNESS_HPP
