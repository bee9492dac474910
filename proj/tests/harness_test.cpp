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

#include "qecc/harness.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "qecc/config.hpp"
#include "qecc/error.hpp"
#include "qecc/propagator.hpp"

namespace qecc {
namespace {

RunConfig small_config() {
  RunConfig c;
  c.disorder.b2 = 1.0;
  c.disorder.j2 = 0.1;
  c.t_max = 0.6;
  c.n_times = 7;
  c.n_realizations = 8;
  return c;
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

TEST(Config, ParseSetGet) {
  const RunConfig c = RunConfig::parse(
      "# comment\n"
      "lattice.n_spins = 6   # trailing\n"
      "disorder.b2 = 0.5\n"
      "disorder.tau = 0.02\n"
      "code.name = reference\n"
      "run.times = 0, 0.1, 0.25\n"
      "run.split = 1,1\n"
      "run.seed = 99\n");
  EXPECT_EQ(c.n_spins, 6u);
  EXPECT_EQ(c.disorder.b2, 0.5);
  ASSERT_TRUE(c.disorder.correlation_time.has_value());
  EXPECT_EQ(*c.disorder.correlation_time, 0.02);
  EXPECT_TRUE(c.uses_reference_code());
  EXPECT_EQ(c.time_grid(), (std::vector<double>{0.0, 0.1, 0.25}));
  ASSERT_TRUE(c.split.has_value());
  EXPECT_EQ(c.split->k_par, 1u);
  EXPECT_EQ(c.disorder.seed, 99u);
  EXPECT_EQ(c.get("run.seed"), "99");
}

TEST(Config, Errors) {
  EXPECT_THROW(RunConfig::parse("bogus.key = 1\n"), ConfigError);
  EXPECT_THROW(RunConfig::parse("disorder.b2\n"), ConfigError);
  EXPECT_THROW(RunConfig::parse("disorder.b2 = abc\n"), ConfigError);
  EXPECT_THROW(RunConfig::parse("run.toggling = maybe\n"), ConfigError);
  EXPECT_THROW(RunConfig::parse("run.times = 0.2, 0.1\n").time_grid(), ConfigError);
  EXPECT_THROW(RunConfig::load("/nonexistent/qecc.cfg"), ConfigError);
  RunConfig c = small_config();
  c.n_realizations = 0;
  EXPECT_THROW(run_simulation(c), ConfigError);
}

TEST(Config, EchoRoundTrips) {
  RunConfig c = small_config();
  c.disorder.correlation_time = 0.125;
  c.split = SplitBudget{2, 1};
  c.kappa = 0.1;
  c.sweep_axis = "J/B";
  c.sweep_values = {0.1, 1.0 / 3.0};
  std::string text;
  for (const auto& [k, v] : c.echo()) text += k + " = " + v + "\n";
  const RunConfig back = RunConfig::parse(text);
  EXPECT_EQ(back.echo(), c.echo());
}

TEST(Config, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, -2.5, 0.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(2.0), "2");
}

TEST(Harness, NoDisorderGivesUnitFidelity) {
  RunConfig c = small_config();
  c.disorder.b2 = 0.0;
  c.disorder.j2 = 0.0;
  const FidelityCurve curve = run_simulation(c);
  for (double f : curve.mean_f) EXPECT_NEAR(f, 1.0, 1e-12);
  for (double f : curve.f1_exact) EXPECT_EQ(f, 1.0);
}

TEST(Harness, CurveShapes) {
  const FidelityCurve curve = run_simulation(small_config());
  EXPECT_EQ(curve.times.size(), 7u);
  EXPECT_EQ(curve.mean_f.size(), 7u);
  EXPECT_EQ(curve.sem_f.size(), 7u);
  EXPECT_EQ(curve.f1_erf.size(), 7u);
  EXPECT_EQ(curve.samples.size(), 8u);
  for (std::size_t i = 0; i < curve.times.size(); ++i) {
    EXPECT_GE(curve.mean_f[i], 0.0);
    EXPECT_LE(curve.mean_f[i], 1.0 + 1e-12);
    EXPECT_GE(curve.sem_f[i], 0.0);
  }
  EXPECT_EQ(curve.theory.max_errors(), 1u);
  EXPECT_EQ(curve.theory.degree, 2u);
}

TEST(Harness, LowerBoundFieldOnly) {
  RunConfig c;
  c.disorder.b2 = 1.0;
  c.t_max = 1.0;
  c.n_times = 11;
  c.n_realizations = 200;
  const FidelityCurve curve = run_simulation(c);
  for (std::size_t i = 0; i < curve.times.size(); ++i) {
    EXPECT_GE(curve.mean_f[i], curve.f1_exact[i] - 3 * curve.sem_f[i]) << "t = " << curve.times[i];
  }
}

TEST(Harness, DeterministicCsv) {
  RunConfig c = small_config();
  c.n_realizations = 1;
  EXPECT_EQ(run_simulate_command(c).csv, run_simulate_command(c).csv);
}

TEST(Harness, WorkerCountDoesNotChangeResults) {
  RunConfig c = small_config();
  c.n_realizations = 13;
  setenv("QECC_WORKERS", "1", 1);
  EXPECT_EQ(worker_count(), 1u);
  const std::string one = run_simulate_command(c).csv;
  setenv("QECC_WORKERS", "5", 1);
  EXPECT_EQ(worker_count(), 5u);
  const std::string five = run_simulate_command(c).csv;
  unsetenv("QECC_WORKERS");
  EXPECT_EQ(one, five);
}

TEST(Harness, CsvLayout) {
  const std::string csv = run_simulate_command(small_config()).csv;
  EXPECT_NE(csv.find("# disorder.b2 = 1\n"), std::string::npos);
  EXPECT_NE(csv.find("# version = "), std::string::npos);
  EXPECT_NE(csv.find("# run.seed = 0\n"), std::string::npos);
  const auto lines = data_lines(csv);
  ASSERT_EQ(lines.size(), 8u);
  EXPECT_EQ(lines[0], "t,mean_F,sem_F,mean_overlap,sem_overlap,f1_exact,f1_erf,x0_sq");
  for (const auto& l : lines) EXPECT_EQ(std::count(l.begin(), l.end(), ','), 7);
}

TEST(Harness, PolynomialMatchesDense) {
  RunConfig c = small_config();
  c.n_realizations = 3;
  const FidelityCurve dense = run_simulation(c);
  c.propagation.method = PropagationMethod::kPolynomial;
  const FidelityCurve poly = run_simulation(c);
  for (std::size_t i = 0; i < dense.times.size(); ++i) EXPECT_NEAR(dense.mean_f[i], poly.mean_f[i], 1e-9);
}

TEST(Harness, TrajectoryMatchesPiecewiseOracle) {
  RunConfig c = small_config();
  c.disorder.correlation_time = 0.07;
  c.n_realizations = 2;
  const FidelityCurve curve = run_simulation(c);
  const LatticeSpec l = build_ring(5);
  const StabilizerCode code = builtin_code("five_qubit");
  const Complex z[] = {1.0, 0.0};
  const StateVector psi0 = encode_state(code, z);
  for (std::size_t i : {std::size_t{3}, std::size_t{6}}) {
    const double t = curve.times[i];
    for (std::uint64_t r = 0; r < 2; ++r) {
      // A trajectory over [0, t] is a prefix of the one over [0, t_max].
      const auto segs = sample_trajectory(l, c.disorder, t, r);
      const StateVector psi = evolve_piecewise(segs, l, psi0);
      EXPECT_NEAR(curve.samples[r][i], error_space_fidelity(code, psi0, psi), 1e-10);
    }
  }
  EXPECT_TRUE(curve.time_dependent);
}

TEST(Harness, TogglingMatchesDirectEvolution) {
  RunConfig c = small_config();
  c.disorder.b0 = 15.0;
  c.toggling = true;
  c.n_realizations = 2;
  const FidelityCurve curve = run_simulation(c);
  const LatticeSpec l = build_ring(5);
  const StabilizerCode code = builtin_code("five_qubit");
  const Complex z[] = {1.0, 0.0};
  const StateVector psi0 = encode_state(code, z);
  const HamiltonianSample h = sample_hamiltonian(l, c.disorder, 1);
  const double t = curve.times[4];
  EXPECT_NEAR(curve.samples[1][4], error_space_fidelity(code, psi0, evolve_toggling(h, l, psi0, t)), 1e-10);
  EXPECT_NEAR(curve.theory.b2, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(curve.theory.j2, 0.1 / 6.0, 1e-15);
}

TEST(Harness, ReferenceCodeOverlapTracksX0) {
  RunConfig c;
  c.code = "reference";
  c.n_spins = 6;
  c.reference_max_errors = 2;
  c.disorder.b2 = 0.5;
  c.disorder.j2 = 0.125;
  c.times = {0.0, 0.1, 0.2};
  c.n_realizations = 100;
  const FidelityCurve curve = run_simulation(c);
  EXPECT_EQ(curve.theory.max_errors(), 2u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(curve.mean_overlap[i], curve.x0_sq[i], 0.05 * curve.x0_sq[i] + 3 * curve.sem_overlap[i]);
    EXPECT_GE(curve.mean_f[i] + 1e-12, curve.mean_overlap[i]);
  }
  c.disorder.correlation_time = 0.1;
  EXPECT_THROW(run_simulation(c), ConfigError);
}

TEST(Harness, LogicalStates) {
  EXPECT_EQ(logical_amplitudes("one", 1)[1], Complex(1.0));
  EXPECT_NEAR(std::abs(logical_amplitudes("plus_i", 1)[1] - Complex(0.0, M_SQRT1_2)), 0.0, 1e-15);
  EXPECT_EQ(logical_amplitudes("basis:3", 2)[3], Complex(1.0));
  EXPECT_THROW(logical_amplitudes("basis:4", 2), ConfigError);
  EXPECT_THROW(logical_amplitudes("sideways", 1), ConfigError);
}

TEST(Harness, LatticeFromCode) {
  RunConfig c;
  c.code = "steane";
  EXPECT_EQ(resolve_lattice(c).n_spins, 7u);
  c.n_spins = 5;
  EXPECT_THROW(resolve_lattice(c), ConfigError);
}

TEST(Commands, TheorySinglePoint) {
  RunConfig c;
  c.disorder.b2 = 0.5;
  c.disorder.j2 = 0.125;
  c.kappa = 0.01;
  c.theory_n_spins = 10000;
  c.theory_degree = 2;
  c.times = {0.0};
  const auto lines = data_lines(run_theory(c).csv);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[1].substr(0, 6), "0,1,1,");
}

TEST(Commands, TheoryFigureCurve) {
  RunConfig c;
  c.disorder.b2 = 0.5;
  c.disorder.j2 = 0.125;
  c.kappa = 0.01;
  c.theory_n_spins = 10000;
  c.theory_degree = 2;
  c.t_max = 0.16;
  c.n_times = 17;
  const RunOutput out = run_theory(c);
  const auto lines = data_lines(out.csv);
  ASSERT_EQ(lines.size(), 18u);
  const TheoryParams p = TheoryParams::from_budget(10000, 2, 100, 0.5, 0.125);
  std::istringstream row(lines[9]);
  std::string cell;
  std::vector<double> v;
  while (std::getline(row, cell, ',')) v.push_back(std::stod(cell));
  EXPECT_EQ(v[0], 0.08);
  EXPECT_EQ(v[1], f1_exact_sum(p, 0.08));
  EXPECT_EQ(v[2], f1_erf(p, 0.08).fidelity);
  EXPECT_NE(out.summary.find("t_R = 0.0816"), std::string::npos);
}

TEST(Commands, VerifyCode) {
  const RunOutput five = run_verify_code("five_qubit");
  EXPECT_TRUE(five.passed);
  EXPECT_NE(five.summary.find("PASS"), std::string::npos);
  EXPECT_THROW(run_verify_code("nope"), ConfigError);
}

TEST(Commands, SweepValidation) {
  RunConfig c = small_config();
  EXPECT_THROW(run_sweep(c), ConfigError);
  c.sweep_axis = "N";
  EXPECT_THROW(run_sweep(c), ConfigError);
  EXPECT_THROW(c.set("sweep.axis", "colour"), ConfigError);
}

TEST(Commands, SweepJOverBKeepsU) {
  RunConfig c = small_config();
  c.n_realizations = 4;
  c.n_times = 3;
  c.sweep_axis = "J/B";
  c.sweep_values = {0.0, 0.5, 1.0};
  const auto lines = data_lines(run_sweep(c).csv);
  ASSERT_EQ(lines.size(), 1 + 3 * 3u);
  EXPECT_EQ(lines[0].substr(0, 24), "sweep_index,axis_value,t");
  // X0^2 = exp(-N U^2 t^2) is the same for every value at fixed U.
  auto column = [](const std::string& line, int k) {
    std::istringstream row(line);
    std::string cell;
    for (int i = 0; i <= k; ++i) std::getline(row, cell, ',');
    return cell;
  };
  EXPECT_EQ(column(lines[2], 9), column(lines[5], 9));
  EXPECT_EQ(column(lines[2], 9), column(lines[8], 9));
}

TEST(Commands, SweepN) {
  RunConfig c;
  c.code = "reference";
  c.disorder.b2 = 1.0;
  c.kappa = 0.25;
  c.n_realizations = 3;
  c.n_times = 3;
  c.sweep_axis = "N";
  c.sweep_values = {4, 8};
  const auto lines = data_lines(run_sweep(c).csv);
  EXPECT_EQ(lines.size(), 7u);
}

TEST(Commands, Chaos) {
  RunConfig c;
  c.code = "reference";
  c.n_spins = 4;
  c.disorder.b2 = 1.0;
  c.disorder.j2 = 1.0;
  c.n_realizations = 3;
  const auto lines = data_lines(run_chaos(c).csv);
  ASSERT_EQ(lines.size(), 1 + 3 * 16u);
  EXPECT_EQ(lines[0], "realization,eigenindex,participation_ratio");
}

TEST(Commands, Census) {
  RunConfig c;
  c.code = "reference";
  c.n_spins = 5;
  c.disorder.b2 = 1.0;
  c.disorder.j2 = 0.2;
  c.n_realizations = 4;
  c.census_max_z = 2;
  c.census_max_xy = 2;
  const auto lines = data_lines(run_census(c).csv);
  ASSERT_EQ(lines.size(), 1 + 9u);
  EXPECT_EQ(lines[0], "z_count,xy_count,weight,sem");

  RunConfig code = c;
  code.code = "five_qubit";
  code.n_spins = 0;
  code.census_max_z = 1;
  code.census_max_xy = 0;
  EXPECT_EQ(data_lines(run_census(code).csv).size(), 3u);
  code.census_max_xy = 1;
  EXPECT_THROW(run_census(code), NumericalError);
}

TEST(Commands, Dispatch) {
  EXPECT_THROW(run_command("plot", RunConfig{}), ConfigError);
  EXPECT_TRUE(run_command("verify-code", RunConfig{}).passed);
}

}  // namespace
}  // namespace qecc
