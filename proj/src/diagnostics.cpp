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

#include "qecc/diagnostics.hpp"

#include <array>
#include <cmath>

#include <Eigen/Dense>

#include "qecc/error.hpp"
#include "qecc/propagator.hpp"

namespace qecc {

namespace {

using Local = Eigen::Matrix2cd;

// Eigenvectors (columns) of b . sigma; identity when b == 0.
Local local_basis(const Vec3& b) {
  Local m;
  m << Complex(b[2], 0.0), Complex(b[0], -b[1]), Complex(b[0], b[1]), Complex(-b[2], 0.0);
  if (b[0] == 0.0 && b[1] == 0.0 && b[2] == 0.0) return Local::Identity();
  Eigen::SelfAdjointEigenSolver<Local> solver(m);
  return solver.eigenvectors();
}

// Applies (prod_n u_n)^dagger to a vector, site n acting on bit n.
void apply_local_adjoint(const std::vector<Local>& bases, Eigen::Ref<Eigen::VectorXcd> v) {
  const auto dim = static_cast<std::uint64_t>(v.size());
  for (std::size_t n = 0; n < bases.size(); ++n) {
    const Local ua = bases[n].adjoint();
    const std::uint64_t bit = std::uint64_t{1} << n;
    for (std::uint64_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const Complex a0 = v[static_cast<Eigen::Index>(i)];
      const Complex a1 = v[static_cast<Eigen::Index>(i | bit)];
      v[static_cast<Eigen::Index>(i)] = ua(0, 0) * a0 + ua(0, 1) * a1;
      v[static_cast<Eigen::Index>(i | bit)] = ua(1, 0) * a0 + ua(1, 1) * a1;
    }
  }
}

}  // namespace

std::vector<double> participation_ratio(const HamiltonianSample& h, const LatticeSpec& lattice) {
  if (lattice.n_spins > kMaxDenseDiagnosticSpins) {
    throw ConfigError("participation ratio needs N <= " + std::to_string(kMaxDenseDiagnosticSpins));
  }
  return participation_ratio(h, lattice, SpectralPropagator(h, lattice));
}

std::vector<double> participation_ratio(const HamiltonianSample& h, const LatticeSpec& lattice,
                                        const SpectralPropagator& spectral) {
  if (spectral.n_spins() != lattice.n_spins || h.fields.size() != lattice.n_spins) {
    throw ConfigError("participation ratio: sample, lattice and spectrum disagree");
  }
  std::vector<Local> bases;
  for (const auto& b : h.fields) bases.push_back(local_basis({b[0], b[1], b[2] + h.b0}));

  const Eigen::MatrixXcd& v = spectral.eigenvectors();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(v.cols()));
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    Eigen::VectorXcd c = v.col(k);
    apply_local_adjoint(bases, c);
    double ipr = 0.0;
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      const double p = std::norm(c[i]);
      ipr += p * p;
    }
    out.push_back(1.0 / ipr);
  }
  return out;
}

double CensusReport::total() const {
  double s = 0.0;
  for (const auto& [k, w] : weights) s += w;
  return s;
}

double CensusReport::phase_only() const {
  double s = 0.0;
  for (const auto& [k, w] : weights) {
    if (k.second == 0 && k.first > 0) s += w;
  }
  return s;
}

double CensusReport::flip_containing() const {
  double s = 0.0;
  for (const auto& [k, w] : weights) {
    if (k.second > 0) s += w;
  }
  return s;
}

double CensusReport::odd_flip() const {
  double s = 0.0;
  for (const auto& [k, w] : weights) {
    if (k.second % 2 == 1) s += w;
  }
  return s;
}

CensusReport census_from_weights(std::span<const PauliString> strings,
                                 std::span<const double> weights) {
  if (strings.size() != weights.size()) throw ConfigError("census weight count mismatch");
  CensusReport r;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    r.weights[{strings[i].z_count(), strings[i].xy_count()}] += weights[i];
  }
  return r;
}

CensusReport error_census(const ErrorBasis& basis, const StateVector& psi_t) {
  const auto amps = basis.amplitudes(psi_t);
  std::vector<double> w;
  w.reserve(amps.size());
  for (const auto& a : amps) w.push_back(std::norm(a));
  return census_from_weights(basis.strings(), w);
}

CensusReport error_census(const StabilizerCode& code, const StateVector& psi0,
                          const StateVector& psi_t, std::size_t max_z, std::size_t max_xy) {
  return error_census(ErrorBasis(psi0, error_strings_for(code, SplitBudget{max_z, max_xy})), psi_t);
}

CensusReport error_census(const ReferenceCodeEvaluator& evaluator, double t) {
  const auto w = evaluator.weights(t);
  return census_from_weights(evaluator.strings(), w);
}

VarianceReport variance_check(std::span<const double> samples) {
  if (samples.size() < 2) throw ConfigError("variance check needs at least 2 samples");
  VarianceReport r;
  r.n = samples.size();
  const auto n = static_cast<double>(r.n);
  double sum = 0.0;
  for (double f : samples) sum += f;
  r.mean = sum / n;
  double m2 = 0.0;
  double m4 = 0.0;
  for (double f : samples) {
    const double d = f - r.mean;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m4 /= n;
  r.variance = m2 * n / (n - 1.0);
  r.bound = r.mean * (1.0 - r.mean);
  // Var of the sample variance: (mu4 - (n-3)/(n-1) sigma^4) / n.
  const double var_of_var = std::max(0.0, (m4 - (n - 3.0) / (n - 1.0) * m2 * m2) / n);
  r.slack = 3.0 * std::sqrt(var_of_var);
  r.passed = r.variance >= 0.0 && r.variance <= r.bound + r.slack;
  return r;
}

F2Estimate empirical_f2(double mean_f, double sem_f, double f1) {
  F2Estimate e;
  e.value = mean_f - f1;
  e.sem = sem_f;
  e.consistent = e.value >= -3.0 * sem_f;
  return e;
}

}  // namespace qecc
