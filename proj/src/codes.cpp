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

#include "qecc/codes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qecc/error.hpp"

namespace qecc {

namespace {

constexpr double kCodeTolerance = 1e-10;

std::size_t gf2_rank(const std::vector<PauliString>& gens) {
  std::vector<std::uint64_t> rows_x, rows_z;
  for (const auto& g : gens) {
    rows_x.push_back(g.x_mask());
    rows_z.push_back(g.z_mask());
  }
  // Row-reduce 2N-bit symplectic vectors, using x bits then z bits as pivots.
  std::size_t rank = 0;
  const std::size_t n = gens.empty() ? 0 : gens.front().n_spins();
  for (std::size_t col = 0; col < 2 * n && rank < rows_x.size(); ++col) {
    auto bit = [&](std::size_t r) {
      return col < n ? (rows_x[r] >> col) & 1u : (rows_z[r] >> (col - n)) & 1u;
    };
    std::size_t pivot = rank;
    while (pivot < rows_x.size() && !bit(pivot)) ++pivot;
    if (pivot == rows_x.size()) continue;
    std::swap(rows_x[pivot], rows_x[rank]);
    std::swap(rows_z[pivot], rows_z[rank]);
    for (std::size_t r = 0; r < rows_x.size(); ++r) {
      if (r != rank && bit(r)) {
        rows_x[r] ^= rows_x[rank];
        rows_z[r] ^= rows_z[rank];
      }
    }
    ++rank;
  }
  return rank;
}

StateVector project_onto_code(const std::vector<PauliString>& gens, const StateVector& psi) {
  StateVector cur = psi;
  for (const auto& g : gens) {
    StateVector gpsi = apply_pauli_string(g, cur);
    std::vector<Complex> a(cur.dimension());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = 0.5 * (cur[i] + gpsi[i]);
    cur = StateVector::unchecked(psi.n_spins(), std::move(a));
  }
  return cur;
}

std::vector<StateVector> build_codewords(std::size_t n_spins, const std::vector<PauliString>& gens,
                                         std::size_t count) {
  std::vector<StateVector> out;
  const std::uint64_t dim = std::uint64_t{1} << n_spins;
  for (std::uint64_t b = 0; b < dim && out.size() < count; ++b) {
    StateVector v = project_onto_code(gens, StateVector::basis_state(n_spins, b));
    std::vector<Complex> a(v.amplitudes().begin(), v.amplitudes().end());
    for (const auto& prev : out) {
      const Complex ov = inner_product(prev, v);
      for (std::size_t i = 0; i < a.size(); ++i) a[i] -= ov * prev[i];
    }
    double nrm = 0.0;
    for (const auto& c : a) nrm += std::norm(c);
    if (std::sqrt(nrm) < 1e-6) continue;
    out.push_back(StateVector::normalized(n_spins, std::move(a)));
  }
  if (out.size() != count) throw NumericalError("could not build a full codeword basis");
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

StabilizerCode::StabilizerCode(std::string name, std::size_t n_spins, std::size_t max_errors,
                               std::vector<PauliString> generators)
    : name_(std::move(name)),
      n_spins_(n_spins),
      max_errors_(max_errors),
      generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.n_spins() != n_spins_) throw ConfigError("generator size does not match n_spins");
  }
  const std::size_t rank = gf2_rank(generators_);
  if (rank != generators_.size()) throw ConfigError("code generators are not independent");
  for (std::size_t a = 0; a < generators_.size(); ++a) {
    for (std::size_t b = a + 1; b < generators_.size(); ++b) {
      if (!generators_[a].commutes_with(generators_[b])) {
        throw ConfigError("code generators do not commute");
      }
    }
    if (generators_[a].phase() % 2 != 0) throw ConfigError("generator must be Hermitian");
  }
  n_logical_ = n_spins_ - rank;
  if (n_logical_ > 16) throw ConfigError("too many logical qubits");
  codewords_ = build_codewords(n_spins_, generators_, std::size_t{1} << n_logical_);
  bit_rate_ = static_cast<double>(n_logical_) / static_cast<double>(n_spins_);
  error_rate_ = static_cast<double>(max_errors_) / static_cast<double>(n_spins_);
  check_invariants();
}

StabilizerCode::StabilizerCode(std::string name, std::size_t n_spins, std::size_t max_errors,
                               std::vector<PauliString> generators,
                               std::vector<StateVector> codewords)
    : name_(std::move(name)),
      n_spins_(n_spins),
      max_errors_(max_errors),
      generators_(std::move(generators)),
      codewords_(std::move(codewords)) {
  const std::size_t rank = gf2_rank(generators_);
  if (rank != generators_.size()) throw ConfigError("code generators are not independent");
  n_logical_ = n_spins_ - rank;
  if (codewords_.size() != (std::size_t{1} << n_logical_)) {
    throw ConfigError("codeword count does not match 2^M");
  }
  bit_rate_ = static_cast<double>(n_logical_) / static_cast<double>(n_spins_);
  error_rate_ = static_cast<double>(max_errors_) / static_cast<double>(n_spins_);
  check_invariants();
}

void StabilizerCode::check_invariants() const {
  for (std::size_t a = 0; a < generators_.size(); ++a) {
    for (std::size_t b = a + 1; b < generators_.size(); ++b) {
      if (!generators_[a].commutes_with(generators_[b])) {
        throw ConfigError("code generators do not commute");
      }
    }
  }
  for (std::size_t i = 0; i < codewords_.size(); ++i) {
    if (codewords_[i].n_spins() != n_spins_) throw ConfigError("codeword size mismatch");
    for (const auto& g : generators_) {
      if (distance(apply_pauli_string(g, codewords_[i]), codewords_[i]) > kCodeTolerance) {
        throw NumericalError("codeword is not a +1 eigenstate of generator " + g.to_string());
      }
    }
    for (std::size_t j = 0; j <= i; ++j) {
      const Complex ov = inner_product(codewords_[j], codewords_[i]);
      const double expect = (i == j) ? 1.0 : 0.0;
      if (std::abs(ov - expect) > kCodeTolerance) throw NumericalError("codewords not orthonormal");
    }
  }
}

StabilizerCode builtin_code(std::string_view name) {
  std::vector<std::string_view> rows;
  std::string canonical;
  if (name == "five_qubit") {
    rows = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
    canonical = "five_qubit";
  } else if (name == "steane") {
    rows = {"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"};
    canonical = "steane";
  } else {
    throw ConfigError("unknown code '" + std::string(name) + "'");
  }
  std::vector<PauliString> gens;
  for (auto r : rows) gens.push_back(PauliString::from_letters(r));
  const std::size_t n = gens.front().n_spins();

  StateVector zero = StateVector::normalized(
      n, [&] {
        StateVector p = project_onto_code(gens, StateVector::basis_state(n, 0));
        return std::vector<Complex>(p.amplitudes().begin(), p.amplitudes().end());
      }());
  PauliString logical_x(n);
  for (std::size_t s = 0; s < n; ++s) logical_x.set(s, PauliLetter::X);
  StateVector one = apply_pauli_string(logical_x, zero);
  return StabilizerCode(canonical, n, 1, std::move(gens), {std::move(zero), std::move(one)});
}

StabilizerCode parse_code_text(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n_spins = 0;
  std::size_t max_errors = 1;
  std::vector<std::string> generator_lines;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (auto eq = line.find('='); eq != std::string::npos) {
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      std::size_t parsed = 0;
      try {
        std::size_t pos = 0;
        parsed = std::stoul(value, &pos);
        if (pos != value.size()) throw ConfigError("");
      } catch (const std::exception&) {
        throw ConfigError("code file: bad integer for '" + key + "'");
      }
      if (key == "n_spins") {
        n_spins = parsed;
      } else if (key == "max_errors") {
        max_errors = parsed;
      } else {
        throw ConfigError("code file: unknown key '" + key + "'");
      }
      continue;
    }
    generator_lines.push_back(line);
  }
  if (n_spins == 0) throw ConfigError("code file: missing n_spins");
  if (n_spins > 16) throw ConfigError("code file: n_spins too large for explicit codewords");
  std::vector<PauliString> gens;
  for (const auto& g : generator_lines) gens.push_back(PauliString::parse(g, n_spins));
  return StabilizerCode(std::move(name), n_spins, max_errors, std::move(gens));
}

StabilizerCode load_code_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open code file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_code_text(ss.str(), path);
}

StabilizerCode resolve_code(const std::string& name_or_path) {
  if (name_or_path == "five_qubit" || name_or_path == "steane") return builtin_code(name_or_path);
  return load_code_file(name_or_path);
}

NondegeneracyReport verify_nondegeneracy(const StabilizerCode& code, double threshold) {
  NondegeneracyReport report;
  report.threshold = threshold;
  const std::size_t w = std::min(code.n_spins(), 2 * code.max_errors());
  const auto strings = enumerate_error_strings(code.n_spins(), w);
  const auto& basis = code.codeword_basis();
  for (const auto& s : strings) {
    if (s.weight() == 0) continue;
    ++report.strings_checked;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const StateVector sj = apply_pauli_string(s, basis[j]);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const double v = std::abs(inner_product(basis[i], sj));
        if (v > report.max_violation) {
          report.max_violation = v;
          report.worst_string = s;
          report.worst_row = i;
          report.worst_column = j;
        }
      }
    }
  }
  report.passed = report.max_violation < threshold;
  return report;
}

StateVector encode_state(const StabilizerCode& code, std::span<const Complex> logical_amplitudes) {
  const auto& basis = code.codeword_basis();
  if (logical_amplitudes.size() != basis.size()) {
    throw ConfigError("logical amplitude count must be 2^M");
  }
  double nrm = 0.0;
  for (const auto& a : logical_amplitudes) nrm += std::norm(a);
  if (std::abs(std::sqrt(nrm) - 1.0) > 1e-10) throw ConfigError("logical amplitudes not normalized");
  std::vector<Complex> out(basis.front().dimension(), Complex{});
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += logical_amplitudes[k] * basis[k][i];
  }
  return StateVector::normalized(code.n_spins(), std::move(out));
}

// ---------------------------------------------------------------------------

ErrorBasis::ErrorBasis(const StateVector& psi0, std::vector<PauliString> strings)
    : strings_(std::move(strings)) {
  vectors_.reserve(strings_.size());
  for (const auto& s : strings_) vectors_.push_back(apply_pauli_string(s, psi0));
  for (std::size_t a = 0; a < vectors_.size(); ++a) {
    for (std::size_t b = a; b < vectors_.size(); ++b) {
      const Complex g = inner_product(vectors_[a], vectors_[b]);
      residual_ = std::max(residual_, std::abs(g - (a == b ? 1.0 : 0.0)));
    }
  }
  if (residual_ > kResidualLimit) {
    throw NumericalError("error basis is not orthonormal (residual " + std::to_string(residual_) +
                         "); the code is degenerate for these errors");
  }
}

std::vector<Complex> ErrorBasis::amplitudes(const StateVector& psi) const {
  std::vector<Complex> out;
  out.reserve(vectors_.size());
  for (const auto& v : vectors_) out.push_back(inner_product(v, psi));
  return out;
}

double ErrorBasis::fidelity(const StateVector& psi) const {
  double f = 0.0;
  for (const auto& v : vectors_) f += std::norm(inner_product(v, psi));
  return f;
}

StateVector ErrorBasis::project(const StateVector& psi) const {
  std::vector<Complex> out(psi.dimension(), Complex{});
  for (const auto& v : vectors_) {
    const Complex c = inner_product(v, psi);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * v[i];
  }
  return StateVector::unchecked(psi.n_spins(), std::move(out));
}

std::vector<PauliString> error_strings_for(const StabilizerCode& code,
                                           std::optional<SplitBudget> split) {
  return enumerate_error_strings(code.n_spins(), std::min(code.max_errors(), code.n_spins()), split);
}

double error_space_fidelity(const StabilizerCode& code, const StateVector& psi0,
                            const StateVector& psi_t, std::optional<SplitBudget> split) {
  return ErrorBasis(psi0, error_strings_for(code, split)).fidelity(psi_t);
}

// ---------------------------------------------------------------------------

ReferenceCodeEvaluator::ReferenceCodeEvaluator(const SpectralPropagator& propagator,
                                               std::vector<PauliString> strings, double undo_b0)
    : strings_(std::move(strings)),
      energies_(propagator.energies()),
      undo_b0_(undo_b0),
      n_spins_(propagator.n_spins()) {
  static constexpr Complex kQuarterTurns[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const RowMajor v = propagator.eigenvectors();
  const auto dim = static_cast<std::size_t>(v.rows());
  const std::size_t sectors = n_spins_ + 1;
  // Real/imag accumulators per sector, interleaved like std::complex.
  std::vector<double> acc(sectors * dim * 2);
  sector_terms_.reserve(strings_.size());
  for (const auto& s : strings_) {
    if (s.n_spins() != n_spins_) throw ConfigError("string size does not match propagator");
    std::fill(acc.begin(), acc.end(), 0.0);
    const std::uint64_t x = s.x_mask();
    const std::uint64_t z = s.z_mask();
    for (std::size_t j = 0; j < dim; ++j) {
      const double sign = (std::popcount(j & z) & 1) ? -1.0 : 1.0;
      const auto* a = reinterpret_cast<const double*>(v.data() + (j ^ x) * dim);
      const auto* b = reinterpret_cast<const double*>(v.data() + j * dim);
      double* out = acc.data() + static_cast<std::size_t>(std::popcount(j)) * dim * 2;
      for (std::size_t k = 0; k < dim; ++k) {
        const double ar = a[2 * k], ai = a[2 * k + 1], br = b[2 * k], bi = b[2 * k + 1];
        out[2 * k] += sign * (ar * br + ai * bi);
        out[2 * k + 1] += sign * (ar * bi - ai * br);
      }
    }
    const Complex base = kQuarterTurns[(s.phase() + std::popcount(x & z)) % 4];
    Eigen::MatrixXcd terms(static_cast<Eigen::Index>(sectors), static_cast<Eigen::Index>(dim));
    for (std::size_t m = 0; m < sectors; ++m) {
      for (std::size_t k = 0; k < dim; ++k) {
        const std::size_t i = (m * dim + k) * 2;
        terms(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)) = base * Complex{acc[i], acc[i + 1]};
      }
    }
    sector_terms_.push_back(std::move(terms));
  }
}

std::vector<double> ReferenceCodeEvaluator::weights(double t) const {
  const auto dim = energies_.size();
  const auto sectors = static_cast<Eigen::Index>(n_spins_ + 1);
  Eigen::VectorXcd spectral(dim);
  for (Eigen::Index k = 0; k < dim; ++k) spectral[k] = std::polar(1.0, -energies_[k] * t);
  Eigen::VectorXcd sector_phase(sectors);
  for (Eigen::Index m = 0; m < sectors; ++m) {
    sector_phase[m] =
        std::polar(1.0, undo_b0_ * t * (static_cast<double>(n_spins_) - 2.0 * static_cast<double>(m)));
  }
  const double inv_dim = 1.0 / static_cast<double>(dim);
  std::vector<double> out;
  out.reserve(strings_.size());
  for (const auto& terms : sector_terms_) {
    const Eigen::VectorXcd per_sector = terms * spectral;
    const Complex tr = (sector_phase.array() * per_sector.array()).sum();
    out.push_back(std::norm(tr * inv_dim));
  }
  return out;
}

double ReferenceCodeEvaluator::fidelity(double t) const {
  double f = 0.0;
  for (double w : weights(t)) f += w;
  return f;
}

}  // namespace qecc
