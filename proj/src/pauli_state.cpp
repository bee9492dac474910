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

#include "qecc/pauli_state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "qecc/error.hpp"

namespace qecc {

namespace {

constexpr Complex kQuarterTurns[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int popcount(std::uint64_t v) { return std::popcount(v); }

void check_spins(std::size_t n) {
  if (n == 0 || n > kMaxSpins) {
    throw ConfigError("number of spins must be in [1, " + std::to_string(kMaxSpins) + "]");
  }
}

}  // namespace

PauliString::PauliString(std::size_t n_spins) : n_spins_(n_spins) {
  if (n_spins > 64) throw ConfigError("Pauli strings support at most 64 sites");
}

Complex PauliString::phase_value() const { return kQuarterTurns[phase_]; }

PauliLetter PauliString::letter(std::size_t site) const {
  const unsigned x = (x_ >> site) & 1u;
  const unsigned z = (z_ >> site) & 1u;
  return static_cast<PauliLetter>(x | (z << 1));
}

void PauliString::set(std::size_t site, PauliLetter p) {
  if (site >= n_spins_) throw ConfigError("Pauli site index out of range");
  const std::uint64_t bit = std::uint64_t{1} << site;
  const auto v = static_cast<unsigned>(p);
  x_ = (v & 1u) ? (x_ | bit) : (x_ & ~bit);
  z_ = (v & 2u) ? (z_ | bit) : (z_ & ~bit);
}

PauliString PauliString::with_phase(unsigned quarter_turns) const {
  PauliString out = *this;
  out.phase_ = quarter_turns % 4;
  return out;
}

std::size_t PauliString::weight() const { return popcount(x_ | z_); }
std::size_t PauliString::z_count() const { return popcount(z_ & ~x_); }
std::size_t PauliString::xy_count() const { return popcount(x_); }

PauliString PauliString::operator*(const PauliString& rhs) const {
  if (n_spins_ != rhs.n_spins_) throw ConfigError("Pauli string size mismatch");
  // Each letter is i^{xz} X^x Z^z; moving Z^{z1} past X^{x2} costs (-1)^{z1 x2}.
  PauliString out(n_spins_);
  out.x_ = x_ ^ rhs.x_;
  out.z_ = z_ ^ rhs.z_;
  const int turns = static_cast<int>(phase_ + rhs.phase_) + popcount(x_ & z_) +
                    popcount(rhs.x_ & rhs.z_) + 2 * popcount(z_ & rhs.x_) -
                    popcount(out.x_ & out.z_);
  out.phase_ = static_cast<unsigned>(((turns % 4) + 4) % 4);
  return out;
}

bool PauliString::commutes_with(const PauliString& rhs) const {
  return (popcount(x_ & rhs.z_) + popcount(z_ & rhs.x_)) % 2 == 0;
}

std::string PauliString::to_string() const {
  std::string out;
  static constexpr const char* kPhaseTokens[4] = {"", "i ", "- ", "-i "};
  out += kPhaseTokens[phase_];
  bool any = false;
  for (std::size_t n = 0; n < n_spins_; ++n) {
    const PauliLetter p = letter(n);
    if (p == PauliLetter::I) continue;
    if (any) out += ' ';
    out += "IXZY"[static_cast<unsigned>(p)];
    out += std::to_string(n);
    any = true;
  }
  if (!any) out += 'I';
  return out;
}

PauliString PauliString::parse(std::string_view text, std::size_t n_spins) {
  PauliString out(n_spins);
  std::istringstream in{std::string(text)};
  std::string tok;
  bool first = true;
  bool saw_identity = false;
  std::uint64_t used = 0;
  while (in >> tok) {
    if (first) {
      first = false;
      if (tok == "+") continue;
      if (tok == "-") { out.phase_ = 2; continue; }
      if (tok == "i" || tok == "+i") { out.phase_ = 1; continue; }
      if (tok == "-i") { out.phase_ = 3; continue; }
    }
    if (tok == "I") {
      saw_identity = true;
      continue;
    }
    if (tok.size() < 2) throw ConfigError("bad Pauli token '" + tok + "'");
    PauliLetter p;
    switch (tok[0]) {
      case 'X': p = PauliLetter::X; break;
      case 'Y': p = PauliLetter::Y; break;
      case 'Z': p = PauliLetter::Z; break;
      default: throw ConfigError("bad Pauli letter in '" + tok + "'");
    }
    std::size_t site = 0;
    for (std::size_t k = 1; k < tok.size(); ++k) {
      if (tok[k] < '0' || tok[k] > '9') throw ConfigError("bad site index in '" + tok + "'");
      site = site * 10 + static_cast<std::size_t>(tok[k] - '0');
    }
    if (site >= n_spins) throw ConfigError("site index out of range in '" + tok + "'");
    if ((used >> site) & 1u) throw ConfigError("site repeated in Pauli string");
    used |= std::uint64_t{1} << site;
    out.set(site, p);
  }
  if (saw_identity && used != 0) throw ConfigError("'I' mixed with non-identity letters");
  if (first) throw ConfigError("empty Pauli string");
  return out;
}

PauliString PauliString::from_letters(std::string_view letters) {
  PauliString out(letters.size());
  for (std::size_t n = 0; n < letters.size(); ++n) {
    switch (letters[n]) {
      case 'I': break;
      case 'X': out.set(n, PauliLetter::X); break;
      case 'Y': out.set(n, PauliLetter::Y); break;
      case 'Z': out.set(n, PauliLetter::Z); break;
      default: throw ConfigError("bad Pauli letter '" + std::string(1, letters[n]) + "'");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

StateVector StateVector::basis_state(std::size_t n_spins, std::uint64_t index) {
  check_spins(n_spins);
  const std::size_t dim = std::size_t{1} << n_spins;
  if (index >= dim) throw ConfigError("basis index out of range");
  std::vector<Complex> a(dim, Complex{});
  a[index] = 1.0;
  return StateVector(n_spins, std::move(a));
}

StateVector StateVector::from_amplitudes(std::size_t n_spins, std::vector<Complex> amplitudes) {
  StateVector out = unchecked(n_spins, std::move(amplitudes));
  if (std::abs(out.norm() - 1.0) > 1e-10) throw ConfigError("state vector is not normalized");
  return out;
}

StateVector StateVector::normalized(std::size_t n_spins, std::vector<Complex> amplitudes) {
  StateVector out = unchecked(n_spins, std::move(amplitudes));
  const double nrm = out.norm();
  if (!(nrm > 0.0) || !std::isfinite(nrm)) throw NumericalError("cannot normalize zero vector");
  for (auto& c : out.amps_) c /= nrm;
  return out;
}

StateVector StateVector::unchecked(std::size_t n_spins, std::vector<Complex> amplitudes) {
  check_spins(n_spins);
  if (amplitudes.size() != (std::size_t{1} << n_spins)) {
    throw ConfigError("amplitude count does not match 2^N");
  }
  return StateVector(n_spins, std::move(amplitudes));
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& c : amps_) s += std::norm(c);
  return std::sqrt(s);
}

StateVector apply_pauli_string(const PauliString& s, const StateVector& psi) {
  if (s.n_spins() != psi.n_spins()) throw ConfigError("Pauli string / state size mismatch");
  const std::uint64_t x = s.x_mask();
  const std::uint64_t z = s.z_mask();
  const Complex factor = kQuarterTurns[(s.phase() + popcount(x & z)) % 4];
  std::vector<Complex> out(psi.dimension());
  for (std::uint64_t i = 0; i < psi.dimension(); ++i) {
    const Complex v = factor * psi[i];
    out[i ^ x] = (popcount(i & z) & 1) ? -v : v;
  }
  return StateVector::unchecked(psi.n_spins(), std::move(out));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) throw ConfigError("inner product size mismatch");
  Complex s{};
  for (std::size_t i = 0; i < a.dimension(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double distance(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) throw ConfigError("distance size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

// ---------------------------------------------------------------------------

std::vector<PauliString> enumerate_error_strings(std::size_t n_spins, std::size_t max_weight,
                                                 std::optional<SplitBudget> split) {
  if (n_spins > 64) throw ConfigError("too many spins for string enumeration");
  std::size_t cap = max_weight;
  if (split) {
    cap = std::min(n_spins, split->k_par + split->k_perp);
  } else if (max_weight > n_spins) {
    throw ConfigError("max_weight exceeds number of spins");
  }

  std::vector<PauliString> out;
  static constexpr PauliLetter kLetters[3] = {PauliLetter::X, PauliLetter::Y, PauliLetter::Z};
  std::vector<std::size_t> support;
  std::vector<unsigned> letters;
  for (std::size_t w = 0; w <= cap; ++w) {
    // supports: increasing w-tuples of sites
    support.resize(w);
    for (std::size_t k = 0; k < w; ++k) support[k] = k;
    while (true) {
      letters.assign(w, 0);
      while (true) {
        PauliString s(n_spins);
        std::size_t nz = 0;
        for (std::size_t k = 0; k < w; ++k) {
          s.set(support[k], kLetters[letters[k]]);
          if (letters[k] == 2) ++nz;
        }
        if (!split || (nz <= split->k_par && w - nz <= split->k_perp)) out.push_back(s);
        std::size_t k = w;
        while (k > 0 && letters[k - 1] == 2) letters[--k] = 0;
        if (k == 0) break;
        ++letters[k - 1];
      }
      std::size_t k = w;
      while (k > 0 && support[k - 1] == n_spins - w + k - 1) --k;
      if (k == 0) break;
      ++support[k - 1];
      for (std::size_t m = k; m < w; ++m) support[m] = support[m - 1] + 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

void PauliSum::add(Complex coefficient, const PauliString& s) {
  if (s.n_spins() != n_spins_) throw ConfigError("Pauli sum size mismatch");
  if (coefficient == Complex{}) return;
  const Complex c = coefficient * kQuarterTurns[(s.phase() + popcount(s.x_mask() & s.z_mask())) % 4];
  auto it = std::find_if(groups_.begin(), groups_.end(),
                         [&](const Group& g) { return g.x_mask == s.x_mask(); });
  if (it == groups_.end()) {
    groups_.push_back({s.x_mask(), {}});
    it = std::prev(groups_.end());
  }
  for (auto& t : it->terms) {
    if (t.z_mask == s.z_mask()) {
      t.coefficient += c;
      return;
    }
  }
  it->terms.push_back({s.z_mask(), c});
}

std::size_t PauliSum::term_count() const {
  std::size_t n = 0;
  for (const auto& g : groups_) n += g.terms.size();
  return n;
}

StateVector PauliSum::apply(const StateVector& psi) const {
  if (psi.n_spins() != n_spins_) throw ConfigError("Hamiltonian / state size mismatch");
  const std::size_t dim = psi.dimension();
  std::vector<Complex> out(dim, Complex{});
  for (const auto& g : groups_) {
    for (std::uint64_t i = 0; i < dim; ++i) {
      Complex f{};
      for (const auto& t : g.terms) f += (popcount(i & t.z_mask) & 1) ? -t.coefficient : t.coefficient;
      out[i ^ g.x_mask] += f * psi[i];
    }
  }
  return StateVector::unchecked(n_spins_, std::move(out));
}

std::vector<Complex> PauliSum::to_dense() const {
  const std::size_t dim = std::size_t{1} << n_spins_;
  std::vector<Complex> m(dim * dim, Complex{});
  for (const auto& g : groups_) {
    for (std::uint64_t i = 0; i < dim; ++i) {
      Complex f{};
      for (const auto& t : g.terms) f += (popcount(i & t.z_mask) & 1) ? -t.coefficient : t.coefficient;
      m[(i ^ g.x_mask) * dim + i] += f;
    }
  }
  return m;
}

double PauliSum::norm_bound() const {
  double s = 0.0;
  for (const auto& g : groups_) {
    for (const auto& t : g.terms) s += std::abs(t.coefficient);
  }
  return s;
}

PauliSum hamiltonian_terms(const HamiltonianSample& h, const LatticeSpec& lattice) {
  if (h.fields.size() != lattice.n_spins || h.couplings.size() != lattice.edges.size()) {
    throw ConfigError("Hamiltonian sample does not match lattice");
  }
  static constexpr PauliLetter kAxes[3] = {PauliLetter::X, PauliLetter::Y, PauliLetter::Z};
  const std::size_t n = lattice.n_spins;
  PauliSum sum(n);
  for (std::size_t site = 0; site < n; ++site) {
    for (int a = 0; a < 3; ++a) {
      PauliString s(n);
      s.set(site, kAxes[a]);
      double c = h.fields[site][a];
      if (a == 2) c += h.b0;
      sum.add(c, s);
    }
  }
  for (std::size_t e = 0; e < lattice.edges.size(); ++e) {
    const auto [site_n, site_m] = lattice.edges[e];
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        PauliString s(n);
        s.set(site_n, kAxes[a]);
        s.set(site_m, kAxes[b]);
        sum.add(2.0 * h.couplings[e][a][b], s);
      }
    }
  }
  return sum;
}

StateVector apply_hamiltonian(const HamiltonianSample& h, const LatticeSpec& lattice,
                              const StateVector& psi) {
  return hamiltonian_terms(h, lattice).apply(psi);
}

}  // namespace qecc
