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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "qecc/diagnostics.hpp"
#include "qecc/error.hpp"
#include "qecc/propagator.hpp"

namespace qecc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(count);
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Neumaier-compensated sum, taken in index order.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      c_ += (sum_ - t) + v;
    } else {
      c_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + c_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

std::pair<double, double> mean_and_sem(const std::vector<std::vector<double>>& rows, std::size_t col) {
  const std::size_t n = rows.size();
  CompensatedSum s;
  for (const auto& r : rows) s.add(r[col]);
  const double mean = s.value() / static_cast<double>(n);
  if (n < 2) return {mean, 0.0};
  CompensatedSum v;
  for (const auto& r : rows) {
    const double d = r[col] - mean;
    v.add(d * d);
  }
  const double var = v.value() / static_cast<double>(n - 1);
  return {mean, std::sqrt(var / static_cast<double>(n))};
}

struct Measurement {
  std::vector<double> fidelity;
  std::vector<double> overlap;
};

// Everything that is shared by all realizations of one run.
struct Setup {
  RunConfig config;
  LatticeSpec lattice;
  std::vector<double> grid;
  std::optional<StabilizerCode> code;
  std::optional<StateVector> psi0;
  std::optional<ErrorBasis> basis;
  std::vector<PauliString> reference_strings;
};

Setup make_setup(const RunConfig& config) {
  config.disorder.validate();
  config.propagation.validate();
  if (config.n_realizations == 0) throw ConfigError("run.n_realizations must be >= 1");
  Setup s{config, resolve_lattice(config), config.time_grid(), std::nullopt, std::nullopt,
          std::nullopt, {}};
  if (config.toggling && !(config.disorder.b0 > 0.0)) {
    throw ConfigError("run.toggling needs disorder.b0 > 0");
  }
  if (config.uses_reference_code()) {
    if (config.disorder.correlation_time) {
      throw ConfigError("the reference code supports static disorder only");
    }
    if (s.lattice.n_spins > kMaxDenseDiagnosticSpins) {
      throw ConfigError("the reference code needs N <= " + std::to_string(kMaxDenseDiagnosticSpins));
    }
    if (config.reference_max_errors > s.lattice.n_spins) {
      throw ConfigError("code.max_errors exceeds N");
    }
    s.reference_strings =
        enumerate_error_strings(s.lattice.n_spins, config.reference_max_errors, config.split);
  } else {
    s.code = resolve_code(config.code);
    const auto amps = logical_amplitudes(config.logical, s.code->n_logical());
    s.psi0 = encode_state(*s.code, amps);
    s.basis.emplace(*s.psi0, error_strings_for(*s.code, config.split));
  }
  return s;
}

Measurement measure_static_code(const Setup& s, HamiltonianSample h) {
  Measurement m;
  const auto& cfg = s.config;
  const StateVector& psi0 = *s.psi0;
  const auto method = cfg.propagation.resolve(s.lattice.n_spins);
  std::optional<SpectralPropagator> spectral;
  std::optional<PauliSum> terms;
  if (method == PropagationMethod::kDenseEigen) {
    spectral.emplace(h, s.lattice);
  } else {
    terms.emplace(hamiltonian_terms(h, s.lattice));
  }
  StateVector lab = psi0;  // lab-frame state at time `now`
  double now = 0.0;
  for (double t : s.grid) {
    if (spectral) {
      lab = spectral->evolve(psi0, t);
    } else {
      lab = chebyshev_evolve(*terms, lab, t - now, cfg.propagation.tolerance, cfg.propagation.max_step);
    }
    now = t;
    if (std::abs(lab.norm() - 1.0) > std::max(cfg.propagation.tolerance, 1e-10)) {
      throw NumericalError("propagation norm drift exceeds tolerance");
    }
    const StateVector psi = cfg.toggling ? undo_uniform_field(lab, h.b0, t) : lab;
    m.fidelity.push_back(s.basis->fidelity(psi));
    m.overlap.push_back(std::norm(inner_product(psi0, psi)));
  }
  return m;
}

Measurement measure_trajectory_code(const Setup& s, std::uint64_t realization) {
  Measurement m;
  const auto& cfg = s.config;
  const StateVector& psi0 = *s.psi0;
  const double t_end = s.grid.back();
  std::vector<Segment> segments;
  if (t_end > 0.0) segments = sample_trajectory(s.lattice, cfg.disorder, t_end, realization);
  const bool dense = cfg.propagation.resolve(s.lattice.n_spins) == PropagationMethod::kDenseEigen;

  StateVector lab = psi0;
  double now = 0.0;
  std::size_t seg = 0;
  double used = 0.0;  // time already spent in segments[seg]
  std::optional<SpectralPropagator> spectral;
  std::optional<PauliSum> terms;
  auto prepare = [&](std::size_t k) {
    HamiltonianSample h = segments[k].hamiltonian;
    if (dense) {
      spectral.emplace(h, s.lattice);
    } else {
      terms.emplace(hamiltonian_terms(h, s.lattice));
    }
  };
  if (!segments.empty()) prepare(0);
  for (double t : s.grid) {
    while (now < t * (1.0 - 1e-13) && seg < segments.size()) {
      const double step = std::min(segments[seg].duration - used, t - now);
      if (step > 0.0) {
        lab = dense ? spectral->evolve(lab, step)
                    : chebyshev_evolve(*terms, lab, step, cfg.propagation.tolerance,
                                       cfg.propagation.max_step);
      }
      now += step;
      used += step;
      if (used >= segments[seg].duration * (1.0 - 1e-13)) {
        ++seg;
        used = 0.0;
        if (seg < segments.size()) prepare(seg);
      }
    }
    if (std::abs(lab.norm() - 1.0) > std::max(cfg.propagation.tolerance, 1e-10)) {
      throw NumericalError("propagation norm drift exceeds tolerance");
    }
    const StateVector psi = cfg.toggling ? undo_uniform_field(lab, cfg.disorder.b0, t) : lab;
    m.fidelity.push_back(s.basis->fidelity(psi));
    m.overlap.push_back(std::norm(inner_product(psi0, psi)));
  }
  return m;
}

Measurement measure_reference(const Setup& s, const HamiltonianSample& h) {
  Measurement m;
  const SpectralPropagator spectral(h, s.lattice);
  const ReferenceCodeEvaluator eval(spectral, s.reference_strings,
                                    s.config.toggling ? h.b0 : 0.0);
  for (double t : s.grid) {
    const auto w = eval.weights(t);
    CompensatedSum f;
    for (double x : w) f.add(x);
    m.fidelity.push_back(f.value());
    m.overlap.push_back(w.front());  // identity string comes first
  }
  return m;
}

Measurement measure(const Setup& s, std::uint64_t realization) {
  if (s.config.disorder.correlation_time) return measure_trajectory_code(s, realization);
  HamiltonianSample h = sample_hamiltonian(s.lattice, s.config.disorder, realization);
  if (s.code) return measure_static_code(s, std::move(h));
  return measure_reference(s, h);
}

std::string csv_header_block(const std::string& command,
                             const std::vector<std::pair<std::string, std::string>>& metadata) {
  std::string out = "# qecc " + command + "\n# version = " + kVersion + "\n";
  for (const auto& [k, v] : metadata) out += "# " + k + " = " + v + "\n";
  return out;
}

std::vector<std::pair<std::string, std::string>> config_metadata(const RunConfig& c) {
  return c.echo();
}

std::string summarize_curve(const FidelityCurve& curve) {
  std::ostringstream out;
  const auto half = curve.half_fidelity_time();
  out << "realizations: " << curve.n_realizations << "\n";
  out << "N = " << curve.theory.n_spins << ", d = " << curve.theory.degree
      << ", K = " << curve.theory.max_errors() << ", kappa = " << format_double(curve.theory.kappa)
      << "\n";
  out << "predicted t_R = " << format_double(curve.t_r) << ", delta_t = "
      << format_double(curve.delta_t) << "\n";
  out << "measured half-fidelity time = " << (half ? format_double(*half) : std::string("not reached"))
      << "\n";
  std::size_t below = 0;
  for (std::size_t i = 0; i < curve.times.size(); ++i) {
    if (curve.mean_f[i] < curve.f1_exact[i] - 3.0 * curve.sem_f[i]) ++below;
  }
  out << "grid points with mean F < F1 - 3 SEM: " << below << " of " << curve.times.size() << "\n";
  return out.str();
}

}  // namespace

std::size_t worker_count() {
  if (const char* env = std::getenv("QECC_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::optional<double> FidelityCurve::half_fidelity_time() const {
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (mean_f[i - 1] >= 0.5 && mean_f[i] < 0.5) {
      const double frac = (mean_f[i - 1] - 0.5) / (mean_f[i - 1] - mean_f[i]);
      return times[i - 1] + frac * (times[i] - times[i - 1]);
    }
  }
  return std::nullopt;
}

LatticeSpec resolve_lattice(const RunConfig& config) {
  std::size_t n = config.n_spins;
  if (!config.uses_reference_code()) {
    if (config.code == "five_qubit" || config.code == "steane") {
      const std::size_t code_n = config.code == "five_qubit" ? 5 : 7;
      if (n != 0 && n != code_n) throw ConfigError("lattice.n_spins does not match the code");
      n = code_n;
    } else if (n == 0) {
      n = resolve_code(config.code).n_spins();
    }
  }
  if (n == 0) throw ConfigError("lattice.n_spins is required");
  if (config.topology == "custom") return build_custom_lattice(n, config.edges);
  return build_ring(n);
}

std::vector<Complex> logical_amplitudes(const std::string& spec, std::size_t n_logical) {
  const std::size_t dim = std::size_t{1} << n_logical;
  std::vector<Complex> a(dim, Complex{});
  if (spec.rfind("basis:", 0) == 0) {
    std::size_t k = 0;
    try {
      k = std::stoul(spec.substr(6));
    } catch (const std::exception&) {
      throw ConfigError("bad logical state '" + spec + "'");
    }
    if (k >= dim) throw ConfigError("logical basis index out of range");
    a[k] = 1.0;
    return a;
  }
  if (n_logical != 1) throw ConfigError("named logical states need M = 1; use basis:<k>");
  if (spec == "zero") {
    a[0] = 1.0;
  } else if (spec == "one") {
    a[1] = 1.0;
  } else if (spec == "plus") {
    a[0] = kInvSqrt2;
    a[1] = kInvSqrt2;
  } else if (spec == "minus") {
    a[0] = kInvSqrt2;
    a[1] = -kInvSqrt2;
  } else if (spec == "plus_i") {
    a[0] = kInvSqrt2;
    a[1] = Complex(0.0, kInvSqrt2);
  } else {
    throw ConfigError("unknown logical state '" + spec + "'");
  }
  return a;
}

TheoryParams matched_theory(const RunConfig& config, const LatticeSpec& lattice) {
  std::size_t k = config.reference_max_errors;
  if (!config.uses_reference_code()) k = resolve_code(config.code).max_errors();
  if (config.split) k = config.split->k_par + config.split->k_perp;
  double b2 = config.disorder.b2;
  double j2 = config.disorder.j2;
  if (config.toggling) {
    const auto eff = effective_variances(b2, j2);
    b2 = eff.b2;
    j2 = eff.j2;
  }
  TheoryParams p = TheoryParams::from_budget(lattice.n_spins, lattice.degree, std::max<std::size_t>(k, 1), b2, j2);
  if (k == 0) p.kappa = 1e-300;  // K = 0 still evaluates the p = 0 term only
  if (config.disorder.correlation_time) {
    p.b0_corr = b2 * *config.disorder.correlation_time;
    p.j0_corr = j2 * *config.disorder.correlation_time;
  }
  return p;
}

FidelityCurve run_simulation(const RunConfig& config) {
  const Setup setup = make_setup(config);
  const std::size_t n_real = config.n_realizations;
  std::vector<Measurement> results(n_real);
  parallel_for(n_real, [&](std::size_t r) { results[r] = measure(setup, r); });

  FidelityCurve curve;
  curve.times = setup.grid;
  curve.n_realizations = n_real;
  curve.samples.reserve(n_real);
  std::vector<std::vector<double>> overlaps;
  overlaps.reserve(n_real);
  for (auto& m : results) {
    curve.samples.push_back(std::move(m.fidelity));
    overlaps.push_back(std::move(m.overlap));
  }
  curve.theory = matched_theory(config, setup.lattice);
  curve.time_dependent = config.disorder.correlation_time.has_value();
  const TheoryParams& p = curve.theory;
  const double u2_rate =
      curve.time_dependent ? *p.b0_corr + 2.0 * static_cast<double>(p.degree) * *p.j0_corr : 0.0;
  for (std::size_t i = 0; i < curve.times.size(); ++i) {
    const double t = curve.times[i];
    const auto [mf, sf] = mean_and_sem(curve.samples, i);
    const auto [mo, so] = mean_and_sem(overlaps, i);
    curve.mean_f.push_back(mf);
    curve.sem_f.push_back(sf);
    curve.mean_overlap.push_back(mo);
    curve.sem_overlap.push_back(so);
    if (curve.time_dependent) {
      const ErfBound e = f1_time_dependent(p, t);
      curve.f1_exact.push_back(f1_time_dependent_exact_sum(p, t));
      curve.f1_erf.push_back(e.fidelity);
      curve.x0_sq.push_back(std::exp(-static_cast<double>(p.n_spins) * u2_rate * t));
      curve.t_r = e.t_r;
      curve.delta_t = e.delta_t;
    } else {
      const ErfBound e = f1_erf(p, t);
      curve.f1_exact.push_back(f1_exact_sum(p, t));
      curve.f1_erf.push_back(e.fidelity);
      curve.x0_sq.push_back(overlap_x0_squared(p, t));
      curve.t_r = e.t_r;
      curve.delta_t = e.delta_t;
    }
  }
  curve.metadata = config_metadata(config);
  curve.metadata.emplace_back("derived.n_spins", std::to_string(setup.lattice.n_spins));
  curve.metadata.emplace_back("derived.degree", std::to_string(setup.lattice.degree));
  curve.metadata.emplace_back("derived.max_errors", std::to_string(p.max_errors()));
  curve.metadata.emplace_back("derived.kappa", format_double(p.kappa));
  curve.metadata.emplace_back("derived.theory_b2", format_double(p.b2));
  curve.metadata.emplace_back("derived.theory_j2", format_double(p.j2));
  curve.metadata.emplace_back("derived.t_R", format_double(curve.t_r));
  curve.metadata.emplace_back("derived.delta_t", format_double(curve.delta_t));
  const auto half = curve.half_fidelity_time();
  curve.metadata.emplace_back("derived.half_fidelity_time", half ? format_double(*half) : "none");
  return curve;
}

std::string format_curve_csv(const FidelityCurve& curve, const std::string& command) {
  std::string out = csv_header_block(command, curve.metadata);
  out += "t,mean_F,sem_F,mean_overlap,sem_overlap,f1_exact,f1_erf,x0_sq\n";
  for (std::size_t i = 0; i < curve.times.size(); ++i) {
    out += format_double(curve.times[i]) + ',' + format_double(curve.mean_f[i]) + ',' +
           format_double(curve.sem_f[i]) + ',' + format_double(curve.mean_overlap[i]) + ',' +
           format_double(curve.sem_overlap[i]) + ',' + format_double(curve.f1_exact[i]) + ',' +
           format_double(curve.f1_erf[i]) + ',' + format_double(curve.x0_sq[i]) + '\n';
  }
  return out;
}

RunOutput run_simulate_command(const RunConfig& config) {
  const FidelityCurve curve = run_simulation(config);
  return {format_curve_csv(curve, "simulate"), summarize_curve(curve), true};
}

RunOutput run_sweep(const RunConfig& config) {
  if (config.sweep_axis.empty()) throw ConfigError("sweep.axis is required");
  if (config.sweep_values.empty()) throw ConfigError("sweep.values is empty");
  std::string body = "sweep_index,axis_value,t,mean_F,sem_F,mean_overlap,sem_overlap,f1_exact,f1_erf,"
                     "x0_sq,half_fidelity_time,t_R,delta_t\n";
  std::ostringstream summary;
  summary << "sweep over " << config.sweep_axis << "\n";
  for (std::size_t k = 0; k < config.sweep_values.size(); ++k) {
    const double v = config.sweep_values[k];
    RunConfig c = config;
    const std::string& axis = config.sweep_axis;
    if (axis == "N") {
      if (v < 2 || v != std::floor(v)) throw ConfigError("sweep N values must be integers >= 2");
      if (!config.uses_reference_code()) throw ConfigError("an N sweep needs code.name = reference");
      c.n_spins = static_cast<std::size_t>(v);
      if (config.kappa) {
        c.reference_max_errors = static_cast<std::size_t>(std::floor(*config.kappa * v * (1.0 + 1e-12)));
      }
    } else if (axis == "J/B") {
      if (!(v >= 0.0)) throw ConfigError("sweep J/B values must be >= 0");
      const double d = static_cast<double>(resolve_lattice(config).degree);
      const double u2 = config.disorder.b2 + 2.0 * d * config.disorder.j2;
      c.disorder.b2 = u2 / (1.0 + 2.0 * d * v * v);
      c.disorder.j2 = v * v * c.disorder.b2;
    } else if (axis == "kappa") {
      if (!(v > 0.0 && v <= 1.0)) throw ConfigError("sweep kappa values must be in (0, 1]");
      const std::size_t n = resolve_lattice(config).n_spins;
      c.reference_max_errors = static_cast<std::size_t>(std::floor(v * static_cast<double>(n) * (1.0 + 1e-12)));
    } else if (axis == "B0") {
      c.disorder.b0 = v;
    } else if (axis == "tau") {
      if (!(v > 0.0)) throw ConfigError("sweep tau values must be > 0");
      c.disorder.correlation_time = v;
    } else {
      throw ConfigError("unknown sweep axis '" + axis + "'");
    }
    const FidelityCurve curve = run_simulation(c);
    const auto half = curve.half_fidelity_time();
    const std::string half_text = half ? format_double(*half) : "nan";
    for (std::size_t i = 0; i < curve.times.size(); ++i) {
      body += std::to_string(k) + ',' + format_double(v) + ',' + format_double(curve.times[i]) + ',' +
              format_double(curve.mean_f[i]) + ',' + format_double(curve.sem_f[i]) + ',' +
              format_double(curve.mean_overlap[i]) + ',' + format_double(curve.sem_overlap[i]) + ',' +
              format_double(curve.f1_exact[i]) + ',' + format_double(curve.f1_erf[i]) + ',' +
              format_double(curve.x0_sq[i]) + ',' + half_text + ',' + format_double(curve.t_r) + ',' +
              format_double(curve.delta_t) + '\n';
    }
    summary << config.sweep_axis << " = " << format_double(v) << ": half-fidelity time "
            << (half ? format_double(*half) : std::string("not reached")) << ", predicted t_R "
            << format_double(curve.t_r) << " +/- " << format_double(curve.delta_t) << "\n";
  }
  return {csv_header_block("sweep", config_metadata(config)) + body, summary.str(), true};
}

RunOutput run_theory(const RunConfig& config) {
  TheoryParams p;
  LatticeSpec lattice;
  const bool need_lattice = !config.theory_n_spins || !config.theory_degree;
  if (need_lattice) lattice = resolve_lattice(config);
  p.n_spins = config.theory_n_spins ? *config.theory_n_spins : lattice.n_spins;
  p.degree = config.theory_degree ? *config.theory_degree : lattice.degree;
  double b2 = config.disorder.b2;
  double j2 = config.disorder.j2;
  if (config.toggling) {
    const auto eff = effective_variances(b2, j2);
    b2 = eff.b2;
    j2 = eff.j2;
  }
  p.b2 = b2;
  p.j2 = j2;
  if (config.kappa) {
    p.kappa = *config.kappa;
  } else {
    const std::size_t k = config.uses_reference_code() ? config.reference_max_errors
                                                       : resolve_code(config.code).max_errors();
    p.kappa = static_cast<double>(k) / static_cast<double>(p.n_spins);
  }
  if (config.disorder.correlation_time) {
    p.b0_corr = b2 * *config.disorder.correlation_time;
    p.j0_corr = j2 * *config.disorder.correlation_time;
  }
  p.validate();
  const auto grid = config.time_grid();
  const bool td = config.disorder.correlation_time.has_value();

  auto meta = config_metadata(config);
  meta.emplace_back("derived.n_spins", std::to_string(p.n_spins));
  meta.emplace_back("derived.degree", std::to_string(p.degree));
  meta.emplace_back("derived.max_errors", std::to_string(p.max_errors()));
  meta.emplace_back("derived.u", format_double(p.u()));
  std::string out = csv_header_block("theory", meta);
  out += "t,f1_exact,f1_erf,x0_sq,t_R,delta_t\n";
  ErfBound last{};
  for (double t : grid) {
    const ErfBound e = td ? f1_time_dependent(p, t) : f1_erf(p, t);
    const double exact = td ? f1_time_dependent_exact_sum(p, t) : f1_exact_sum(p, t);
    const double x0 = td ? std::exp(-static_cast<double>(p.n_spins) *
                                    (*p.b0_corr + 2.0 * static_cast<double>(p.degree) * *p.j0_corr) * t)
                         : overlap_x0_squared(p, t);
    out += format_double(t) + ',' + format_double(exact) + ',' + format_double(e.fidelity) + ',' +
           format_double(x0) + ',' + format_double(e.t_r) + ',' + format_double(e.delta_t) + '\n';
    last = e;
  }
  std::ostringstream summary;
  summary << "N = " << p.n_spins << ", d = " << p.degree << ", K = " << p.max_errors()
          << ", kappa = " << format_double(p.kappa) << ", U = " << format_double(p.u()) << "\n";
  summary << "t_R = " << format_double(last.t_r) << ", delta_t = " << format_double(last.delta_t) << "\n";
  const ValidityFlags v = validity(p, grid.back());
  summary << "validity: short_time(U t_max <= 0.5) = " << (v.short_time ? "yes" : "no")
          << ", few_errors(kappa <= 0.1) = " << (v.few_errors ? "yes" : "no")
          << ", large_budget(K >= 10) = " << (v.large_budget ? "yes" : "no") << "\n";
  return {out, summary.str(), true};
}

RunOutput run_verify_code(const std::string& name_or_path) {
  const StabilizerCode code = resolve_code(name_or_path);
  const NondegeneracyReport r = verify_nondegeneracy(code);
  std::vector<std::pair<std::string, std::string>> meta{{"code", code.name()}};
  std::string out = csv_header_block("verify-code", meta);
  out += "code,n_spins,n_logical,max_errors,bit_rate,error_rate,strings_checked,max_violation,worst_string,passed\n";
  out += code.name() + ',' + std::to_string(code.n_spins()) + ',' + std::to_string(code.n_logical()) + ',' +
         std::to_string(code.max_errors()) + ',' + format_double(code.bit_rate()) + ',' +
         format_double(code.error_rate()) + ',' + std::to_string(r.strings_checked) + ',' +
         format_double(r.max_violation) + ',' + (r.worst_string ? r.worst_string->to_string() : "") +
         ',' + (r.passed ? "true" : "false") + '\n';
  std::ostringstream summary;
  summary << code.name() << ": [[" << code.n_spins() << "," << code.n_logical() << "]], K = "
          << code.max_errors() << "\n";
  summary << "checked " << r.strings_checked << " strings of weight 1.." << 2 * code.max_errors()
          << ", max |<c_i|s|c_j>| = " << format_double(r.max_violation) << "\n";
  if (!r.passed && r.worst_string) {
    summary << "worst: " << r.worst_string->to_string() << " between codewords " << r.worst_row
            << " and " << r.worst_column << "\n";
  }
  summary << (r.passed ? "PASS" : "FAIL") << "\n";
  return {out, summary.str(), r.passed};
}

RunOutput run_chaos(const RunConfig& config) {
  config.disorder.validate();
  if (config.n_realizations == 0) throw ConfigError("run.n_realizations must be >= 1");
  const LatticeSpec lattice = resolve_lattice(config);
  std::vector<std::vector<double>> ratios(config.n_realizations);
  parallel_for(config.n_realizations, [&](std::size_t r) {
    ratios[r] = participation_ratio(sample_hamiltonian(lattice, config.disorder, r), lattice);
  });
  std::string out = csv_header_block("chaos", config_metadata(config));
  out += "realization,eigenindex,participation_ratio\n";
  std::vector<double> medians;
  for (std::size_t r = 0; r < ratios.size(); ++r) {
    for (std::size_t k = 0; k < ratios[r].size(); ++k) {
      out += std::to_string(r) + ',' + std::to_string(k) + ',' + format_double(ratios[r][k]) + '\n';
    }
    std::vector<double> sorted = ratios[r];
    std::sort(sorted.begin(), sorted.end());
    medians.push_back(sorted[sorted.size() / 2]);
  }
  std::sort(medians.begin(), medians.end());
  std::ostringstream summary;
  summary << "N = " << lattice.n_spins << ", dimension = " << (std::size_t{1} << lattice.n_spins)
          << ", realizations = " << ratios.size() << "\n";
  summary << "median over realizations of the median participation ratio = "
          << format_double(medians[medians.size() / 2]) << "\n";
  return {out, summary.str(), true};
}

RunOutput run_census(const RunConfig& config) {
  RunConfig c = config;
  c.split.reset();
  const Setup base = make_setup(c);
  const double t = config.census_time;
  if (t < 0.0) throw ConfigError("census.time must be >= 0");
  const SplitBudget budget{config.census_max_z, config.census_max_xy};

  std::vector<PauliString> strings;
  std::optional<ErrorBasis> basis;
  if (base.code) {
    basis.emplace(*base.psi0, error_strings_for(*base.code, budget));
  } else {
    strings = enumerate_error_strings(base.lattice.n_spins, 0, budget);
  }
  const std::size_t n_real = config.n_realizations;
  std::vector<CensusReport> reports(n_real);
  parallel_for(n_real, [&](std::size_t r) {
    if (base.config.disorder.correlation_time) {
      throw ConfigError("census supports static disorder only");
    }
    const HamiltonianSample h = sample_hamiltonian(base.lattice, base.config.disorder, r);
    if (basis) {
      StateVector psi = evolve(h, base.lattice, *base.psi0, t, base.config.propagation);
      if (base.config.toggling) psi = undo_uniform_field(psi, h.b0, t);
      reports[r] = error_census(*basis, psi);
    } else {
      const SpectralPropagator spectral(h, base.lattice);
      const ReferenceCodeEvaluator eval(spectral, strings, base.config.toggling ? h.b0 : 0.0);
      reports[r] = error_census(eval, t);
    }
  });
  std::map<ErrorClass, std::vector<std::vector<double>>> per_class;
  for (const auto& rep : reports) {
    for (const auto& [k, w] : rep.weights) per_class[k].push_back({w});
  }
  std::string out = csv_header_block("census", config_metadata(config));
  out += "z_count,xy_count,weight,sem\n";
  std::ostringstream summary;
  double phase = 0.0;
  double flips = 0.0;
  double odd = 0.0;
  for (const auto& [k, rows] : per_class) {
    const auto [m, s] = mean_and_sem(rows, 0);
    out += std::to_string(k.first) + ',' + std::to_string(k.second) + ',' + format_double(m) + ',' +
           format_double(s) + '\n';
    if (k.second == 0 && k.first > 0) phase += m;
    if (k.second > 0) flips += m;
    if (k.second % 2 == 1) odd += m;
  }
  summary << "t = " << format_double(t) << ", realizations = " << n_real << "\n";
  summary << "phase-only weight = " << format_double(phase) << ", flip-containing weight = "
          << format_double(flips) << ", odd-flip weight = " << format_double(odd) << "\n";
  return {out, summary.str(), true};
}

RunOutput run_command(const std::string& command, const RunConfig& config) {
  if (command == "theory") return run_theory(config);
  if (command == "simulate") return run_simulate_command(config);
  if (command == "sweep") return run_sweep(config);
  if (command == "verify-code") return run_verify_code(config.code);
  if (command == "chaos") return run_chaos(config);
  if (command == "census") return run_census(config);
  throw ConfigError("unknown command '" + command + "'");
}

}  // namespace qecc
