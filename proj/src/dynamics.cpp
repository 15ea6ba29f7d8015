// Copyright 2026 The bosonq Authors
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

#include "bosonq/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <type_traits>

#include <fmt/format.h>
#include <unsupported/Eigen/MatrixFunctions>

namespace bosonq {

namespace {

using Index = Eigen::Index;

/**
 * Dense pieces of the on-site Hamiltonian with the time dependence factored
 * out, so each step only recombines three matrices:
 *   H(t) = e^{-iω₀t} (D₀ + e^{2iωt} D₊ + e^{-2iωt} D₋) + h.c.
 */
class SiteGenerator {
 public:
  explicit SiteGenerator(const YukawaParams& p) : params_(p) {
    const SiteOperatorParts parts = site_operator_parts(p);
    diagonal_ = to_dense(parts.steady);
    create_ = to_dense(parts.pair_create);
    annihilate_ = to_dense(parts.pair_annihilate);
  }

  DenseMatrix hamiltonian(double time) const {
    const Complex kI{0.0, 1.0};
    const Complex pair = std::exp(2.0 * kI * params_.omega * time);
    const DenseMatrix half = std::exp(-kI * params_.omega0 * time) *
                             (diagonal_ + pair * create_ + std::conj(pair) * annihilate_);
    return half + half.adjoint();
  }

  DenseMatrix unitary(double time, double delta_t) const {
    const DenseMatrix generator = Complex{0.0, -delta_t} * hamiltonian(time);
    return generator.exp();
  }

 private:
  YukawaParams params_;
  DenseMatrix diagonal_;
  DenseMatrix create_;
  DenseMatrix annihilate_;
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& rng) {
  // 53 random mantissa bits; identical on every standard library.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename State>
Observables measure_with(const State& state, const DensityOperators& ops) {
  if constexpr (std::is_same_v<State, StateVector>) {
    const auto& amp = state.amplitudes();
    return {expectation(amp, ops.fermion).real(), -expectation(amp, ops.antifermion).real(),
            expectation(amp, ops.boson).real()};
  } else {
    return {mps_expectation(state, ops.fermion), -mps_expectation(state, ops.antifermion),
            mps_expectation(state, ops.boson)};
  }
}

template <typename State>
void apply_sites(State& state, const DenseMatrix& u, const SiteLayout& layout) {
  for (int x = 0; x < layout.n_sites(); ++x) {
    const std::vector<int> qubits = layout.site_qubits(x);
    state.apply_gate(u, qubits);
  }
}

template <typename State>
Trajectory run_trajectory(State state, const EvolutionConfig& config,
                          const YukawaParams& params, std::uint64_t sample) {
  const SiteGenerator generator(params);
  const SiteLayout layout(params);
  const DensityOperators ops = density_operators(params);
  std::mt19937_64 rng(derive_seed(config.seed, sample));

  Trajectory traj;
  traj.params = params;
  traj.config = config;
  traj.records.reserve(static_cast<std::size_t>(config.n_t) + 1);
  traj.records.push_back({0, 0.0, measure_with(state, ops)});

  for (int l = 0; l < config.n_t; ++l) {
    const double draw = config.policy == TPrimePolicy::random ? uniform01(rng) : 0.0;
    const double tp = t_prime(config.policy, l, config.delta_t, draw);
    apply_sites(state, generator.unitary(tp, config.delta_t), layout);

    const double drift = std::abs(state.norm() - 1.0);
    traj.max_norm_drift = std::max(traj.max_norm_drift, drift);
    if (drift > kNormTolerance) {
      throw std::runtime_error(
          fmt::format("norm drifted by {:.3e} at step {}", drift, l + 1));
    }
    traj.records.push_back({l + 1, (l + 1) * config.delta_t, measure_with(state, ops)});
  }
  if constexpr (std::is_same_v<State, MpsState>) traj.mps_report = state.report();
  return traj;
}

Trajectory run_one(const EvolutionConfig& config, const YukawaParams& params,
                   std::uint64_t sample) {
  if (config.backend == Backend::mps) {
    return run_trajectory(initial_mps(config, params), config, params, sample);
  }
  return run_trajectory(initial_state_vector(config, params), config, params, sample);
}

Stats summarize(const std::vector<double>& xs) {
  Stats s;
  const double n = static_cast<double>(xs.size());
  s.min = *std::min_element(xs.begin(), xs.end());
  s.max = *std::max_element(xs.begin(), xs.end());
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = std::clamp(sum / n, s.min, s.max);
  double sq = 0.0;
  for (double x : xs) sq += (x - s.mean) * (x - s.mean);
  s.std = std::sqrt(sq / n);
  return s;
}

}  // namespace

std::string to_string(TPrimePolicy p) {
  switch (p) {
    case TPrimePolicy::left: return "left";
    case TPrimePolicy::midpoint: return "midpoint";
    case TPrimePolicy::random: return "random";
  }
  return "?";
}

std::string to_string(Backend b) {
  return b == Backend::mps ? "mps" : "statevector";
}

TPrimePolicy parse_policy(std::string_view s) {
  if (s == "left") return TPrimePolicy::left;
  if (s == "midpoint") return TPrimePolicy::midpoint;
  if (s == "random") return TPrimePolicy::random;
  throw std::invalid_argument(fmt::format("policy: unknown t' policy '{}'", s));
}

Backend parse_backend(std::string_view s) {
  if (s == "statevector") return Backend::statevector;
  if (s == "mps") return Backend::mps;
  throw std::invalid_argument(fmt::format("backend: unknown backend '{}'", s));
}

std::string InitialState::to_string() const {
  switch (kind) {
    case Kind::fermion_pair: return "fermion_pair";
    case Kind::bosons: return fmt::format("bosons:{}", bosons);
    case Kind::custom: return "bits:" + bits;
  }
  return "?";
}

InitialState InitialState::parse(std::string_view text) {
  if (text == "fermion_pair") return fermion_pair();
  if (text.starts_with("bosons:")) {
    const std::string k(text.substr(7));
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != k.size()) {
      throw std::invalid_argument(fmt::format("initial: bad boson count '{}'", k));
    }
    return boson_count(value);
  }
  if (text.starts_with("bits:")) return custom(std::string(text.substr(5)));
  throw std::invalid_argument(fmt::format(
      "initial: expected fermion_pair, bosons:K or bits:..., got '{}'", text));
}

void EvolutionConfig::validate(const YukawaParams& params) const {
  params.validate();
  if (!(delta_t > 0.0) || !std::isfinite(delta_t)) {
    throw std::invalid_argument("delta_t: must be > 0");
  }
  if (n_t < 0) throw std::invalid_argument("n_t: must be >= 0");
  if (samples < 1) throw std::invalid_argument("samples: must be >= 1");
  if (threads < 0) throw std::invalid_argument("threads: must be >= 0");
  if (mps.chi_max < 1) throw std::invalid_argument("chi_max: must be >= 1");
  if (initial.kind == InitialState::Kind::bosons &&
      (initial.bosons < 0 || initial.bosons > (1 << params.t) - 1)) {
    throw std::invalid_argument(fmt::format(
        "initial: {} bosons exceed the truncation {}", initial.bosons, (1 << params.t) - 1));
  }
  if (initial.kind == InitialState::Kind::custom) {
    const int n = SiteLayout(params).n_qubits();
    if (static_cast<int>(initial.bits.size()) != n ||
        initial.bits.find_first_not_of("01") != std::string::npos) {
      throw std::invalid_argument(
          fmt::format("initial: custom state needs {} characters of 0/1", n));
    }
  }
}

StateVector StateVector::from_bits(std::span<const std::uint8_t> bits) {
  const int n = static_cast<int>(bits.size());
  if (n < 1 || n > kDenseQubitCap) {
    throw std::length_error(
        fmt::format("state vector of {} qubits outside [1, {}]", n, kDenseQubitCap));
  }
  DenseVector amp = DenseVector::Zero(Index{1} << n);
  Index index = 0;
  for (std::uint8_t b : bits) index = (index << 1) | (b & 1);
  amp[index] = 1.0;
  return StateVector(std::move(amp));
}

StateVector::StateVector(DenseVector amplitudes) : amp_(std::move(amplitudes)) {
  const Index dim = amp_.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("state dimension must be a power of two");
  }
  n_ = 0;
  while ((Index{1} << n_) < dim) ++n_;
}

void StateVector::apply_gate(const DenseMatrix& gate, std::span<const int> qubits) {
  const int k = static_cast<int>(qubits.size());
  const Index dim = Index{1} << k;
  if (k == 0 || gate.rows() != dim || gate.cols() != dim) {
    throw std::invalid_argument("gate dimension does not match its qubits");
  }
  std::vector<Index> offsets(static_cast<std::size_t>(dim), 0);
  Index target_mask = 0;
  for (int j = 0; j < k; ++j) {
    const int q = qubits[j];
    if (q < 0 || q >= n_) throw std::out_of_range("gate qubit outside register");
    const Index bit = Index{1} << (n_ - 1 - q);
    if (target_mask & bit) throw std::invalid_argument("gate qubits must differ");
    target_mask |= bit;
    for (Index p = 0; p < dim; ++p) {
      if ((p >> (k - 1 - j)) & 1) offsets[p] |= bit;
    }
  }
  DenseVector local(dim);
  const Index total = amp_.size();
  for (Index base = 0; base < total; ++base) {
    if (base & target_mask) continue;
    for (Index p = 0; p < dim; ++p) local[p] = amp_[base | offsets[p]];
    const DenseVector out = gate * local;
    for (Index p = 0; p < dim; ++p) amp_[base | offsets[p]] = out[p];
  }
}

Bits initial_bits(const EvolutionConfig& config, const YukawaParams& params) {
  config.validate(params);
  const SiteLayout layout(params);
  Bits bits(static_cast<std::size_t>(layout.n_qubits()), 0);
  // Every fermion mode starts empty (down = 1); bosons start in vacuum.
  for (int x = 0; x < layout.n_sites(); ++x) {
    bits[layout.antifermion(x)] = 1;
    bits[layout.fermion(x)] = 1;
  }
  switch (config.initial.kind) {
    case InitialState::Kind::fermion_pair:
      bits[layout.antifermion(0)] = 0;
      bits[layout.fermion(0)] = 0;
      break;
    case InitialState::Kind::bosons: {
      const Bits boson = occupation_to_bits(config.initial.bosons, params.t);
      for (int j = 0; j < params.t; ++j) bits[layout.boson(0, j)] = boson[j];
      break;
    }
    case InitialState::Kind::custom:
      for (std::size_t q = 0; q < bits.size(); ++q) bits[q] = config.initial.bits[q] == '1';
      break;
  }
  return bits;
}

StateVector initial_state_vector(const EvolutionConfig& config, const YukawaParams& params) {
  return StateVector::from_bits(initial_bits(config, params));
}

MpsState initial_mps(const EvolutionConfig& config, const YukawaParams& params) {
  return MpsState::product(initial_bits(config, params), config.mps);
}

DenseMatrix site_step_unitary(const YukawaParams& params, double t_step, double delta_t) {
  return SiteGenerator(params).unitary(t_step, delta_t);
}

StateVector step(const StateVector& state, const YukawaParams& params, double t_step,
                 double delta_t) {
  StateVector out = state;
  apply_sites(out, site_step_unitary(params, t_step, delta_t), SiteLayout(params));
  return out;
}

MpsState step(const MpsState& state, const YukawaParams& params, double t_step,
              double delta_t) {
  MpsState out = state;
  apply_sites(out, site_step_unitary(params, t_step, delta_t), SiteLayout(params));
  return out;
}

Observables measure_rho(const StateVector& state, const YukawaParams& params) {
  return measure_with(state, density_operators(params));
}

Observables measure_rho(const MpsState& state, const YukawaParams& params) {
  return measure_with(state, density_operators(params));
}

double t_prime(TPrimePolicy policy, int l, double delta_t, double uniform) {
  switch (policy) {
    case TPrimePolicy::left: return l * delta_t;
    case TPrimePolicy::midpoint: return (l + 0.5) * delta_t;
    case TPrimePolicy::random: return (l + uniform) * delta_t;
  }
  return l * delta_t;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t sample) {
  return splitmix64(seed ^ splitmix64(sample));
}

Trajectory evolve(const EvolutionConfig& config, const YukawaParams& params) {
  config.validate(params);
  return run_one(config, params, 0);
}

SampledRun sample_error_band(const EvolutionConfig& config, const YukawaParams& params) {
  config.validate(params);
  if (config.policy != TPrimePolicy::random) {
    throw std::invalid_argument("policy: error bands need the random t' policy");
  }
  const int samples = config.samples;
  std::vector<Trajectory> runs(static_cast<std::size_t>(samples));

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int workers =
      std::min(samples, config.threads > 0 ? config.threads : static_cast<int>(hw));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int s = next++; s < samples; s = next++) {
          try {
            runs[s] = run_one(config, params, static_cast<std::uint64_t>(s));
          } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);

  SampledRun out;
  out.band.samples = samples;
  out.mean.params = params;
  out.mean.config = config;
  const std::size_t steps = runs.front().records.size();
  std::vector<double> p(static_cast<std::size_t>(samples));
  std::vector<double> n(p.size());
  std::vector<double> b(p.size());
  for (std::size_t l = 0; l < steps; ++l) {
    for (std::size_t s = 0; s < runs.size(); ++s) {
      p[s] = runs[s].records[l].rho.rho_P;
      n[s] = runs[s].records[l].rho.rho_N;
      b[s] = runs[s].records[l].rho.rho_b;
    }
    const auto& ref = runs.front().records[l];
    BandRecord rec{ref.l, ref.time, summarize(p), summarize(n), summarize(b)};
    out.band.records.push_back(rec);
    out.mean.records.push_back({ref.l, ref.time, {rec.rho_P.mean, rec.rho_N.mean, rec.rho_b.mean}});
  }
  for (const auto& r : runs) {
    out.mean.max_norm_drift = std::max(out.mean.max_norm_drift, r.max_norm_drift);
  }
  return out;
}

double time_averaged_std(const ErrorBand& band, Observable which) {
  if (band.records.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& r : band.records) {
    switch (which) {
      case Observable::rho_P: sum += r.rho_P.std; break;
      case Observable::rho_N: sum += r.rho_N.std; break;
      case Observable::rho_b: sum += r.rho_b.std; break;
    }
  }
  return sum / static_cast<double>(band.records.size());
}

}  // namespace bosonq
