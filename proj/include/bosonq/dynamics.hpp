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

#pragma once

// Real-time evolution |ψ(t+Δt)> = exp(-i H_I(t') Δt) |ψ(t)> with t' chosen
// inside [t, t+Δt] by a policy. The Hamiltonian is a sum of identical on-site
// blocks, so the step unitary factorizes into one dense (2+t)-qubit unitary
// per site.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bosonq/encodings.hpp"
#include "bosonq/mps.hpp"
#include "bosonq/pauli.hpp"
#include "bosonq/yukawa.hpp"

namespace bosonq {

inline constexpr std::uint64_t kDefaultSeed = 20211029;

/** Largest allowed norm drift of a state vector after any step. */
inline constexpr double kNormTolerance = 1e-9;

enum class TPrimePolicy { left, midpoint, random };
enum class Backend { statevector, mps };

std::string to_string(TPrimePolicy p);
std::string to_string(Backend b);
TPrimePolicy parse_policy(std::string_view s);
Backend parse_backend(std::string_view s);

struct InitialState {
  enum class Kind { fermion_pair, bosons, custom };
  Kind kind = Kind::fermion_pair;
  int bosons = 0;    // for Kind::bosons
  std::string bits;  // for Kind::custom, one char per register qubit

  static InitialState fermion_pair() { return {}; }
  static InitialState boson_count(int k) { return {Kind::bosons, k, {}}; }
  static InitialState custom(std::string bits) { return {Kind::custom, 0, std::move(bits)}; }

  /** "fermion_pair", "bosons:K" or "bits:0101…". */
  std::string to_string() const;
  static InitialState parse(std::string_view text);
};

struct EvolutionConfig {
  double delta_t = 0.1;
  int n_t = 300;
  TPrimePolicy policy = TPrimePolicy::left;
  int samples = 50;
  std::uint64_t seed = kDefaultSeed;
  Backend backend = Backend::statevector;
  InitialState initial;
  MpsOptions mps;
  /** Worker threads for sampling; 0 picks the hardware concurrency. */
  int threads = 0;

  /** Throws std::invalid_argument naming the offending field. */
  void validate(const YukawaParams& params) const;
};

class StateVector {
 public:
  static StateVector from_bits(std::span<const std::uint8_t> bits);
  explicit StateVector(DenseVector amplitudes);

  int n_qubits() const { return n_; }
  const DenseVector& amplitudes() const { return amp_; }
  double norm() const { return amp_.norm(); }

  /** Applies a 2^k × 2^k gate; qubits[0] is the gate's most significant bit. */
  void apply_gate(const DenseMatrix& gate, std::span<const int> qubits);

 private:
  int n_;
  DenseVector amp_;
};

struct Observables {
  double rho_P = 0.0;  // Σ_x <n_{x,P}>
  double rho_N = 0.0;  // −Σ_x <n_{x,N}>, plotted below zero
  double rho_b = 0.0;  // Σ_x <n_{x,b}>
};

struct TrajectoryRecord {
  int l = 0;
  double time = 0.0;
  Observables rho;
};

struct Trajectory {
  YukawaParams params;
  EvolutionConfig config;
  std::vector<TrajectoryRecord> records;  // n_t + 1 entries, l = 0 first
  double max_norm_drift = 0.0;
  TruncationReport mps_report;
};

struct Stats {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation over samples
  double min = 0.0;
  double max = 0.0;
};

struct BandRecord {
  int l = 0;
  double time = 0.0;
  Stats rho_P;
  Stats rho_N;
  Stats rho_b;
};

struct ErrorBand {
  int samples = 0;
  std::vector<BandRecord> records;
};

struct SampledRun {
  Trajectory mean;  // per-step means
  ErrorBand band;
};

enum class Observable { rho_P, rho_N, rho_b };

/** Register bits (0 = up) of the configured initial state. */
Bits initial_bits(const EvolutionConfig& config, const YukawaParams& params);
StateVector initial_state_vector(const EvolutionConfig& config, const YukawaParams& params);
MpsState initial_mps(const EvolutionConfig& config, const YukawaParams& params);

/** exp(−i H_x(t_step) Δt) for one site, computed by dense exponentiation. */
DenseMatrix site_step_unitary(const YukawaParams& params, double t_step, double delta_t);

StateVector step(const StateVector& state, const YukawaParams& params, double t_step,
                 double delta_t);
MpsState step(const MpsState& state, const YukawaParams& params, double t_step,
              double delta_t);

Observables measure_rho(const StateVector& state, const YukawaParams& params);
Observables measure_rho(const MpsState& state, const YukawaParams& params);

/** Evaluation time for step l under a policy; `uniform` is the draw in [0, 1). */
double t_prime(TPrimePolicy policy, int l, double delta_t, double uniform);

/** Seed of sample s, derived from the run seed. */
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t sample);

Trajectory evolve(const EvolutionConfig& config, const YukawaParams& params);

/**
 * Runs config.samples independent random-t' trajectories and aggregates
 * per-step statistics. Samples may run concurrently; the result depends only
 * on the seed.
 */
SampledRun sample_error_band(const EvolutionConfig& config, const YukawaParams& params);

double time_averaged_std(const ErrorBand& band, Observable which);

}  // namespace bosonq
