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

// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// non-zero if any criterion fails. Tolerances are fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "bosonq/circuit.hpp"
#include "bosonq/dynamics.hpp"
#include "bosonq/encodings.hpp"
#include "bosonq/golden.hpp"
#include "bosonq/yukawa.hpp"
#include "cli.hpp"
#include "support/circuit_oracle.hpp"

using namespace bosonq;
namespace o = bosonq::oracle;

namespace {

constexpr double kRecurrenceTol = 1e-12;
constexpr double kRecurrenceSeconds = 2.0;
constexpr double kGoldenTol = 1e-12;
constexpr double kHamiltonianTol = 1e-12;
constexpr int kHamiltonianDraws = 100;
constexpr double kRunSeconds = 10.0;
constexpr double kNormTol = 1e-9;
constexpr double kOracleTol = 1e-10;
constexpr double kBackendTol = 1e-8;
constexpr int kBandSamples = 50;
constexpr double kCircuitTol = 1e-12;
constexpr double kFidelityTol = 5e-7;
constexpr double kCommutatorTol = 1e-12;

struct Outcome {
  bool passed = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

YukawaParams at_g(double g) {
  YukawaParams p;
  p.g = g;
  return p;
}

// 1. Recurrence against the sub-diagonal matrix a†(i, i-1) = √i.
Outcome recurrence() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (int t = 1; t <= 6; ++t) {
    worst = std::max(worst, o::max_abs(to_dense(binary_creation(t).op) - o::annihilation(t).adjoint()));
  }
  const double secs = seconds_since(start);
  return {worst < kRecurrenceTol && secs < kRecurrenceSeconds,
          fmt::format("t=1..6 max deviation {:.2e}, {:.3f} s", worst, secs)};
}

// 2. Printed expansions.
Outcome golden() {
  const std::vector<std::string> required{
      "creation_2_ladder", "creation_3_ladder", "creation_3_expanded", "creation_4_ladder", "creation_5_ladder",
      "number_2",          "number_3",          "number_squared_3",    "squeeze_3"};
  std::vector<GoldenEntry> entries;
  try {
    entries = load_golden_dir(default_golden_dir());
  } catch (const std::exception& ex) {
    return {false, ex.what()};
  }
  bool ok = true;
  double worst = 0.0;
  std::size_t errata = 0;
  std::string failed;
  for (const auto& name : required) {
    const auto it = std::find_if(entries.begin(), entries.end(), [&](const GoldenEntry& e) { return e.name == name; });
    if (it == entries.end()) {
      ok = false;
      failed += " missing:" + name;
      continue;
    }
    const GoldenCheck c = check_golden(*it, kGoldenTol);
    worst = std::max(worst, c.max_deviation);
    errata += it->errata.size();
    if (!c.passed) {
      ok = false;
      failed += " " + name;
    }
  }
  return {ok, fmt::format("{} tables, max deviation {:.2e}, {} printed typos corrected by errata{}", required.size(),
                          worst, errata, failed.empty() ? "" : ", failed:" + failed)};
}

// 3. Unary against binary up to truncation 15.
Outcome encodings() {
  bool ok = true;
  double worst = 0.0;
  std::string bad;
  for (int n = 1; n <= 15; ++n) {
    const UnaryCreation u = unary_creation(n);
    int t = 1;
    while ((1 << t) - 1 < n) ++t;
    const BinaryCreation b = binary_creation(t);
    if (u.ladder_terms != n || u.op.n_qubits() != n + 1 || b.op.n_qubits() != t) {
      ok = false;
      bad += fmt::format(" counts@{}", n);
    }
    for (int i = 0; i < n; ++i) {
      const Complex ue = matrix_element(u.op, unary_basis_index(i + 1, n), unary_basis_index(i, n));
      const Complex be = matrix_element(b.op, static_cast<std::uint64_t>(i + 1), static_cast<std::uint64_t>(i));
      const double want = std::sqrt(i + 1.0);
      worst = std::max({worst, std::abs(ue - want), std::abs(be - want)});
    }
  }
  ok = ok && worst < 1e-12;
  return {ok, fmt::format("N=1..15 max element deviation {:.2e}; unary terms = N, binary qubits = ceil(log2(N+1)){}",
                          worst, bad)};
}

// 4. Closed form against the general construction.
Outcome hamiltonians() {
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_real_distribution<double> g(0.0, 40.0), k(0.1, 2.0), w(0.5, 10.0), w0(0.2, 3.0), time(0.0, 30.0);
  double worst = 0.0;
  for (int d = 0; d < kHamiltonianDraws; ++d) {
    YukawaParams p;
    p.g = g(rng);
    p.kappa = k(rng);
    p.omega = w(rng);
    p.omega0 = w0(rng);
    const double tt = time(rng);
    worst = std::max(worst, max_coefficient_deviation(hamiltonian_t2(p, tt), hamiltonian_general(p, tt)));
  }
  return {worst < kHamiltonianTol, fmt::format("{} draws, max coefficient deviation {:.2e}", kHamiltonianDraws, worst)};
}

int local_minima(const Trajectory& tr) {
  int count = 0;
  for (std::size_t l = 1; l + 1 < tr.records.size(); ++l) {
    const double prev = tr.records[l - 1].rho.rho_P, here = tr.records[l].rho.rho_P, next = tr.records[l + 1].rho.rho_P;
    if (here < prev && here < next) ++count;
  }
  return count;
}

// 5. Dynamics at the default parameter points.
Outcome dynamics() {
  double slowest = 0.0;
  const auto timed = [&](const EvolutionConfig& cfg, const YukawaParams& p) {
    const auto start = Clock::now();
    Trajectory tr = evolve(cfg, p);
    slowest = std::max(slowest, seconds_since(start));
    return tr;
  };
  EvolutionConfig pair;
  EvolutionConfig bosons;
  bosons.initial = InitialState::boson_count(3);

  const Trajectory a = timed(pair, at_g(1.0));
  double max_b = 0.0;
  for (const auto& r : a.records) max_b = std::max(max_b, r.rho.rho_b);
  const int minima = local_minima(a);
  const bool ok_a = minima >= 2 && max_b > 0.0;

  const Trajectory b = timed(pair, at_g(34.75));
  double min_p = 1.0;
  for (std::size_t l = 0; l <= 50 && l < b.records.size(); ++l) min_p = std::min(min_p, b.records[l].rho.rho_P);
  const bool ok_b = min_p < 0.5;

  const Trajectory c = timed(bosons, at_g(34.75));
  double max_p = 0.0;
  for (const auto& r : c.records) max_p = std::max(max_p, r.rho.rho_P);
  const bool ok_c = max_p > 0.1;

  const bool ok_time = slowest < kRunSeconds;
  return {ok_a && ok_b && ok_c && ok_time,
          fmt::format("(a) {} local minima of rho_P, max rho_b {:.3e} [{}]; "
                      "(b) min rho_P over 50 steps {:.4f} < 0.5 [{}]; "
                      "(c) max rho_P {:.4f} > 0.1 [{}]; slowest run {:.2f} s",
                      minima, max_b, ok_a ? "ok" : "FAIL", min_p, ok_b ? "ok" : "FAIL", max_p,
                      ok_c ? "ok" : "FAIL", slowest)};
}

// 6. Unitarity and the spectral oracle.
Outcome unitarity() {
  double drift = 0.0;
  for (double g : {1.0, 34.75}) {
    for (const auto& init : {InitialState::fermion_pair(), InitialState::boson_count(3)}) {
      EvolutionConfig cfg;
      cfg.initial = init;
      drift = std::max(drift, evolve(cfg, at_g(g)).max_norm_drift);
    }
  }
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> when(0.0, 30.0);
  double worst = 0.0;
  for (int n_x : {1, 2}) {
    for (double g : {1.0, 34.75}) {
      YukawaParams p = at_g(g);
      p.n_x = n_x;
      const double tp = when(rng);
      Bits bits(static_cast<std::size_t>(4 * n_x));
      for (auto& bit : bits) bit = static_cast<std::uint8_t>(rng() & 1);
      const StateVector psi = StateVector::from_bits(bits);
      const o::Mat h = o::lattice(o::yukawa_site(g, p.kappa, p.omega, p.omega0, p.t, tp), n_x);
      const o::Vec want = o::expm_hermitian(h, 0.1) * psi.amplitudes();
      worst = std::max(worst, o::max_abs(step(psi, p, tp, 0.1).amplitudes() - want));
    }
  }
  return {drift < kNormTol && worst < kOracleTol,
          fmt::format("max norm drift {:.2e} over 300 steps; single step vs spectral oracle {:.2e}", drift, worst)};
}

// 7. MPS against the state vector.
Outcome backends() {
  double worst = 0.0;
  for (double g : {1.0, 34.75}) {
    for (const auto& init : {InitialState::fermion_pair(), InitialState::boson_count(3)}) {
      EvolutionConfig cfg;
      cfg.initial = init;
      const Trajectory sv = evolve(cfg, at_g(g));
      cfg.backend = Backend::mps;
      const Trajectory mps = evolve(cfg, at_g(g));
      for (std::size_t l = 0; l < sv.records.size(); ++l) {
        worst = std::max({worst, std::abs(sv.records[l].rho.rho_P - mps.records[l].rho.rho_P),
                          std::abs(sv.records[l].rho.rho_N - mps.records[l].rho.rho_N),
                          std::abs(sv.records[l].rho.rho_b - mps.records[l].rho.rho_b)});
      }
    }
  }
  return {worst < kBackendTol, fmt::format("n_x=1, 300 steps, g=1 and 34.75, max observable gap {:.2e}", worst)};
}

// 8. Error bands.
Outcome bands() {
  const auto band_text = [](double g, int threads) {
    cli::RunConfig rc;
    rc.params = at_g(g);
    rc.evolution.policy = TPrimePolicy::random;
    rc.evolution.samples = kBandSamples;
    rc.evolution.threads = threads;
    const SampledRun run = sample_error_band(rc.evolution, rc.params);
    return std::make_pair(cli::band_csv(rc, run), run);
  };
  const auto [first, strong] = band_text(34.75, 1);
  const auto [second, unused] = band_text(34.75, 0);
  const bool reproducible = first == second;
  const auto [weak_text, weak] = band_text(1.0, 0);
  const double s_strong = time_averaged_std(strong.band, Observable::rho_P);
  const double s_weak = time_averaged_std(weak.band, Observable::rho_P);
  const auto [zero_text, zero] = band_text(0.0, 0);
  bool zero_ok = true;
  for (const auto& r : zero.band.records) {
    for (const Stats* s : {&r.rho_P, &r.rho_N, &r.rho_b}) zero_ok = zero_ok && s->std == 0.0 && s->min == s->max;
  }
  return {reproducible && s_strong > s_weak && zero_ok,
          fmt::format("{} samples byte-reproducible across thread counts: {}; mean std rho_P g=34.75 {:.3e} > "
                      "g=1 {:.3e}; g=0 zero bands: {}",
                      kBandSamples, reproducible ? "yes" : "no", s_strong, s_weak, zero_ok ? "yes" : "no")};
}

// 9. Circuit compiler.
Outcome circuits() {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> angle(-2.0, 2.0);
  double exp_dev = 0.0;
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k < 20; ++k) {
      const std::string letters = o::random_letters(rng, n, false);
      const double th = angle(rng);
      const Circuit c = compile_pauli_exponential(PauliString::from_letters(letters), th);
      exp_dev = std::max(exp_dev, o::max_abs(o::oracle_unitary(c) - o::expm_hermitian(o::letters(letters), th)));
    }
  }
  double cancel_dev = 0.0;
  for (int k = 0; k < 40; ++k) {
    const Circuit c = o::random_circuit(rng, 2 + k % 4, 40);
    cancel_dev = std::max(cancel_dev, o::max_abs(o::oracle_unitary(cancel_adjacent(c)) - o::oracle_unitary(c)));
  }

  const YukawaParams p = at_g(34.75);
  const double time = 1.3;
  const PauliSum h = hamiltonian_general(p, time);
  const o::Mat hd = to_dense(h);
  const auto step_error = [&](double dt) {
    const CompiledStep cs = compile_step(h, dt);
    const o::Mat u = std::exp(o::C{0.0, -cs.stats.global_phase}) * o::oracle_unitary(cs.circuit);
    return o::op_norm(u - o::expm_hermitian(hd, dt));
  };
  const double ratio = step_error(0.1) / step_error(0.05);
  const double f = fidelity_threshold(0.70, 117, 10);

  const CompiledStep lex = compile_step(h, 0.1, TermOrdering::lex);
  const CompiledStep lad = compile_step(h, 0.1, TermOrdering::ladder);
  const bool ok = exp_dev < kCircuitTol && cancel_dev < kCircuitTol && ratio >= 3.0 && ratio <= 5.0 &&
                  std::abs(f - 0.999695) < kFidelityTol;
  return {ok, fmt::format("exponentials {:.2e}, cancellation {:.2e}, halving ratio {:.3f}, fidelity {:.7f}; "
                          "CNOTs per step (informational, target 117): lex {}->{}, ladder {}->{}",
                          exp_dev, cancel_dev, ratio, f, lex.stats.cnot_count_naive,
                          lex.stats.cnot_count_after_cancellation, lad.stats.cnot_count_naive,
                          lad.stats.cnot_count_after_cancellation)};
}

// 10. Truncated commutator.
Outcome commutator() {
  double worst = 0.0;
  for (int t = 1; t <= 5; ++t) {
    const PauliSum a = binary_annihilation(t);
    const PauliSum ad = binary_creation(t).op;
    const DenseMatrix comm = to_dense(a * ad - ad * a);
    const int top = (1 << t) - 1;
    for (int m = 0; m <= top; ++m) {
      const double want = m < top ? 1.0 : 1.0 - (1 << t);
      worst = std::max(worst, std::abs(comm(m, m) - want));
    }
    worst = std::max(worst, o::max_abs(comm - DenseMatrix(comm.diagonal().asDiagonal())));
  }
  return {worst < kCommutatorTol, fmt::format("t=1..5 max deviation {:.2e}", worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"recurrence", recurrence}, {"golden expansions", golden}, {"encoding equivalence", encodings},
      {"hamiltonian cross-construction", hamiltonians}, {"dynamics", dynamics}, {"unitarity and oracle", unitarity},
      {"backend agreement", backends}, {"error bands", bands}, {"circuit compiler", circuits},
      {"truncated commutator", commutator}};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome r;
    try {
      r = criteria[k].second();
    } catch (const std::exception& ex) {
      r = {false, std::string("exception: ") + ex.what()};
    }
    if (!r.passed) ++failed;
    std::printf("%s %2zu %s: %s\n", r.passed ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
