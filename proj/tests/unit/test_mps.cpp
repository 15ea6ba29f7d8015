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

#include <doctest.h>

#include <random>

#include "bosonq/dynamics.hpp"
#include "bosonq/mps.hpp"
#include "support/oracle.hpp"

using namespace bosonq;
namespace o = bosonq::oracle;

namespace {

/** Dense reference: permutes the gate's qubits to the front, applies, permutes back. */
o::Vec apply_dense(const o::Vec& psi, const o::Mat& gate, const std::vector<int>& qubits, int n) {
  const int k = static_cast<int>(qubits.size());
  o::Vec out = o::Vec::Zero(psi.size());
  for (Eigen::Index col = 0; col < psi.size(); ++col) {
    if (psi(col) == o::C{0.0, 0.0}) continue;
    int sub = 0;
    for (int j = 0; j < k; ++j) sub = (sub << 1) | static_cast<int>((col >> (n - 1 - qubits[j])) & 1);
    for (int r = 0; r < (1 << k); ++r) {
      Eigen::Index row = col;
      for (int j = 0; j < k; ++j) {
        const Eigen::Index bit = Eigen::Index{1} << (n - 1 - qubits[j]);
        row = ((r >> (k - 1 - j)) & 1) ? (row | bit) : (row & ~bit);
      }
      out(row) += gate(r, sub) * psi(col);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("product states") {
  const Bits bits{0, 1, 1, 0, 1};
  const MpsState m = MpsState::product(bits);
  CHECK(m.n_qubits() == 5);
  CHECK(m.norm() == doctest::Approx(1.0));
  CHECK(m.bond_dimensions() == std::vector<int>(4, 1));
  CHECK(o::max_abs(m.to_dense() - o::basis(5, 0b01101)) < 1e-15);
}

TEST_CASE("identity gates leave the state alone") {
  std::mt19937_64 rng(1);
  MpsState m = MpsState::product(Bits{0, 1, 0, 1});
  m.apply_gate(o::random_unitary(rng, 4), std::vector<int>{1, 2});
  const o::Vec before = m.to_dense();
  m.apply_gate(o::identity(2), std::vector<int>{0, 3});
  m.apply_gate(o::identity(1), std::vector<int>{2});
  CHECK(o::max_abs(m.to_dense() - before) < 1e-13);
}

TEST_CASE("gates anywhere match the dense reference") {
  std::mt19937_64 rng(2);
  const int n = 5;
  MpsState m = MpsState::product(Bits{0, 0, 1, 0, 1});
  StateVector sv = StateVector::from_bits(Bits{0, 0, 1, 0, 1});
  o::Vec psi = o::basis(n, 0b00101);
  const std::vector<std::vector<int>> placements{{2}, {0, 1}, {3, 1}, {0, 4}, {4, 0}, {1, 2, 3}, {2, 3}, {0}};
  for (int round = 0; round < 3; ++round) {
    for (const auto& q : placements) {
      const o::Mat g = o::random_unitary(rng, Eigen::Index{1} << q.size());
      m.apply_gate(g, q);
      sv.apply_gate(g, q);
      psi = apply_dense(psi, g, q, n);
      CHECK(o::max_abs(m.to_dense() - psi) < 1e-12);
      CHECK(o::max_abs(sv.amplitudes() - psi) < 1e-12);
    }
  }
  CHECK(m.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS(m.apply_gate(o::identity(3), std::vector<int>{0, 2, 4}));
  CHECK_THROWS(m.apply_gate(o::identity(2), std::vector<int>{1, 1}));
  CHECK_THROWS(m.apply_gate(o::identity(1), std::vector<int>{5}));
}

TEST_CASE("expectations match dense algebra") {
  std::mt19937_64 rng(3);
  MpsState m = MpsState::product(Bits{1, 0, 1, 1});
  for (const auto& q : std::vector<std::vector<int>>{{0, 1}, {2, 3}, {1, 2}, {0, 3}}) {
    m.apply_gate(o::random_unitary(rng, 4), q);
  }
  const o::Vec psi = m.to_dense();
  std::normal_distribution<double> nd;
  PauliSum obs(4);
  for (int k = 0; k < 10; ++k) obs.accumulate(PauliString::from_letters(o::random_letters(rng, 4)), nd(rng));
  CHECK(std::abs(m.expectation(obs) - expectation(psi, obs)) < 1e-12);
  CHECK(std::abs(mps_expectation(m, obs) - expectation(psi, obs).real()) < 1e-12);
}

TEST_CASE("truncation is reported") {
  o::Mat h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  o::Mat cnot = o::Mat::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;

  MpsOptions opts;
  opts.chi_max = 1;
  MpsState m = MpsState::product(Bits{0, 0}, opts);
  m.apply_gate(h, std::vector<int>{0});
  m.apply_gate(cnot, std::vector<int>{0, 1});
  CHECK(m.report().discarded_weight == doctest::Approx(0.5));
  CHECK(m.report().overflow_events == 1);
  CHECK(m.norm() == doctest::Approx(1.0));

  opts.strict = true;
  MpsState s = MpsState::product(Bits{0, 0}, opts);
  s.apply_gate(h, std::vector<int>{0});
  CHECK_THROWS(s.apply_gate(cnot, std::vector<int>{0, 1}));

  MpsState exact = MpsState::product(Bits{0, 0});
  exact.apply_gate(h, std::vector<int>{0});
  exact.apply_gate(cnot, std::vector<int>{0, 1});
  CHECK(exact.report().discarded_weight < 1e-20);
  CHECK(exact.bond_dimensions() == std::vector<int>{2});
}

TEST_CASE("two-site lattice agrees with the state vector at chi 16") {
  YukawaParams p;
  p.n_x = 2;
  p.g = 34.75;
  EvolutionConfig cfg;
  cfg.n_t = 20;
  cfg.initial = InitialState::boson_count(3);
  cfg.mps.chi_max = 16;
  const Trajectory sv = evolve(cfg, p);
  cfg.backend = Backend::mps;
  const Trajectory mps = evolve(cfg, p);
  REQUIRE(sv.records.size() == mps.records.size());
  for (std::size_t l = 0; l < sv.records.size(); ++l) {
    CHECK(std::abs(sv.records[l].rho.rho_P - mps.records[l].rho.rho_P) < 1e-8);
    CHECK(std::abs(sv.records[l].rho.rho_b - mps.records[l].rho.rho_b) < 1e-8);
  }
  CHECK(mps.mps_report.max_bond <= 16);
}
