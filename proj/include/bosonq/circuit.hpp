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

#include <string>
#include <vector>

#include "bosonq/pauli.hpp"

namespace bosonq {

/**
 * Gate set of the step circuits. R is the Hermitian involution
 * (1/√2)[[1, −i], [i, −1]] that exchanges Z and Y, playing the role H plays
 * for X. Rz(θ) = diag(e^{−iθ/2}, e^{iθ/2}); PhaseGlobal(φ) multiplies by e^{iφ}.
 */
enum class GateKind { H, R, Rz, Rx, CNOT, PhaseGlobal };

struct Gate {
  GateKind kind = GateKind::H;
  int qubit = 0;    // target of one-qubit gates, control of CNOT
  int target = -1;  // CNOT target only
  double angle = 0.0;

  static Gate h(int q) { return {GateKind::H, q, -1, 0.0}; }
  static Gate r(int q) { return {GateKind::R, q, -1, 0.0}; }
  static Gate rz(int q, double theta) { return {GateKind::Rz, q, -1, theta}; }
  static Gate rx(int q, double theta) { return {GateKind::Rx, q, -1, theta}; }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, control, target, 0.0}; }
  static Gate global_phase(double phi) { return {GateKind::PhaseGlobal, -1, -1, phi}; }

  bool operator==(const Gate&) const = default;
};

class Circuit {
 public:
  explicit Circuit(int n_qubits);

  int n_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /** Throws if a qubit index is out of range or a CNOT has control == target. */
  void append(const Gate& g);
  void append(const Circuit& other);

  int cnot_count() const;
  int single_qubit_count() const;

 private:
  int n_;
  std::vector<Gate> gates_;
};

struct CompilationStats {
  int term_count = 0;  // non-identity Pauli terms compiled
  int cnot_count_naive = 0;
  int cnot_count_after_cancellation = 0;
  int single_qubit_count = 0;  // after cancellation
  /** Identity-term contribution: the exact step is e^{−i·global_phase} times the circuit. */
  double global_phase = 0.0;
};

enum class TermOrdering {
  lex,     // canonical letter order
  ladder,  // greedy: each next term maximizes cancellation with the previous one
};

std::string to_string(TermOrdering o);
TermOrdering parse_ordering(std::string_view s);

/** exp(−iθP) for a non-identity, phase +1 string, as basis change + CNOT ladder. */
Circuit compile_pauli_exponential(const PauliString& string, double theta);

struct CompiledStep {
  Circuit circuit;
  CompilationStats stats;
};

/**
 * First-order product Π_k exp(−i c_k P_k Δt) over the terms of a Hermitian
 * Hamiltonian, followed by cancel_adjacent.
 */
CompiledStep compile_step(const PauliSum& hamiltonian, double delta_t,
                          TermOrdering ordering = TermOrdering::lex);

/**
 * Peephole pass to a fixed point: removes wire-adjacent CNOT·CNOT, H·H and
 * R·R pairs, merges wire-adjacent Rz (and Rx) rotations, and drops zero-angle
 * rotations.
 */
Circuit cancel_adjacent(const Circuit& circuit);

/** Per-gate fidelity so that n_steps × cnot_per_step gates reach total_fidelity. */
double fidelity_threshold(double total_fidelity, int cnot_per_step, int n_steps);

DenseMatrix gate_matrix(const Gate& g);
DenseMatrix circuit_unitary(const Circuit& circuit);

/** OpenQASM 2.0; R is written as `sdg; h; s` on its qubit. */
std::string export_text(const Circuit& circuit);

}  // namespace bosonq
