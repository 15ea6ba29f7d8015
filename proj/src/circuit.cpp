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

#include "bosonq/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <list>
#include <stdexcept>

#include <fmt/format.h>

namespace bosonq {

namespace {

using Index = Eigen::Index;

constexpr double kZeroAngle = 1e-15;

bool is_rotation(GateKind k) { return k == GateKind::Rz || k == GateKind::Rx; }

bool touches(const Gate& g, int q) {
  if (g.kind == GateKind::PhaseGlobal) return false;
  return g.qubit == q || (g.kind == GateKind::CNOT && g.target == q);
}

bool shares_wire(const Gate& a, const Gate& b) {
  if (a.kind == GateKind::PhaseGlobal) return false;
  if (touches(b, a.qubit)) return true;
  return a.kind == GateKind::CNOT && touches(b, a.target);
}

/** One sweep; returns true if anything changed. */
bool cancel_sweep(std::vector<Gate>& gates) {
  bool changed = false;
  std::vector<bool> dead(gates.size(), false);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (dead[i]) continue;
    Gate& g = gates[i];
    if (is_rotation(g.kind) && std::abs(g.angle) <= kZeroAngle) {
      dead[i] = changed = true;
      continue;
    }
    if (g.kind == GateKind::PhaseGlobal) continue;
    std::size_t j = i + 1;
    while (j < gates.size() && (dead[j] || !shares_wire(g, gates[j]))) ++j;
    if (j == gates.size()) continue;
    Gate& h = gates[j];
    if (h.kind != g.kind || h.qubit != g.qubit || h.target != g.target) continue;
    switch (g.kind) {
      case GateKind::CNOT:
      case GateKind::H:
      case GateKind::R:
        dead[i] = dead[j] = changed = true;
        break;
      case GateKind::Rz:
      case GateKind::Rx:
        g.angle += h.angle;
        dead[j] = changed = true;
        break;
      case GateKind::PhaseGlobal:
        break;
    }
  }
  if (changed) {
    std::vector<Gate> kept;
    kept.reserve(gates.size());
    for (std::size_t i = 0; i < gates.size(); ++i) {
      if (!dead[i]) kept.push_back(gates[i]);
    }
    gates = std::move(kept);
  }
  return changed;
}

/** Applies a one- or two-qubit gate to every column of m. */
void apply_rows(DenseMatrix& m, const DenseMatrix& g, int n, std::initializer_list<int> qubits) {
  const int k = static_cast<int>(qubits.size());
  const Index dim = Index{1} << k;
  std::vector<Index> offsets(static_cast<std::size_t>(dim), 0);
  Index mask = 0;
  int j = 0;
  for (int q : qubits) {
    const Index bit = Index{1} << (n - 1 - q);
    mask |= bit;
    for (Index p = 0; p < dim; ++p) {
      if ((p >> (k - 1 - j)) & 1) offsets[p] |= bit;
    }
    ++j;
  }
  DenseMatrix block(dim, m.cols());
  for (Index base = 0; base < m.rows(); ++base) {
    if (base & mask) continue;
    for (Index p = 0; p < dim; ++p) block.row(p) = m.row(base | offsets[p]);
    const DenseMatrix out = g * block;
    for (Index p = 0; p < dim; ++p) m.row(base | offsets[p]) = out.row(p);
  }
}

int gate_removal_score(const Circuit& prev, const Circuit& next) {
  Circuit joined = prev;
  joined.append(next);
  return static_cast<int>(joined.size()) - static_cast<int>(cancel_adjacent(joined).size());
}

}  // namespace

Circuit::Circuit(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw std::invalid_argument("circuit width");
}

void Circuit::append(const Gate& g) {
  const auto valid = [this](int q) { return q >= 0 && q < n_; };
  if (g.kind == GateKind::PhaseGlobal) {
    gates_.push_back(g);
    return;
  }
  if (!valid(g.qubit)) throw std::out_of_range(fmt::format("gate qubit {} outside register", g.qubit));
  if (g.kind == GateKind::CNOT) {
    if (!valid(g.target)) throw std::out_of_range(fmt::format("CNOT target {} outside register", g.target));
    if (g.target == g.qubit) throw std::invalid_argument("CNOT control equals target");
  }
  gates_.push_back(g);
}

void Circuit::append(const Circuit& other) {
  if (other.n_ != n_) throw std::invalid_argument("circuit width mismatch");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

int Circuit::cnot_count() const {
  return static_cast<int>(std::count_if(gates_.begin(), gates_.end(),
                                        [](const Gate& g) { return g.kind == GateKind::CNOT; }));
}

int Circuit::single_qubit_count() const {
  return static_cast<int>(std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) {
    return g.kind != GateKind::CNOT && g.kind != GateKind::PhaseGlobal;
  }));
}

std::string to_string(TermOrdering o) { return o == TermOrdering::ladder ? "ladder" : "lex"; }

TermOrdering parse_ordering(std::string_view s) {
  if (s == "lex") return TermOrdering::lex;
  if (s == "ladder") return TermOrdering::ladder;
  throw std::invalid_argument(fmt::format("ordering: expected lex or ladder, got '{}'", s));
}

Circuit compile_pauli_exponential(const PauliString& string, double theta) {
  if (string.is_identity()) {
    throw std::invalid_argument("identity string is a global phase, not a circuit");
  }
  if (string.phase() != 0) throw std::invalid_argument("Pauli string must carry phase +1");

  const std::vector<int> active = string.support();
  Circuit c(string.n_qubits());
  const auto basis_change = [&] {
    for (int q : active) {
      const Pauli p = string.letter(q);
      if (p == Pauli::X) c.append(Gate::h(q));
      if (p == Pauli::Y) c.append(Gate::r(q));
    }
  };
  basis_change();
  for (std::size_t k = 0; k + 1 < active.size(); ++k) c.append(Gate::cnot(active[k], active[k + 1]));
  c.append(Gate::rz(active.back(), 2.0 * theta));
  for (std::size_t k = active.size() - 1; k > 0; --k) c.append(Gate::cnot(active[k - 1], active[k]));
  basis_change();
  return c;
}

CompiledStep compile_step(const PauliSum& hamiltonian, double delta_t, TermOrdering ordering) {
  if (!std::isfinite(delta_t)) throw std::invalid_argument("delta_t must be finite");
  CompilationStats stats;
  std::vector<std::pair<PauliString, double>> terms;
  for (const auto& [s, c] : hamiltonian.terms()) {
    if (std::abs(c.imag()) >= 1e-12) {
      throw std::invalid_argument(fmt::format(
          "Hamiltonian is not Hermitian: term {} has imaginary part {}", s.letters(), c.imag()));
    }
    if (s.is_identity()) {
      stats.global_phase += c.real() * delta_t;
    } else {
      terms.emplace_back(s, c.real());
    }
  }
  stats.term_count = static_cast<int>(terms.size());

  std::vector<Circuit> pieces;
  pieces.reserve(terms.size());
  for (const auto& [s, c] : terms) pieces.push_back(compile_pauli_exponential(s, c * delta_t));

  if (ordering == TermOrdering::ladder && pieces.size() > 2) {
    std::list<Circuit> pool(std::next(pieces.begin()), pieces.end());
    std::vector<Circuit> ordered{pieces.front()};
    while (!pool.empty()) {
      auto best = pool.begin();
      int best_score = -1;
      for (auto it = pool.begin(); it != pool.end(); ++it) {
        const int score = gate_removal_score(ordered.back(), *it);
        if (score > best_score) {
          best_score = score;
          best = it;
        }
      }
      ordered.push_back(*best);
      pool.erase(best);
    }
    pieces = std::move(ordered);
  }

  Circuit circuit(std::max(1, hamiltonian.n_qubits()));
  for (const auto& p : pieces) {
    stats.cnot_count_naive += p.cnot_count();
    circuit.append(p);
  }
  circuit = cancel_adjacent(circuit);
  stats.cnot_count_after_cancellation = circuit.cnot_count();
  stats.single_qubit_count = circuit.single_qubit_count();
  return {std::move(circuit), stats};
}

Circuit cancel_adjacent(const Circuit& circuit) {
  std::vector<Gate> gates = circuit.gates();
  while (cancel_sweep(gates)) {
  }
  Circuit out(circuit.n_qubits());
  for (const auto& g : gates) out.append(g);
  return out;
}

double fidelity_threshold(double total_fidelity, int cnot_per_step, int n_steps) {
  if (!(total_fidelity > 0.0) || total_fidelity > 1.0) {
    throw std::invalid_argument("total fidelity must be in (0, 1]");
  }
  if (cnot_per_step <= 0 || n_steps <= 0) {
    throw std::invalid_argument("CNOT count and step count must be positive");
  }
  return std::pow(total_fidelity, 1.0 / (static_cast<double>(cnot_per_step) * n_steps));
}

DenseMatrix gate_matrix(const Gate& g) {
  const Complex kI{0.0, 1.0};
  const double r2 = 1.0 / std::sqrt(2.0);
  DenseMatrix m(2, 2);
  switch (g.kind) {
    case GateKind::H:
      m << r2, r2, r2, -r2;
      return m;
    case GateKind::R:
      m << r2, -kI * r2, kI * r2, -r2;
      return m;
    case GateKind::Rz:
      m << std::exp(-kI * g.angle / 2.0), 0.0, 0.0, std::exp(kI * g.angle / 2.0);
      return m;
    case GateKind::Rx:
      m << std::cos(g.angle / 2.0), -kI * std::sin(g.angle / 2.0),
          -kI * std::sin(g.angle / 2.0), std::cos(g.angle / 2.0);
      return m;
    case GateKind::CNOT: {
      DenseMatrix c = DenseMatrix::Zero(4, 4);
      c(0, 0) = c(1, 1) = c(2, 3) = c(3, 2) = 1.0;
      return c;
    }
    case GateKind::PhaseGlobal:
      return DenseMatrix::Constant(1, 1, std::exp(kI * g.angle));
  }
  throw std::invalid_argument("unknown gate");
}

DenseMatrix circuit_unitary(const Circuit& circuit) {
  const int n = circuit.n_qubits();
  if (n > kDenseQubitCap) {
    throw std::length_error(fmt::format("circuit unitary capped at {} qubits", kDenseQubitCap));
  }
  const Index dim = Index{1} << n;
  DenseMatrix u = DenseMatrix::Identity(dim, dim);
  for (const Gate& g : circuit.gates()) {
    const DenseMatrix m = gate_matrix(g);
    switch (g.kind) {
      case GateKind::PhaseGlobal: u *= m(0, 0); break;
      case GateKind::CNOT: apply_rows(u, m, n, {g.qubit, g.target}); break;
      default: apply_rows(u, m, n, {g.qubit}); break;
    }
  }
  return u;
}

std::string export_text(const Circuit& circuit) {
  std::string out = fmt::format("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[{}];\n",
                                circuit.n_qubits());
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::H: out += fmt::format("h q[{}];\n", g.qubit); break;
      case GateKind::R:
        // R = S·H·S†, applied right to left.
        out += fmt::format("sdg q[{0}];\nh q[{0}];\ns q[{0}];\n", g.qubit);
        break;
      case GateKind::Rz: out += fmt::format("rz({}) q[{}];\n", g.angle, g.qubit); break;
      case GateKind::Rx: out += fmt::format("rx({}) q[{}];\n", g.angle, g.qubit); break;
      case GateKind::CNOT: out += fmt::format("cx q[{}],q[{}];\n", g.qubit, g.target); break;
      case GateKind::PhaseGlobal: out += fmt::format("// global phase {}\n", g.angle); break;
    }
  }
  return out;
}

}  // namespace bosonq
