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

// Qubit encodings of truncated bosonic modes and of a fermion/antifermion
// pair.
//
// Bit convention used everywhere in bosonq: spin up is bit 0, spin down is
// bit 1, and qubit 0 of a register is the most significant bit of the dense
// basis index. A boson register of t qubits holds occupation i as the t-bit
// big-endian binary of i, so |0> is all up and |2^t - 1> is all down.

#include <cstdint>
#include <span>
#include <vector>

#include "bosonq/pauli.hpp"

namespace bosonq {

/** Largest t accepted by the binary recurrence. */
inline constexpr int kMaxBosonQubits = 8;

using Bits = std::vector<std::uint8_t>;

class BosonRegister {
 public:
  explicit BosonRegister(int t);

  int qubits() const { return t_; }
  /** Maximal occupation, 2^t - 1. */
  int truncation() const { return (1 << t_) - 1; }

  Bits encode(int occupation) const;
  int decode(std::span<const std::uint8_t> bits) const;

 private:
  int t_;
};

/** Big-endian bits of occupation i on t qubits (0 = up, 1 = down). */
Bits occupation_to_bits(int occupation, int t);
/** Inverse of occupation_to_bits. */
int fock_index(std::span<const std::uint8_t> bits);

/** One term of the ladder decomposition a†_t = Σ_i √i c_i. */
struct LadderComponent {
  int index = 0;        // i, the occupation the component raises to
  double weight = 0.0;  // √i
  PauliSum op;          // c_i, unweighted
};

struct BinaryCreation {
  int t = 0;
  PauliSum op;
  std::vector<LadderComponent> components;  // ordered by index 1 … 2^t - 1
};

/**
 * Truncated creation operator on t qubits, built by the binary recurrence:
 * a†_1 = σ₋, and a†_{t+1} prefixes every component of a†_t with I₊ (low half),
 * inserts √(2^t) σ₋⊗σ₊⊗…⊗σ₊ in the middle, and prefixes every component
 * again with I₋ (high half, indices shifted by 2^t).
 */
BinaryCreation binary_creation(int t);

/** Reference matrix with M(i+1, i) = √(i+1); independent of the recurrence. */
DenseMatrix dense_creation(int t);

PauliSum binary_annihilation(int t);
/** a†a. */
PauliSum binary_number(int t);
/** (a†a)². */
PauliSum number_squared(int t);
/** a†a† + aa. */
PauliSum squeeze_block(int t);

/**
 * One-hot encoding with n_max + 1 qubits; occupation i is qubit i up and
 * every other qubit down.
 */
struct UnaryCreation {
  int n_max = 0;
  PauliSum op;
  int ladder_terms = 0;  // σ₋^i σ₊^{i+1} hops, equal to n_max
};

UnaryCreation unary_creation(int n_max);
PauliSum unary_number(int n_max);
/** Dense basis index of the one-hot state for occupation i. */
std::uint64_t unary_basis_index(int occupation, int n_max);

/** Where the antifermion (N) and fermion (P) qubits sit inside a register. */
struct FermionSiteLayout {
  int antifermion = 0;
  int fermion = 1;
  int n_qubits = 2;

  void validate() const;
};

/** b† = −Z^N σ₊^P (Jordan-Wigner, N ordered before P). */
PauliSum jw_fermion_creation(const FermionSiteLayout& layout);
/** d† = σ₊^N. */
PauliSum jw_antifermion_creation(const FermionSiteLayout& layout);
/** b†b = ½(I + Z^P). */
PauliSum fermion_number(const FermionSiteLayout& layout);
/** d†d = ½(I + Z^N). */
PauliSum antifermion_number(const FermionSiteLayout& layout);

}  // namespace bosonq
