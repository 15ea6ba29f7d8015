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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "bosonq/pauli.hpp"

namespace bosonq {

struct MpsOptions {
  int chi_max = 64;
  /** Singular values at or below this are discarded. */
  double cutoff = 1e-13;
  /** Throw instead of truncating when a bond would exceed chi_max. */
  bool strict = false;
};

/** Running account of everything the truncations threw away. */
struct TruncationReport {
  double discarded_weight = 0.0;  // Σ of dropped σ², before renormalization
  int overflow_events = 0;        // bonds that wanted more than chi_max
  int max_bond = 1;
};

/**
 * Matrix product state over qubits in register order. Site q holds two
 * matrices A_q[s] of shape χ_q × χ_{q+1}, with χ_0 = χ_n = 1; s is the qubit
 * value (0 = up).
 *
 * Everything left of center() is left-orthonormal and everything right of it
 * right-orthonormal, so truncating at a bond adjacent to the center is
 * optimal in the 2-norm.
 */
class MpsState {
 public:
  using SiteTensor = std::array<DenseMatrix, 2>;

  static MpsState product(std::span<const std::uint8_t> bits, MpsOptions options = {});

  int n_qubits() const { return static_cast<int>(sites_.size()); }
  int center() const { return center_; }
  const MpsOptions& options() const { return options_; }
  const TruncationReport& report() const { return report_; }
  const SiteTensor& site(int q) const { return sites_.at(static_cast<std::size_t>(q)); }

  /** χ_1 … χ_{n-1}, the internal bonds. */
  std::vector<int> bond_dimensions() const;

  double norm() const;
  /** Full contraction; capped like every dense realization. */
  DenseVector to_dense() const;

  /**
   * Applies a 2^k × 2^k gate. qubits[0] is the most significant bit of the
   * gate's index. One- and two-qubit gates may act anywhere (non-adjacent
   * pairs are routed by adjacent swaps); k ≥ 3 gates need an ascending
   * contiguous block.
   */
  void apply_gate(const DenseMatrix& gate, std::span<const int> qubits);

  /** Σ_terms c ⟨ψ|P|ψ⟩ by transfer-matrix contraction. */
  Complex expectation(const PauliSum& observable) const;

  void move_center(int target);

 private:
  MpsState() = default;

  void apply_block(const DenseMatrix& gate, int first, int width);
  void apply_pair(const DenseMatrix& gate, int a, int b);

  std::vector<SiteTensor> sites_;
  int center_ = 0;
  MpsOptions options_;
  TruncationReport report_;
};

MpsState mps_apply_gate(MpsState state, const DenseMatrix& gate, std::span<const int> qubits);
double mps_expectation(const MpsState& state, const PauliSum& observable);

}  // namespace bosonq
