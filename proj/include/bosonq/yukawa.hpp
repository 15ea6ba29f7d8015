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

// Interaction-picture Yukawa coupling H_I = g κ Σ_x ψ†ψ φ on a 1D lattice,
// with one fermion/antifermion pair and one truncated boson per site
// (ħ = c = 1). Two independent constructions are provided: the operator
// composition from the encodings module, and the closed-form t = 2 Pauli
// expansion with coefficients η, ξ₁…ξ₇, ζ₁…ζ₈.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bosonq/encodings.hpp"
#include "bosonq/pauli.hpp"

namespace bosonq {

struct YukawaParams {
  double g = 1.0;       // coupling constant
  double kappa = 0.5;   // lattice spacing
  double omega = 6.95;  // fermion mass
  double omega0 = 1.0;  // boson mass
  int t = 2;            // boson qubits per site
  int n_x = 1;          // lattice sites

  /** Throws std::invalid_argument naming the offending field. */
  void validate() const;
};

/** Time-dependent coefficients of the t = 2 closed form. xi[0] is ξ₁. */
struct CoefficientSet {
  double eta = 0.0;
  std::array<double, 7> xi{};
  std::array<double, 8> zeta{};
  double time = 0.0;
};

CoefficientSet coefficients(const YukawaParams& params, double time);

/**
 * Qubit placement: per site [N, P, boson_0 … boson_{t-1}], sites consecutive.
 */
class SiteLayout {
 public:
  SiteLayout(int n_x, int t);
  explicit SiteLayout(const YukawaParams& p) : SiteLayout(p.n_x, p.t) {}

  int n_sites() const { return n_x_; }
  int boson_qubits() const { return t_; }
  int site_width() const { return 2 + t_; }
  int n_qubits() const { return n_x_ * site_width(); }

  int offset(int site) const;
  int antifermion(int site) const { return offset(site); }
  int fermion(int site) const { return offset(site) + 1; }
  int boson(int site, int j) const;
  std::vector<int> site_qubits(int site) const;
  int site_of(int qubit) const;

 private:
  int n_x_;
  int t_;
};

/**
 * Time-independent pieces of the on-site block, prefactor included:
 *   H_x(t) = e^{-iω₀t} (steady + e^{2iωt} pair_create + e^{-2iωt} pair_annihilate) + h.c.
 * steady is (b†b + d d†) a, pair_create is b†d† a, pair_annihilate is d b a.
 */
struct SiteOperatorParts {
  PauliSum steady;
  PauliSum pair_create;
  PauliSum pair_annihilate;
};

SiteOperatorParts site_operator_parts(const YukawaParams& params);

/** On-site block H_x on 2 + t qubits, built by operator composition. */
PauliSum site_hamiltonian(const YukawaParams& params, double time);

/** Full register Hamiltonian from the operator composition; any t. */
PauliSum hamiltonian_general(const YukawaParams& params, double time);

/** Full register Hamiltonian from the t = 2 closed form. Throws unless t == 2. */
PauliSum hamiltonian_t2(const YukawaParams& params, double time);

/** Per-site observables n_P, n_N and n_b summed over all sites. */
struct DensityOperators {
  PauliSum fermion;      // Σ_x n_{x,P}
  PauliSum antifermion;  // Σ_x n_{x,N}
  PauliSum boson;        // Σ_x n_{x,b}
};

DensityOperators density_operators(const YukawaParams& params);

/** Set when the register is too wide for dense cross-checks. */
std::optional<std::string> register_warning(const YukawaParams& params);

}  // namespace bosonq
