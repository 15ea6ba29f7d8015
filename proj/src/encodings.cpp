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

#include "bosonq/encodings.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace bosonq {

namespace {

void check_boson_qubits(int t) {
  if (t < 1 || t > kMaxBosonQubits) {
    throw std::out_of_range(
        fmt::format("boson qubit count t={} outside [1, {}]", t, kMaxBosonQubits));
  }
}

}  // namespace

BosonRegister::BosonRegister(int t) : t_(t) { check_boson_qubits(t); }

Bits BosonRegister::encode(int occupation) const {
  return occupation_to_bits(occupation, t_);
}

int BosonRegister::decode(std::span<const std::uint8_t> bits) const {
  if (static_cast<int>(bits.size()) != t_) {
    throw std::invalid_argument("bit vector length does not match register");
  }
  return fock_index(bits);
}

Bits occupation_to_bits(int occupation, int t) {
  if (t < 1 || t > 30) throw std::out_of_range("bit width");
  if (occupation < 0 || occupation > (1 << t) - 1) {
    throw std::out_of_range(fmt::format(
        "occupation {} outside [0, {}] for t={}", occupation, (1 << t) - 1, t));
  }
  Bits bits(static_cast<std::size_t>(t));
  for (int q = 0; q < t; ++q) bits[q] = (occupation >> (t - 1 - q)) & 1;
  return bits;
}

int fock_index(std::span<const std::uint8_t> bits) {
  if (bits.empty() || bits.size() > 30) throw std::out_of_range("bit width");
  int i = 0;
  for (std::uint8_t b : bits) {
    if (b > 1) throw std::invalid_argument("bits must be 0 or 1");
    i = (i << 1) | b;
  }
  return i;
}

BinaryCreation binary_creation(int t) {
  check_boson_qubits(t);
  const PauliSum i_plus = single_qubit_atom(Atom::i_plus);
  const PauliSum i_minus = single_qubit_atom(Atom::i_minus);
  const PauliSum s_minus = single_qubit_atom(Atom::sigma_minus);
  const PauliSum s_plus = single_qubit_atom(Atom::sigma_plus);

  std::vector<LadderComponent> comps{{1, 1.0, s_minus}};
  for (int width = 1; width < t; ++width) {
    const int half = 1 << width;
    std::vector<LadderComponent> next;
    next.reserve(static_cast<std::size_t>(2 * half - 1));
    for (const auto& c : comps) {
      next.push_back({c.index, c.weight, tensor(i_plus, c.op)});
    }
    next.push_back({half, std::sqrt(static_cast<double>(half)),
                    tensor(s_minus, tensor_power(s_plus, width))});
    for (const auto& c : comps) {
      const int i = c.index + half;
      next.push_back({i, std::sqrt(static_cast<double>(i)), tensor(i_minus, c.op)});
    }
    comps = std::move(next);
  }

  PauliSum op(t);
  for (const auto& c : comps) op = op + c.weight * c.op;
  return {t, std::move(op), std::move(comps)};
}

DenseMatrix dense_creation(int t) {
  if (t < 1 || t > kDenseQubitCap) {
    throw std::out_of_range(fmt::format("dense_creation: t={} outside [1, {}]", t, kDenseQubitCap));
  }
  const Eigen::Index dim = Eigen::Index{1} << t;
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i + 1 < dim; ++i) {
    m(i + 1, i) = std::sqrt(static_cast<double>(i + 1));
  }
  return m;
}

PauliSum binary_annihilation(int t) { return dagger(binary_creation(t).op); }

PauliSum binary_number(int t) {
  const PauliSum up = binary_creation(t).op;
  return up * dagger(up);
}

PauliSum number_squared(int t) {
  const PauliSum n = binary_number(t);
  return n * n;
}

PauliSum squeeze_block(int t) {
  const PauliSum up = binary_creation(t).op;
  const PauliSum down = dagger(up);
  return up * up + down * down;
}

UnaryCreation unary_creation(int n_max) {
  if (n_max < 1) throw std::invalid_argument("unary_creation: n_max must be >= 1");
  const int n = n_max + 1;
  const PauliSum hop = tensor(single_qubit_atom(Atom::sigma_minus),
                              single_qubit_atom(Atom::sigma_plus));
  PauliSum op(n);
  for (int i = 0; i < n_max; ++i) {
    const int at[] = {i, i + 1};
    op = op + std::sqrt(static_cast<double>(i + 1)) * embed(hop, at, n);
  }
  return {n_max, std::move(op), n_max};
}

PauliSum unary_number(int n_max) {
  if (n_max < 1) throw std::invalid_argument("unary_number: n_max must be >= 1");
  const int n = n_max + 1;
  const PauliSum up_projector = single_qubit_atom(Atom::i_plus);
  PauliSum op(n);
  for (int i = 1; i <= n_max; ++i) {
    const int at[] = {i};
    op = op + static_cast<double>(i) * embed(up_projector, at, n);
  }
  return op;
}

std::uint64_t unary_basis_index(int occupation, int n_max) {
  if (occupation < 0 || occupation > n_max) throw std::out_of_range("unary occupation");
  const int n = n_max + 1;
  const std::uint64_t all_down = (std::uint64_t{1} << n) - 1;
  return all_down & ~(std::uint64_t{1} << (n - 1 - occupation));
}

void FermionSiteLayout::validate() const {
  if (antifermion == fermion) {
    throw std::invalid_argument("fermion and antifermion qubits must differ");
  }
  if (antifermion < 0 || fermion < 0 || antifermion >= n_qubits || fermion >= n_qubits) {
    throw std::out_of_range("fermion layout index outside register");
  }
}

PauliSum jw_fermion_creation(const FermionSiteLayout& layout) {
  layout.validate();
  const int at[] = {layout.antifermion, layout.fermion};
  const PauliSum local = tensor(single_qubit_atom(Atom::z), single_qubit_atom(Atom::sigma_plus));
  return -1.0 * embed(local, at, layout.n_qubits);
}

PauliSum jw_antifermion_creation(const FermionSiteLayout& layout) {
  layout.validate();
  const int at[] = {layout.antifermion};
  return embed(single_qubit_atom(Atom::sigma_plus), at, layout.n_qubits);
}

PauliSum fermion_number(const FermionSiteLayout& layout) {
  const PauliSum up = jw_fermion_creation(layout);
  return up * dagger(up);
}

PauliSum antifermion_number(const FermionSiteLayout& layout) {
  const PauliSum up = jw_antifermion_creation(layout);
  return up * dagger(up);
}

}  // namespace bosonq
