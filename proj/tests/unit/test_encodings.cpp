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

#include <cmath>

#include "bosonq/encodings.hpp"
#include "support/oracle.hpp"

using namespace bosonq;
namespace o = bosonq::oracle;

TEST_CASE("register bits are big-endian with up = 0") {
  CHECK(occupation_to_bits(0, 3) == Bits{0, 0, 0});
  CHECK(occupation_to_bits(6, 3) == Bits{1, 1, 0});
  CHECK(occupation_to_bits(7, 3) == Bits{1, 1, 1});
  for (int t = 1; t <= 6; ++t) {
    const BosonRegister reg(t);
    CHECK(reg.truncation() == (1 << t) - 1);
    for (int i = 0; i <= reg.truncation(); ++i) {
      CHECK(reg.decode(reg.encode(i)) == i);
      CHECK(fock_index(occupation_to_bits(i, t)) == i);
    }
    CHECK_THROWS(reg.encode(reg.truncation() + 1));
    CHECK_THROWS(reg.encode(-1));
  }
  CHECK_THROWS(BosonRegister(0));
}

TEST_CASE("recurrence reproduces the truncated ladder matrix") {
  for (int t = 1; t <= 6; ++t) {
    const o::Mat want = o::annihilation(t).adjoint();
    CHECK(o::max_abs(to_dense(binary_creation(t).op) - want) < 1e-12);
    CHECK(o::max_abs(dense_creation(t) - want) == 0.0);
    CHECK(o::max_abs(to_dense(binary_annihilation(t)) - o::annihilation(t)) < 1e-12);
  }
  CHECK_THROWS_AS(binary_creation(0), std::out_of_range);
  CHECK_THROWS_AS(binary_creation(kMaxBosonQubits + 1), std::out_of_range);
}

TEST_CASE("ladder components are single transitions") {
  for (int t = 1; t <= 5; ++t) {
    const BinaryCreation bc = binary_creation(t);
    REQUIRE(bc.components.size() == static_cast<std::size_t>((1 << t) - 1));
    PauliSum sum(t);
    for (std::size_t k = 0; k < bc.components.size(); ++k) {
      const LadderComponent& c = bc.components[k];
      CHECK(c.index == static_cast<int>(k) + 1);
      CHECK(c.weight == doctest::Approx(std::sqrt(c.index)).epsilon(1e-15));
      o::Mat want = o::Mat::Zero(Eigen::Index{1} << t, Eigen::Index{1} << t);
      want(c.index, c.index - 1) = 1.0;
      CHECK(o::max_abs(to_dense(c.op) - want) < 1e-15);
      sum = sum + Complex{c.weight, 0.0} * c.op;
    }
    CHECK(approx_equal(sum, bc.op));
  }
}

TEST_CASE("two-qubit creation operator in atom form") {
  // I+ ⊗ σ- + √2 σ- ⊗ σ+ + √3 I- ⊗ σ-
  o::Mat ip(2, 2), im(2, 2);
  ip << 1, 0, 0, 0;
  im << 0, 0, 0, 1;
  const o::Mat want = o::kron(ip, o::sigma_minus()) + std::sqrt(2.0) * o::kron(o::sigma_minus(), o::sigma_plus()) +
                      std::sqrt(3.0) * o::kron(im, o::sigma_minus());
  CHECK(o::max_abs(to_dense(binary_creation(2).op) - want) < 1e-15);
}

TEST_CASE("truncated commutator") {
  for (int t = 1; t <= 5; ++t) {
    const PauliSum a = binary_annihilation(t);
    const PauliSum ad = binary_creation(t).op;
    const o::Mat comm = to_dense(a * ad - ad * a);
    const int top = (1 << t) - 1;
    for (int m = 0; m <= top; ++m) {
      const double want = m < top ? 1.0 : 1.0 - (1 << t);
      CHECK(std::abs(comm(m, m) - want) < 1e-12);
    }
    CHECK(o::max_abs(comm - comm.diagonal().asDiagonal().toDenseMatrix()) < 1e-12);
  }
}

TEST_CASE("number, squared number and squeeze blocks") {
  for (int t = 1; t <= 4; ++t) {
    const o::Mat a = o::annihilation(t);
    const o::Mat n = a.adjoint() * a;
    for (Eigen::Index i = 0; i < n.rows(); ++i) CHECK(std::abs(n(i, i) - static_cast<double>(i)) < 1e-12);
    CHECK(o::max_abs(to_dense(binary_number(t)) - n) < 1e-12);
    CHECK(o::max_abs(to_dense(number_squared(t)) - n * n) < 1e-12);
    CHECK(o::max_abs(to_dense(squeeze_block(t)) - (a.adjoint() * a.adjoint() + a * a)) < 1e-12);
  }
  // n = ½(7I − 4Z₁ − 2Z₂ − Z₃)
  const PauliSum n3 = binary_number(3);
  CHECK(n3.size() == 4);
  CHECK(std::abs(n3.coefficient("III") - 3.5) < 1e-15);
  CHECK(std::abs(n3.coefficient("ZII") + 2.0) < 1e-15);
  CHECK(std::abs(n3.coefficient("IZI") + 1.0) < 1e-15);
  CHECK(std::abs(n3.coefficient("IIZ") + 0.5) < 1e-15);
}

TEST_CASE("unary encoding") {
  for (int n_max = 1; n_max <= 7; ++n_max) {
    const UnaryCreation u = unary_creation(n_max);
    CHECK(u.op.n_qubits() == n_max + 1);
    CHECK(u.ladder_terms == n_max);
    const o::Mat d = to_dense(u.op);
    const o::Mat num = to_dense(unary_number(n_max));
    for (int i = 0; i <= n_max; ++i) {
      const std::uint64_t idx = unary_basis_index(i, n_max);
      // Qubit i up (0), every other qubit down (1); qubit 0 is the top bit.
      const std::uint64_t all = (std::uint64_t{1} << (n_max + 1)) - 1;
      CHECK(idx == (all ^ (std::uint64_t{1} << (n_max - i))));
      const o::Vec v = o::basis(n_max + 1, idx);
      CHECK(std::abs(v.dot(num * v) - static_cast<double>(i)) < 1e-12);
      if (i < n_max) {
        const o::Vec w = o::basis(n_max + 1, unary_basis_index(i + 1, n_max));
        CHECK(std::abs(w.dot(d * v) - std::sqrt(i + 1.0)) < 1e-12);
      }
    }
  }
  CHECK_THROWS(unary_creation(0));
  CHECK_THROWS(unary_basis_index(4, 3));
}

TEST_CASE("Jordan-Wigner fermion pair") {
  const FermionSiteLayout fl;
  const o::Mat bd = to_dense(jw_fermion_creation(fl));
  const o::Mat dd = to_dense(jw_antifermion_creation(fl));
  // b† = −Z^N σ₊^P, d† = σ₊^N, qubit order [N, P].
  CHECK(o::max_abs(bd + o::kron(o::letter('Z'), o::sigma_plus())) < 1e-15);
  CHECK(o::max_abs(dd - o::kron(o::sigma_plus(), o::letter('I'))) < 1e-15);

  const o::Mat b = bd.adjoint();
  const o::Mat d = dd.adjoint();
  const o::Mat id = o::identity(2);
  const auto anti = [](const o::Mat& x, const o::Mat& y) { return x * y + y * x; };
  CHECK(o::max_abs(anti(b, bd) - id) < 1e-15);
  CHECK(o::max_abs(anti(d, dd) - id) < 1e-15);
  CHECK(o::max_abs(anti(b, d)) < 1e-15);
  CHECK(o::max_abs(anti(b, dd)) < 1e-15);
  CHECK(o::max_abs(anti(bd, dd)) < 1e-15);
  CHECK(o::max_abs(b * b) < 1e-15);

  CHECK(o::max_abs(to_dense(fermion_number(fl)) - bd * b) < 1e-15);
  CHECK(o::max_abs(to_dense(antifermion_number(fl)) - dd * d) < 1e-15);
  CHECK(o::max_abs(to_dense(fermion_number(fl)) - 0.5 * (id + o::letters("IZ"))) < 1e-15);

  // Occupied means up: b† maps the empty pair |11> to |10>.
  const o::Vec empty = o::basis(2, 0b11);
  CHECK(std::abs((bd * empty)(0b10)) == doctest::Approx(1.0));

  // Embedded layout with bosons after the pair.
  const FermionSiteLayout wide{0, 1, 4};
  CHECK(jw_fermion_creation(wide).n_qubits() == 4);
  CHECK_THROWS(FermionSiteLayout({0, 0, 2}).validate());
  CHECK_THROWS(FermionSiteLayout({0, 2, 2}).validate());
}
