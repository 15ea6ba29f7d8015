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

#include "bosonq/mps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/QR>
#include <Eigen/SVD>
#include <fmt/format.h>

namespace bosonq {

namespace {

using Index = Eigen::Index;

DenseMatrix swap_gate() {
  DenseMatrix s = DenseMatrix::Zero(4, 4);
  s(0, 0) = s(1, 2) = s(2, 1) = s(3, 3) = 1.0;
  return s;
}

}  // namespace

MpsState MpsState::product(std::span<const std::uint8_t> bits, MpsOptions options) {
  if (bits.empty()) throw std::invalid_argument("MPS needs at least one qubit");
  if (options.chi_max < 1) throw std::invalid_argument("chi_max must be >= 1");
  MpsState st;
  st.options_ = options;
  st.sites_.resize(bits.size());
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits[q] > 1) throw std::invalid_argument("bits must be 0 or 1");
    for (int s = 0; s < 2; ++s) {
      st.sites_[q][s] = DenseMatrix::Constant(1, 1, s == bits[q] ? 1.0 : 0.0);
    }
  }
  return st;
}

std::vector<int> MpsState::bond_dimensions() const {
  std::vector<int> out;
  for (std::size_t q = 0; q + 1 < sites_.size(); ++q) {
    out.push_back(static_cast<int>(sites_[q][0].cols()));
  }
  return out;
}

double MpsState::norm() const {
  // The center tensor carries the whole norm.
  const SiteTensor& c = sites_[static_cast<std::size_t>(center_)];
  return std::sqrt(c[0].squaredNorm() + c[1].squaredNorm());
}

DenseVector MpsState::to_dense() const {
  const int n = n_qubits();
  if (n > kDenseQubitCap) throw std::length_error("MPS too wide to densify");
  // rows: accumulated basis index, cols: right bond
  std::vector<DenseMatrix> partial{DenseMatrix::Identity(1, 1)};
  for (int q = 0; q < n; ++q) {
    std::vector<DenseMatrix> next;
    next.reserve(partial.size() * 2);
    for (const auto& p : partial) {
      for (int s = 0; s < 2; ++s) next.push_back(p * sites_[q][s]);
    }
    partial = std::move(next);
  }
  DenseVector out(static_cast<Index>(partial.size()));
  for (std::size_t i = 0; i < partial.size(); ++i) out[static_cast<Index>(i)] = partial[i](0, 0);
  return out;
}

void MpsState::move_center(int target) {
  if (target < 0 || target >= n_qubits()) throw std::out_of_range("MPS center");
  while (center_ < target) {
    SiteTensor& a = sites_[center_];
    const Index chl = a[0].rows();
    const Index chr = a[0].cols();
    DenseMatrix m(2 * chl, chr);
    m << a[0], a[1];
    Eigen::HouseholderQR<DenseMatrix> qr(m);
    const Index k = std::min(2 * chl, chr);
    const DenseMatrix q = qr.householderQ() * DenseMatrix::Identity(2 * chl, k);
    const DenseMatrix r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
    a[0] = q.topRows(chl);
    a[1] = q.bottomRows(chl);
    SiteTensor& b = sites_[center_ + 1];
    b[0] = r * b[0];
    b[1] = r * b[1];
    ++center_;
  }
  while (center_ > target) {
    SiteTensor& a = sites_[center_];
    const Index chl = a[0].rows();
    const Index chr = a[0].cols();
    DenseMatrix m(chl, 2 * chr);
    m << a[0], a[1];
    // m = L Q with L = R†, Q = Q†  from the QR of m†.
    Eigen::HouseholderQR<DenseMatrix> qr(m.adjoint());
    const Index k = std::min(chl, 2 * chr);
    const DenseMatrix q = qr.householderQ() * DenseMatrix::Identity(2 * chr, k);
    const DenseMatrix r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
    const DenseMatrix qa = q.adjoint();
    a[0] = qa.leftCols(chr);
    a[1] = qa.rightCols(chr);
    const DenseMatrix l = r.adjoint();
    SiteTensor& b = sites_[center_ - 1];
    b[0] = b[0] * l;
    b[1] = b[1] * l;
    --center_;
  }
}

void MpsState::apply_block(const DenseMatrix& gate, int first, int width) {
  const Index dim = Index{1} << width;
  move_center(first);

  // theta[p]: χ_first × χ_{first+width}, p = bits of the block, MSB first.
  std::vector<DenseMatrix> theta{DenseMatrix::Identity(sites_[first][0].rows(), sites_[first][0].rows())};
  for (int j = 0; j < width; ++j) {
    std::vector<DenseMatrix> next;
    next.reserve(theta.size() * 2);
    for (const auto& m : theta) {
      for (int s = 0; s < 2; ++s) next.push_back(m * sites_[first + j][s]);
    }
    theta = std::move(next);
  }
  std::vector<DenseMatrix> rotated(theta.size(),
                                   DenseMatrix::Zero(theta[0].rows(), theta[0].cols()));
  for (Index p = 0; p < dim; ++p) {
    for (Index pp = 0; pp < dim; ++pp) {
      const Complex u = gate(p, pp);
      if (u != Complex{}) rotated[p] += u * theta[pp];
    }
  }
  theta = std::move(rotated);

  const Index chr = theta[0].cols();
  Index chl = theta[0].rows();
  for (int j = 0; j + 1 < width; ++j) {
    const Index rest = Index{1} << (width - j - 1);
    DenseMatrix m(2 * chl, rest * chr);
    for (int s = 0; s < 2; ++s) {
      for (Index r = 0; r < rest; ++r) {
        m.block(s * chl, r * chr, chl, chr) = theta[s * rest + r];
      }
    }
    Eigen::BDCSVD<DenseMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();

    Index keep = 0;
    while (keep < sv.size() && sv[keep] > options_.cutoff) ++keep;
    keep = std::max<Index>(keep, 1);
    if (keep > options_.chi_max) {
      if (options_.strict) {
        throw std::runtime_error(fmt::format(
            "bond {} needs dimension {} > chi_max {}", first + j, keep, options_.chi_max));
      }
      ++report_.overflow_events;
      keep = options_.chi_max;
    }
    const double total = sv.squaredNorm();
    const double kept = sv.head(keep).squaredNorm();
    report_.discarded_weight += total - kept;
    report_.max_bond = std::max(report_.max_bond, static_cast<int>(keep));

    const DenseMatrix u = svd.matrixU().leftCols(keep);
    DenseMatrix sv_dagger = sv.head(keep).cast<Complex>().asDiagonal() *
                            svd.matrixV().leftCols(keep).adjoint();
    if (kept > 0.0 && total > kept) sv_dagger *= std::sqrt(total / kept);

    sites_[first + j][0] = u.topRows(chl);
    sites_[first + j][1] = u.bottomRows(chl);
    std::vector<DenseMatrix> next(static_cast<std::size_t>(rest));
    for (Index r = 0; r < rest; ++r) next[r] = sv_dagger.middleCols(r * chr, chr);
    theta = std::move(next);
    chl = keep;
  }
  sites_[first + width - 1][0] = theta[0];
  sites_[first + width - 1][1] = theta[1];
  center_ = first + width - 1;
}

void MpsState::apply_pair(const DenseMatrix& gate, int a, int b) {
  static const DenseMatrix kSwap = swap_gate();
  if (a > b) {
    apply_pair(kSwap * gate * kSwap, b, a);
    return;
  }
  for (int q = b - 1; q > a; --q) apply_block(kSwap, q, 2);
  apply_block(gate, a, 2);
  for (int q = a + 1; q < b; ++q) apply_block(kSwap, q, 2);
}

void MpsState::apply_gate(const DenseMatrix& gate, std::span<const int> qubits) {
  const int k = static_cast<int>(qubits.size());
  if (k == 0) throw std::invalid_argument("gate needs at least one qubit");
  const Index dim = Index{1} << k;
  if (gate.rows() != dim || gate.cols() != dim) {
    throw std::invalid_argument(fmt::format("gate on {} qubits must be {}x{}", k, dim, dim));
  }
  for (int q : qubits) {
    if (q < 0 || q >= n_qubits()) throw std::out_of_range("gate qubit outside register");
  }
  if (k == 1) {
    apply_block(gate, qubits[0], 1);
  } else if (k == 2) {
    if (qubits[0] == qubits[1]) throw std::invalid_argument("gate qubits must differ");
    apply_pair(gate, qubits[0], qubits[1]);
  } else {
    for (int j = 1; j < k; ++j) {
      if (qubits[j] != qubits[0] + j) {
        throw std::invalid_argument("gates on 3+ qubits need an ascending contiguous block");
      }
    }
    apply_block(gate, qubits[0], k);
  }
}

Complex MpsState::expectation(const PauliSum& observable) const {
  if (observable.n_qubits() != n_qubits()) {
    throw std::invalid_argument("observable width does not match the MPS");
  }
  const Complex kI{0.0, 1.0};
  Complex total{};
  for (const auto& [s, c] : observable.terms()) {
    DenseMatrix env = DenseMatrix::Identity(1, 1);
    for (int q = 0; q < n_qubits(); ++q) {
      const Pauli p = s.letter(q);
      const bool flip = p == Pauli::X || p == Pauli::Y;
      DenseMatrix next = DenseMatrix::Zero(sites_[q][0].cols(), sites_[q][0].cols());
      for (int bit = 0; bit < 2; ++bit) {
        Complex v = 1.0;
        if ((p == Pauli::Z || p == Pauli::Y) && bit == 1) v = -v;
        if (p == Pauli::Y) v *= kI;
        const int out = flip ? bit ^ 1 : bit;
        next += v * (sites_[q][out].adjoint() * env * sites_[q][bit]);
      }
      env = std::move(next);
    }
    total += c * env(0, 0);
  }
  return total;
}

MpsState mps_apply_gate(MpsState state, const DenseMatrix& gate, std::span<const int> qubits) {
  state.apply_gate(gate, qubits);
  return state;
}

double mps_expectation(const MpsState& state, const PauliSum& observable) {
  return state.expectation(observable).real();
}

}  // namespace bosonq
