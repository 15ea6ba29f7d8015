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

#include "bosonq/yukawa.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

namespace bosonq {

namespace {

const Complex kI{0.0, 1.0};

PauliSum sum_over_sites(const PauliSum& local, const SiteLayout& layout) {
  PauliSum out(layout.n_qubits());
  for (int x = 0; x < layout.n_sites(); ++x) {
    out = out + embed(local, layout.site_qubits(x), layout.n_qubits());
  }
  return out;
}

}  // namespace

void YukawaParams::validate() const {
  const auto fail = [](const char* key, const std::string& why) {
    throw std::invalid_argument(fmt::format("{}: {}", key, why));
  };
  if (!std::isfinite(g)) fail("g", "must be finite");
  if (!(kappa > 0.0) || !std::isfinite(kappa)) fail("kappa", "must be > 0");
  if (!(omega > 0.0) || !std::isfinite(omega)) fail("omega", "must be > 0");
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) fail("omega0", "must be > 0");
  if (t < 1 || t > kMaxBosonQubits) fail("t", fmt::format("must be in [1, {}]", kMaxBosonQubits));
  if (n_x < 1) fail("n_x", "must be >= 1");
  if (n_x * (2 + t) > kMaxQubits) fail("n_x", fmt::format("register exceeds {} qubits", kMaxQubits));
}

CoefficientSet coefficients(const YukawaParams& p, double time) {
  p.validate();
  const double s3 = std::sqrt(3.0);
  const double s2 = std::sqrt(2.0);
  const double c2 = std::cos(2.0 * p.omega * time);
  const double sn2 = std::sin(2.0 * p.omega * time);
  const double c0 = std::cos(p.omega0 * time);
  const double sn0 = std::sin(p.omega0 * time);

  CoefficientSet c;
  c.time = time;
  c.eta = p.g * p.kappa / (8.0 * p.omega * std::sqrt(2.0 * p.omega0));
  c.xi = {2.0, 1.0, -1.0, -c2, c2, sn2, sn2};
  c.zeta = {(1.0 + s3) * c0, (1.0 - s3) * c0, s2 * c0,        -s2 * sn0,
            (1.0 + s3) * sn0, (1.0 - s3) * sn0, s2 * sn0, s2 * c0};
  return c;
}

SiteLayout::SiteLayout(int n_x, int t) : n_x_(n_x), t_(t) {
  if (n_x < 1) throw std::invalid_argument("n_x: must be >= 1");
  if (t < 1) throw std::invalid_argument("t: must be >= 1");
  if (n_x * (2 + t) > kMaxQubits) throw std::invalid_argument("register too wide");
}

int SiteLayout::offset(int site) const {
  if (site < 0 || site >= n_x_) throw std::out_of_range("site index");
  return site * site_width();
}

int SiteLayout::boson(int site, int j) const {
  if (j < 0 || j >= t_) throw std::out_of_range("boson qubit index");
  return offset(site) + 2 + j;
}

std::vector<int> SiteLayout::site_qubits(int site) const {
  std::vector<int> out(static_cast<std::size_t>(site_width()));
  for (int k = 0; k < site_width(); ++k) out[k] = offset(site) + k;
  return out;
}

int SiteLayout::site_of(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits()) throw std::out_of_range("qubit index");
  return qubit / site_width();
}

SiteOperatorParts site_operator_parts(const YukawaParams& p) {
  p.validate();
  const int width = 2 + p.t;
  const FermionSiteLayout fl{0, 1, width};

  const PauliSum b_up = jw_fermion_creation(fl);
  const PauliSum d_up = jw_antifermion_creation(fl);
  const PauliSum b_dn = dagger(b_up);
  const PauliSum d_dn = dagger(d_up);
  const PauliSum a_dn = tensor(PauliSum::identity(2), binary_annihilation(p.t));

  const double prefactor = p.g * p.kappa / (2.0 * p.omega * std::sqrt(2.0 * p.omega0));
  // d d† stays in the order it arises from ψ†ψ; it is not normal-ordered.
  return {prefactor * ((b_up * b_dn + d_dn * d_up) * a_dn),
          prefactor * ((b_up * d_up) * a_dn),
          prefactor * ((d_dn * b_dn) * a_dn)};
}

PauliSum site_hamiltonian(const YukawaParams& p, double time) {
  const SiteOperatorParts parts = site_operator_parts(p);
  const Complex pair_phase = std::exp(2.0 * kI * p.omega * time);
  const PauliSum half =
      std::exp(-kI * p.omega0 * time) *
      (parts.steady + pair_phase * parts.pair_create + std::conj(pair_phase) * parts.pair_annihilate);
  return half + dagger(half);
}

PauliSum hamiltonian_general(const YukawaParams& p, double time) {
  return sum_over_sites(site_hamiltonian(p, time), SiteLayout(p));
}

PauliSum hamiltonian_t2(const YukawaParams& p, double time) {
  p.validate();
  if (p.t != 2) {
    throw std::invalid_argument(fmt::format("t: closed form needs t = 2, got {}", p.t));
  }
  const CoefficientSet c = coefficients(p, time);

  // Local letters are ordered [N, P]; e.g. σ_x^P σ_y^N is "YX".
  const std::pair<double, const char*> fermionic[] = {
      {c.xi[0], "II"}, {c.xi[1], "IZ"}, {c.xi[2], "ZI"}, {c.xi[3], "XX"},
      {c.xi[4], "YY"}, {c.xi[5], "YX"}, {c.xi[6], "XY"}};
  const std::pair<double, const char*> bosonic[] = {
      {c.zeta[0], "IX"}, {c.zeta[1], "ZX"}, {c.zeta[2], "XX"}, {c.zeta[3], "XY"},
      {c.zeta[4], "IY"}, {c.zeta[5], "ZY"}, {c.zeta[6], "YX"}, {c.zeta[7], "YY"}};

  PauliSum site(4);
  for (const auto& [xf, fl] : fermionic) {
    for (const auto& [zb, bl] : bosonic) {
      site.accumulate(PauliString::from_letters(std::string(fl) + bl), c.eta * xf * zb);
    }
  }
  return sum_over_sites(site, SiteLayout(p));
}

DensityOperators density_operators(const YukawaParams& p) {
  p.validate();
  const int width = 2 + p.t;
  const FermionSiteLayout fl{0, 1, width};
  const PauliSum n_b = tensor(PauliSum::identity(2), binary_number(p.t));
  const SiteLayout layout(p);
  return {sum_over_sites(fermion_number(fl), layout),
          sum_over_sites(antifermion_number(fl), layout),
          sum_over_sites(n_b, layout)};
}

std::optional<std::string> register_warning(const YukawaParams& p) {
  const int n = p.n_x * (2 + p.t);
  if (n > kDenseQubitCap) {
    return fmt::format(
        "register of {} qubits exceeds the dense verification cap of {}", n, kDenseQubitCap);
  }
  return std::nullopt;
}

}  // namespace bosonq
