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

#include "bosonq/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace bosonq {

namespace {

constexpr Complex kI{0.0, 1.0};

std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void check_same_width(const PauliSum& a, const PauliSum& b, const char* op) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument(fmt::format(
        "{}: qubit count mismatch ({} vs {})", op, a.n_qubits(), b.n_qubits()));
  }
}

void check_dense_cap(int n) {
  if (n > kDenseQubitCap) {
    throw std::length_error(fmt::format(
        "dense realization capped at {} qubits, got {}", kDenseQubitCap, n));
  }
}

std::string format_real(double v) {
  if (v == 0.0) return "0";
  return fmt::format("{}", v);
}

}  // namespace

char pauli_char(Pauli p) {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(p)];
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': case 'i': case '_': return Pauli::I;
    case 'X': case 'x': return Pauli::X;
    case 'Y': case 'y': return Pauli::Y;
    case 'Z': case 'z': return Pauli::Z;
    default:
      throw std::invalid_argument(fmt::format("not a Pauli letter: '{}'", c));
  }
}

// ---------------------------------------------------------------- PauliString

PauliString::PauliString(int n_qubits) : PauliString(n_qubits, 0, 0, 0) {}

PauliString::PauliString(int n_qubits, std::uint64_t x_mask,
                         std::uint64_t z_mask, int phase)
    : n_(n_qubits), x_(x_mask), z_(z_mask), phase_(((phase % 4) + 4) % 4) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument(
        fmt::format("qubit count {} outside [0, {}]", n_qubits, kMaxQubits));
  }
  if ((x_mask | z_mask) & ~low_mask(n_qubits)) {
    throw std::invalid_argument("Pauli mask has bits beyond the register");
  }
}

PauliString PauliString::from_letters(std::string_view letters) {
  PauliString s(static_cast<int>(letters.size()));
  for (int q = 0; q < s.n_; ++q) s = s.with_letter(q, pauli_from_char(letters[q]));
  return s;
}

Complex PauliString::phase_value() const { return i_power(phase_); }

Pauli PauliString::letter(int qubit) const {
  if (qubit < 0 || qubit >= n_) throw std::out_of_range("qubit index");
  const int bit = n_ - 1 - qubit;
  const bool x = (x_ >> bit) & 1;
  const bool z = (z_ >> bit) & 1;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

PauliString PauliString::with_letter(int qubit, Pauli p) const {
  if (qubit < 0 || qubit >= n_) throw std::out_of_range("qubit index");
  const std::uint64_t bit = std::uint64_t{1} << (n_ - 1 - qubit);
  PauliString r = *this;
  r.x_ &= ~bit;
  r.z_ &= ~bit;
  if (p == Pauli::X || p == Pauli::Y) r.x_ |= bit;
  if (p == Pauli::Z || p == Pauli::Y) r.z_ |= bit;
  return r;
}

PauliString PauliString::with_phase(int phase) const {
  return PauliString(n_, x_, z_, phase);
}

std::string PauliString::letters() const {
  std::string out(static_cast<std::size_t>(n_), 'I');
  for (int q = 0; q < n_; ++q) out[q] = pauli_char(letter(q));
  return out;
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

int PauliString::y_count() const { return std::popcount(x_ & z_); }

std::vector<int> PauliString::support() const {
  std::vector<int> out;
  for (int q = 0; q < n_; ++q) {
    if (letter(q) != Pauli::I) out.push_back(q);
  }
  return out;
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("multiply: qubit count mismatch");
  const std::uint64_t x1 = a.x_, z1 = a.z_, x2 = b.x_, z2 = b.z_;
  // XY = iZ, YZ = iX, ZX = iY; reversed order picks up -i.
  const std::uint64_t cyclic = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) |
                               (~x1 & z1 & x2 & ~z2);
  const std::uint64_t anti = (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2) |
                             (x1 & ~z1 & ~x2 & z2);
  const int k = a.phase_ + b.phase_ + std::popcount(cyclic) -
                std::popcount(anti);
  return PauliString(a.n_, x1 ^ x2, z1 ^ z2, k);
}

PauliString tensor(const PauliString& a, const PauliString& b) {
  const int n = a.n_ + b.n_;
  if (n > kMaxQubits) {
    throw std::length_error(
        fmt::format("tensor product would need {} qubits (max {})", n, kMaxQubits));
  }
  const auto shift = [&](std::uint64_t m) {
    return b.n_ >= 64 ? std::uint64_t{0} : (m << b.n_);
  };
  return PauliString(n, shift(a.x_) | b.x_, shift(a.z_) | b.z_,
                     a.phase_ + b.phase_);
}

bool LetterOrder::operator()(const PauliString& a, const PauliString& b) const {
  if (a.n_qubits() != b.n_qubits()) return a.n_qubits() < b.n_qubits();
  // First differing bit from the top decides, since qubit 0 is the MSB.
  const std::uint64_t diff = (a.x_mask() ^ b.x_mask()) | (a.z_mask() ^ b.z_mask());
  if (diff == 0) return false;
  const int bit = 63 - std::countl_zero(diff);
  const int qubit = a.n_qubits() - 1 - bit;
  return a.letter(qubit) < b.letter(qubit);
}

// ------------------------------------------------------------------ PauliSum

PauliSum::PauliSum(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument(
        fmt::format("qubit count {} outside [0, {}]", n_qubits, kMaxQubits));
  }
}

PauliSum::PauliSum(const PauliString& s, Complex coeff) : n_(s.n_qubits()) {
  accumulate(s, coeff);
}

PauliSum PauliSum::identity(int n_qubits) {
  return PauliSum(PauliString(n_qubits), 1.0);
}

PauliSum PauliSum::from_terms(
    std::span<const std::pair<Complex, std::string>> terms) {
  if (terms.empty()) throw std::invalid_argument("from_terms: no terms");
  PauliSum out(static_cast<int>(terms.front().second.size()));
  for (const auto& [c, letters] : terms) {
    const PauliString s = PauliString::from_letters(letters);
    if (s.n_qubits() != out.n_) {
      throw std::invalid_argument("from_terms: inconsistent string lengths");
    }
    out.accumulate(s, c);
  }
  return out;
}

Complex PauliSum::coefficient(const PauliString& s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? Complex{} : it->second;
}

Complex PauliSum::coefficient(std::string_view letters) const {
  return coefficient(PauliString::from_letters(letters));
}

void PauliSum::accumulate(const PauliString& s, Complex c) {
  if (s.n_qubits() != n_) throw std::invalid_argument("accumulate: qubit count mismatch");
  const Complex folded = c * s.phase_value();
  const PauliString key = s.with_phase(0);
  auto [it, inserted] = terms_.try_emplace(key, folded);
  if (!inserted) it->second += folded;
  if (std::abs(it->second) < kSimplifyTolerance) terms_.erase(it);
}

PauliSum operator+(const PauliSum& a, const PauliSum& b) {
  check_same_width(a, b, "add");
  PauliSum out = a;
  for (const auto& [s, c] : b.terms_) out.accumulate(s, c);
  return out;
}

PauliSum operator-(const PauliSum& a, const PauliSum& b) {
  return a + (-1.0) * b;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  check_same_width(a, b, "multiply");
  PauliSum out(a.n_);
  for (const auto& [sa, ca] : a.terms_) {
    for (const auto& [sb, cb] : b.terms_) out.accumulate(sa * sb, ca * cb);
  }
  return out;
}

PauliSum operator*(Complex c, const PauliSum& a) {
  PauliSum out(a.n_);
  for (const auto& [s, v] : a.terms_) out.accumulate(s, c * v);
  return out;
}

PauliSum add(const PauliSum& a, const PauliSum& b) { return a + b; }
PauliSum scale(const PauliSum& a, Complex c) { return c * a; }
PauliSum multiply(const PauliSum& a, const PauliSum& b) { return a * b; }

PauliSum tensor(const PauliSum& a, const PauliSum& b) {
  PauliSum out(a.n_qubits() + b.n_qubits());
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) out.accumulate(tensor(sa, sb), ca * cb);
  }
  return out;
}

PauliSum tensor_power(const PauliSum& a, int count) {
  PauliSum out = PauliSum::identity(0);
  for (int k = 0; k < count; ++k) out = tensor(out, a);
  return out;
}

PauliSum dagger(const PauliSum& a) {
  // Stored strings are Hermitian, so only the coefficients conjugate.
  PauliSum out(a.n_qubits());
  for (const auto& [s, c] : a.terms()) out.accumulate(s, std::conj(c));
  return out;
}

PauliSum embed(const PauliSum& local, std::span<const int> positions,
               int n_total) {
  if (static_cast<int>(positions.size()) != local.n_qubits()) {
    throw std::invalid_argument("embed: one position per local qubit required");
  }
  std::vector<int> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("embed: positions must be distinct");
  }
  for (int p : positions) {
    if (p < 0 || p >= n_total) throw std::out_of_range("embed: position outside register");
  }
  PauliSum out(n_total);
  for (const auto& [s, c] : local.terms()) {
    PauliString g(n_total);
    for (int j = 0; j < local.n_qubits(); ++j) g = g.with_letter(positions[j], s.letter(j));
    out.accumulate(g, c);
  }
  return out;
}

double max_coefficient_deviation(const PauliSum& a, const PauliSum& b) {
  check_same_width(a, b, "compare");
  double worst = 0.0;
  for (const auto& [s, c] : a.terms()) worst = std::max(worst, std::abs(c - b.coefficient(s)));
  for (const auto& [s, c] : b.terms()) worst = std::max(worst, std::abs(c - a.coefficient(s)));
  return worst;
}

bool approx_equal(const PauliSum& a, const PauliSum& b, double tol) {
  return a.n_qubits() == b.n_qubits() && max_coefficient_deviation(a, b) <= tol;
}

PauliSum single_qubit_atom(Atom kind) {
  const auto make = [](Complex ci, Complex cx, Complex cy, Complex cz) {
    PauliSum out(1);
    out.accumulate(PauliString::from_letters("I"), ci);
    out.accumulate(PauliString::from_letters("X"), cx);
    out.accumulate(PauliString::from_letters("Y"), cy);
    out.accumulate(PauliString::from_letters("Z"), cz);
    return out;
  };
  switch (kind) {
    case Atom::sigma_plus: return make(0, 0.5, 0.5 * kI, 0);
    case Atom::sigma_minus: return make(0, 0.5, -0.5 * kI, 0);
    case Atom::i_plus: return make(0.5, 0, 0, 0.5);
    case Atom::i_minus: return make(0.5, 0, 0, -0.5);
    case Atom::x: return make(0, 1, 0, 0);
    case Atom::y: return make(0, 0, 1, 0);
    case Atom::z: return make(0, 0, 0, 1);
    case Atom::identity: return make(1, 0, 0, 0);
  }
  throw std::invalid_argument("unknown atom");
}

// --------------------------------------------------------------------- dense

DenseMatrix to_dense(const PauliString& s) {
  check_dense_cap(s.n_qubits());
  const std::uint64_t dim = std::uint64_t{1} << s.n_qubits();
  DenseMatrix m = DenseMatrix::Zero(static_cast<Eigen::Index>(dim),
                                    static_cast<Eigen::Index>(dim));
  const Complex base = i_power(s.phase() + s.y_count());
  for (std::uint64_t j = 0; j < dim; ++j) {
    const double sign = (std::popcount(j & s.z_mask()) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(j ^ s.x_mask()), static_cast<Eigen::Index>(j)) = sign * base;
  }
  return m;
}

Complex matrix_element(const PauliSum& a, std::uint64_t row, std::uint64_t col) {
  const std::uint64_t limit = a.n_qubits() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << a.n_qubits()) - 1;
  if (row > limit || col > limit) throw std::out_of_range("basis index outside register");
  Complex out{0.0, 0.0};
  for (const auto& [s, c] : a.terms()) {
    if ((col ^ s.x_mask()) != row) continue;
    const double sign = (std::popcount(col & s.z_mask()) & 1) ? -1.0 : 1.0;
    out += sign * c * i_power(s.y_count());
  }
  return out;
}

DenseMatrix to_dense(const PauliSum& a) {
  check_dense_cap(a.n_qubits());
  const std::uint64_t dim = std::uint64_t{1} << a.n_qubits();
  DenseMatrix m = DenseMatrix::Zero(static_cast<Eigen::Index>(dim),
                                    static_cast<Eigen::Index>(dim));
  for (const auto& [s, c] : a.terms()) {
    const Complex base = c * i_power(s.y_count());
    for (std::uint64_t j = 0; j < dim; ++j) {
      const double sign = (std::popcount(j & s.z_mask()) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(j ^ s.x_mask()), static_cast<Eigen::Index>(j)) += sign * base;
    }
  }
  return m;
}

bool is_hermitian(const PauliSum& a, double tol) {
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [tol](const auto& kv) { return std::abs(kv.second.imag()) <= tol; });
}

Complex expectation(const DenseVector& state, const PauliSum& a) {
  const int n = a.n_qubits();
  if (n > kMaxQubits - 1 || state.size() != (Eigen::Index{1} << n)) {
    throw std::invalid_argument(fmt::format(
        "expectation: state of dimension {} does not match {} qubits", state.size(), n));
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  Complex total{};
  for (const auto& [s, c] : a.terms()) {
    Complex acc{};
    for (std::uint64_t j = 0; j < dim; ++j) {
      const double sign = (std::popcount(j & s.z_mask()) & 1) ? -1.0 : 1.0;
      acc += sign * std::conj(state[static_cast<Eigen::Index>(j ^ s.x_mask())]) *
             state[static_cast<Eigen::Index>(j)];
    }
    total += c * i_power(s.y_count()) * acc;
  }
  return total;
}

bool is_normalized(const DenseVector& state, double tol) {
  return std::abs(state.norm() - 1.0) <= tol;
}

// ---------------------------------------------------------------------- text

std::string to_text(const PauliSum& a) {
  std::string out;
  for (const auto& [s, c] : a.terms()) {
    out += fmt::format("{} {} {}\n", format_real(c.real()), format_real(c.imag()),
                       s.letters());
  }
  return out;
}

PauliSum parse_text(std::string_view text, int n_qubits) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::pair<Complex, std::string>> terms;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    double re = 0.0, im = 0.0;
    std::string letters;
    if (!(fields >> re >> im >> letters)) {
      throw std::invalid_argument(fmt::format("line {}: expected `re im LETTERS`", line_no));
    }
    terms.emplace_back(Complex{re, im}, letters);
  }
  if (terms.empty()) {
    if (n_qubits < 0) throw std::invalid_argument("empty PauliSum text needs a qubit count");
    return PauliSum(n_qubits);
  }
  PauliSum out = PauliSum::from_terms(terms);
  if (n_qubits >= 0 && out.n_qubits() != n_qubits) {
    throw std::invalid_argument("parsed PauliSum has unexpected qubit count");
  }
  return out;
}

}  // namespace bosonq
