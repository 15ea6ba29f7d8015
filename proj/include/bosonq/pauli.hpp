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

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace bosonq {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

/** Coefficients below this magnitude are dropped on canonicalization. */
inline constexpr double kSimplifyTolerance = 1e-14;

/** Largest register that to_dense / expectation will materialize. */
inline constexpr int kDenseQubitCap = 14;

/** Bitmask storage limits a register to 64 qubits. */
inline constexpr int kMaxQubits = 64;

/** Symbols for the Pauli operators (and identity) */
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/**
 * A Pauli string on n qubits times a unit phase i^k.
 *
 * Qubit 0 is the leftmost letter and the most significant bit of a dense
 * basis index. The masks are stored in basis-index space, so qubit q lives at
 * bit (n - 1 - q); tensoring is then a shift-and-or.
 */
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n_qubits);
  PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask,
              int phase = 0);

  /** Parses letters such as "XIZY"; qubit 0 first. */
  static PauliString from_letters(std::string_view letters);

  int n_qubits() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  /** Exponent k of the phase i^k, always in [0, 4). */
  int phase() const { return phase_; }
  Complex phase_value() const;

  Pauli letter(int qubit) const;
  PauliString with_letter(int qubit, Pauli p) const;
  PauliString with_phase(int phase) const;
  std::string letters() const;

  bool is_identity() const { return x_ == 0 && z_ == 0; }
  int weight() const;
  int y_count() const;
  /** Qubits carrying a non-identity letter, ascending. */
  std::vector<int> support() const;

  friend PauliString operator*(const PauliString& a, const PauliString& b);
  friend PauliString tensor(const PauliString& a, const PauliString& b);

  bool operator==(const PauliString&) const = default;

 private:
  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

/** Lexicographic letter order (I < X < Y < Z, qubit 0 first); ignores phase. */
struct LetterOrder {
  bool operator()(const PauliString& a, const PauliString& b) const;
};

/**
 * Complex-weighted sum of Pauli strings in canonical form: every stored
 * string carries phase +1 and no coefficient is below kSimplifyTolerance.
 * Values are immutable once built; all algebra returns new sums.
 */
class PauliSum {
 public:
  using TermMap = std::map<PauliString, Complex, LetterOrder>;

  PauliSum() = default;
  explicit PauliSum(int n_qubits);
  PauliSum(const PauliString& s, Complex coeff = 1.0);

  static PauliSum identity(int n_qubits);
  /** Builds from (coefficient, letters) pairs; all letter strings must agree in length. */
  static PauliSum from_terms(
      std::span<const std::pair<Complex, std::string>> terms);

  int n_qubits() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  /** Coefficient of the given letters, zero when absent. */
  Complex coefficient(const PauliString& s) const;
  Complex coefficient(std::string_view letters) const;

  /** Adds c·s, merging like terms and dropping negligible results. */
  void accumulate(const PauliString& s, Complex c);

  friend PauliSum operator+(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator-(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator*(Complex c, const PauliSum& a);

 private:
  int n_ = 0;
  TermMap terms_;
};

PauliSum add(const PauliSum& a, const PauliSum& b);
PauliSum scale(const PauliSum& a, Complex c);
PauliSum multiply(const PauliSum& a, const PauliSum& b);
PauliSum tensor(const PauliSum& a, const PauliSum& b);
PauliSum dagger(const PauliSum& a);

/** Tensor power a ⊗ a ⊗ ... (count copies); count 0 gives the 0-qubit unit. */
PauliSum tensor_power(const PauliSum& a, int count);

/**
 * Places a k-qubit operator on the given qubits of an n-qubit register.
 * positions[j] receives local qubit j.
 */
PauliSum embed(const PauliSum& local, std::span<const int> positions,
               int n_total);

/** Largest coefficient deviation between two sums on the same register. */
double max_coefficient_deviation(const PauliSum& a, const PauliSum& b);
bool approx_equal(const PauliSum& a, const PauliSum& b, double tol = 1e-12);

enum class Atom {
  sigma_plus,
  sigma_minus,
  i_plus,
  i_minus,
  x,
  y,
  z,
  identity
};

/** Exact one-qubit sum for σ±, I±, X, Y, Z or I. */
PauliSum single_qubit_atom(Atom kind);

DenseMatrix to_dense(const PauliString& s);
DenseMatrix to_dense(const PauliSum& a);

/** ⟨row|A|col⟩ for dense basis indices; no size cap. */
Complex matrix_element(const PauliSum& a, std::uint64_t row, std::uint64_t col);

bool is_hermitian(const PauliSum& a, double tol = 1e-12);

/**
 * ⟨state|A|state⟩ computed term by term without building the dense matrix.
 * Throws on a dimension mismatch. Unnormalized states are evaluated as given;
 * callers that care check is_normalized first.
 */
Complex expectation(const DenseVector& state, const PauliSum& a);
bool is_normalized(const DenseVector& state, double tol = 1e-9);

/** One term per line as `re im LETTERS`, in canonical letter order. */
std::string to_text(const PauliSum& a);
/** Inverse of to_text; an empty text needs n_qubits to be given. */
PauliSum parse_text(std::string_view text, int n_qubits = -1);

}  // namespace bosonq
