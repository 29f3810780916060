// Copyright 2026 The ExcitEQ Developers
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
#include <string>
#include <vector>

namespace exciteq {

using cplx = std::complex<double>;

/// A signed-complex-weighted Pauli string in symplectic form. Bit q of
/// x_mask/z_mask carries the X/Z component on qubit q; both bits set means Y.
/// The string operator itself is Hermitian (Y is the actual Pauli Y); the
/// coefficient carries all phase.
struct PauliTerm {
  cplx coeff{1.0, 0.0};
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
};

/// Pauli group product with the i-power phase folded into the coefficient.
PauliTerm multiply(const PauliTerm& a, const PauliTerm& b);

/// True iff the strings commute (symplectic form even).
bool commutes(const PauliTerm& a, const PauliTerm& b);

/// Single Pauli letter on one qubit.
char letter_at(std::uint64_t x_mask, std::uint64_t z_mask, int qubit);

/// Linear combination of Pauli strings, keyed on (z_mask, x_mask) so that
/// iteration order (and hence every downstream rendering) is deterministic.
class PauliSum {
 public:
  struct Key {
    std::uint64_t z = 0;
    std::uint64_t x = 0;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  using TermMap = std::map<Key, cplx>;

  static constexpr double kDefaultPruneTol = 1e-14;

  PauliSum() = default;
  explicit PauliSum(const PauliTerm& t) { add_term(t); }

  static PauliSum identity(cplx c = {1.0, 0.0});

  void add_term(const PauliTerm& t);
  void add_term(std::uint64_t x_mask, std::uint64_t z_mask, cplx c);

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  PauliSum scaled(cplx factor) const;
  PauliSum adjoint() const;
  PauliSum pruned(double tol = kDefaultPruneTol) const;
  void prune(double tol = kDefaultPruneTol);

  /// All coefficients real within tol (strings are self-adjoint).
  bool is_hermitian(double tol = 1e-12) const;
  /// All coefficients purely imaginary within tol.
  bool is_antihermitian(double tol = 1e-12) const;

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  cplx coefficient(std::uint64_t x_mask, std::uint64_t z_mask) const;

  /// Highest qubit index touched by any stored mask, plus one.
  int min_qubits() const;

  double max_abs_coeff() const;

  bool operator==(const PauliSum&) const = default;

 private:
  TermMap terms_;
};

/// Text rendering, e.g. "(-0.5i) Z0 X2 Y5"; terms joined with " + ".
/// The identity string renders as "I".
std::string to_string(const PauliTerm& t);
std::string to_string(const PauliSum& s);

/// Round-trip parser for the to_string format.
PauliSum parse_pauli_sum(const std::string& text);

}  // namespace exciteq
