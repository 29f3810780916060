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

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "exciteq/pauli.hpp"

namespace exciteq {

// Qubit index == spin-orbital index (Jordan-Wigner, one-to-one), with
// interleaved spins (alpha on even, beta on odd qubits). Occupation
// bitstrings are little-endian: basis integer b has qubit q occupied iff
// bit q of b is set.

enum class ExcitationFlavor { Fermionic, Qubit };
enum class LadderKind { Create, Annihilate };

/// An n-tuple excitation: n "occupied" (annihilated) and n "virtual"
/// (created) spin-orbital indices, each list strictly increasing and the
/// two disjoint. Generalized excitations simply use index sets that need
/// not respect a reference determinant's occupied/virtual partition.
class Excitation {
 public:
  Excitation(std::vector<int> occupied, std::vector<int> virt);

  int rank() const { return static_cast<int>(occ_.size()); }
  const std::vector<int>& occupied() const { return occ_; }
  const std::vector<int>& virtuals() const { return vir_; }

  std::uint64_t occ_mask() const { return occ_mask_; }
  std::uint64_t vir_mask() const { return vir_mask_; }
  std::uint64_t mask() const { return occ_mask_ | vir_mask_; }

  /// Qubits strictly inside the pairs (p1,p2),(p3,p4),... of the fully
  /// sorted index list; these carry the surviving Jordan-Wigner Z factors.
  std::uint64_t gap_mask() const { return gap_mask_; }

  int max_index() const;

  /// Canonical ordering: rank, then occupied tuple, then virtual tuple.
  friend auto operator<=>(const Excitation& a, const Excitation& b) {
    return std::tie(a.occ_, a.vir_) <=> std::tie(b.occ_, b.vir_);
  }
  friend bool operator==(const Excitation& a, const Excitation& b) {
    return a.occ_ == b.occ_ && a.vir_ == b.vir_;
  }

  std::string to_string() const;

 private:
  std::vector<int> occ_;
  std::vector<int> vir_;
  std::uint64_t occ_mask_ = 0;
  std::uint64_t vir_mask_ = 0;
  std::uint64_t gap_mask_ = 0;
};

bool excitation_less(const Excitation& a, const Excitation& b);

/// Parse "occ:1,2,5;vir:8,9,11" (indices may be unsorted; canonicalized).
Excitation parse_excitation(const std::string& spec);

/// The rank-dependent sign exponent floor(n/2) mod 2 entering the
/// fermionic circuit rotation angle.
inline int rank_sign_exponent(int n) { return (n / 2) % 2; }
inline double rank_sign(int n) { return rank_sign_exponent(n) ? -1.0 : 1.0; }

/// Jordan-Wigner image of a single ladder operator:
/// creation -> (X - iY)/2 on the index qubit times Z on all lower qubits;
/// annihilation is the adjoint.
PauliSum jw_ladder(int index, LadderKind kind, int nq);

/// The anti-Hermitian excitation operator as a Pauli sum: 2^(2n-1) strings,
/// each with purely imaginary coefficient of magnitude 1/2^(2n-1). The
/// qubit flavor drops the Z strings. Ladder ordering: annihilate the
/// occupied list ascending, then create the virtual list ascending.
PauliSum excitation_to_paulisum(const Excitation& exc, ExcitationFlavor flavor,
                                int nq);

/// Dense matrix of a Pauli sum (test oracle; nq capped by caller).
Eigen::MatrixXcd to_matrix(const PauliSum& sum, int nq);

constexpr int kOracleQubitCap = 12;

/// Dense anti-Hermitian matrix of the excitation operator; nq <= 12.
Eigen::MatrixXcd matrix_of(const Excitation& exc, ExcitationFlavor flavor,
                           int nq);

}  // namespace exciteq
