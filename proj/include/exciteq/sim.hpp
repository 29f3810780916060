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
#include <complex>
#include <cstdint>
#include <vector>

#include "exciteq/circuit.hpp"
#include "exciteq/fermion.hpp"
#include "exciteq/pauli.hpp"

namespace exciteq {

constexpr int kMaxSimQubits = 16;

/// Dense statevector over 2^nq little-endian basis states.
class StateVector {
 public:
  explicit StateVector(int nq);

  int num_qubits() const { return nq_; }
  std::int64_t dim() const { return std::int64_t{1} << nq_; }
  cplx& operator[](std::int64_t i) { return amp_[i]; }
  const cplx& operator[](std::int64_t i) const { return amp_[i]; }
  const std::vector<cplx>& amplitudes() const { return amp_; }

  double norm() const;
  double max_imag() const;
  cplx inner(const StateVector& other) const;

 private:
  int nq_;
  std::vector<cplx> amp_;
};

/// Computational basis state with the given occupation bits set.
StateVector prepare_determinant(int nq, std::uint64_t occupation);

/// In-place exact gate action; anti-controls respected. MCRy is rejected
/// (decompose first).
void apply_gate_inplace(StateVector& psi, const Gate& g);

StateVector apply_gate(const StateVector& psi, const Gate& g);

/// Applies every gate; input must be normalized, output norm is checked.
StateVector apply_circuit(const StateVector& psi, const Circuit& c);
void apply_circuit_inplace(StateVector& psi, const Circuit& c);

/// O|psi> for a Pauli sum.
StateVector apply_paulisum(const StateVector& psi, const PauliSum& o);

/// Real <psi|O|psi>; requires Hermitian O, asserts the imaginary residue.
double expectation(const StateVector& psi, const PauliSum& o);

/// e^{i tau O}|psi> by adaptive Taylor series (term norm < 1e-14).
/// Throws if the series fails to converge within the term cap.
StateVector evolve_exact(const StateVector& psi, const PauliSum& o,
                         double tau, int term_cap = 400);

/// Columns are the circuit applied to each basis state; nq <= 12.
Eigen::MatrixXcd circuit_unitary(const Circuit& c);

/// exp(theta*K)|psi> on the excitation's matched pair of configurations;
/// identity elsewhere. Exact and O(2^nq), independent of rank.
void apply_excitation_rotation(StateVector& psi, const Excitation& exc,
                               ExcitationFlavor flavor, double theta);

/// K|psi> for the anti-Hermitian generator (same matched-pair structure).
StateVector apply_excitation_generator(const StateVector& psi,
                                       const Excitation& exc,
                                       ExcitationFlavor flavor);

/// Sign s in K|det> = s |det ^ mask| for an A-type determinant (occupied
/// bits set, virtual bits clear).
double excitation_det_sign(const Excitation& exc, ExcitationFlavor flavor,
                           std::uint64_t det);

}  // namespace exciteq
