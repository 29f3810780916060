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

#include <string>

#include "exciteq/circuit.hpp"
#include "exciteq/fermion.hpp"

namespace exciteq {

enum class CircuitFamily { StandardFermionic, StandardQubit, FEB, QEB };

std::string to_string(CircuitFamily f);
CircuitFamily family_from_string(const std::string& s);

/// Which excitation flavor a circuit family realizes.
ExcitationFlavor flavor_of(CircuitFamily f);

/// Per-Pauli-string circuit: one basis-change layer, CNOT staircase over the
/// string's support, Rz, and the mirror, for each of the 2^(2n-1) strings of
/// the Jordan-Wigner image. Exact: the strings commute, so the product of the
/// per-string exponentials equals exp(theta*K).
Circuit synth_standard(const Excitation& exc, ExcitationFlavor flavor,
                       double theta, int nq);

/// CNOT-efficient qubit-excitation circuit: equality cascades onto the
/// highest occupied/virtual qubits, one linking CNOT, a multi-controlled
/// Ry(2*theta) on the highest virtual qubit (decomposed), and the mirror.
Circuit synth_qeb(const Excitation& exc, double theta, int nq);

/// Fermionic variant: the QEB core sandwiched between a Jordan-Wigner
/// parity staircase over the gap qubits plus two CZ gates, with the rotation
/// angle carrying the rank sign (-1)^f, f = floor(n/2) mod 2.
Circuit synth_feb(const Excitation& exc, double theta, int nq);

Circuit synth(const Excitation& exc, CircuitFamily family, double theta,
              int nq);

/// Gray-code decomposition of a k-controlled Ry into 2^k single-qubit Ry
/// rotations of magnitude |angle|/2^(k-1) and exactly 2^k CNOTs; anti-controls
/// change rotation signs only, no extra gates.
Circuit decompose_mcry(const Gate& gate, int nq);

/// Closed-form gate counts, no circuit built.
GateCount count_formula(const Excitation& exc, CircuitFamily family);

}  // namespace exciteq
