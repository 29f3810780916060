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

#include "exciteq/synth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace exciteq {

std::string to_string(CircuitFamily f) {
  switch (f) {
    case CircuitFamily::StandardFermionic: return "standard-fermionic";
    case CircuitFamily::StandardQubit: return "standard-qubit";
    case CircuitFamily::FEB: return "feb";
    case CircuitFamily::QEB: return "qeb";
  }
  throw std::logic_error("unknown family");
}

CircuitFamily family_from_string(const std::string& s) {
  if (s == "standard-fermionic") return CircuitFamily::StandardFermionic;
  if (s == "standard-qubit") return CircuitFamily::StandardQubit;
  if (s == "feb") return CircuitFamily::FEB;
  if (s == "qeb") return CircuitFamily::QEB;
  throw std::invalid_argument("unknown circuit family: " + s);
}

ExcitationFlavor flavor_of(CircuitFamily f) {
  return (f == CircuitFamily::StandardFermionic || f == CircuitFamily::FEB)
             ? ExcitationFlavor::Fermionic
             : ExcitationFlavor::Qubit;
}

Circuit synth_standard(const Excitation& exc, ExcitationFlavor flavor,
                       double theta, int nq) {
  const PauliSum kappa = excitation_to_paulisum(exc, flavor, nq);
  Circuit c(nq);
  constexpr double half_pi = std::numbers::pi / 2;
  for (const auto& [key, coeff] : kappa.terms()) {
    // exp(theta * coeff * P) with coeff purely imaginary: exp(i*phi*P).
    const double phi = theta * coeff.imag();
    std::vector<int> support;
    for (int q = 0; q < nq; ++q) {
      if (((key.x | key.z) >> q) & 1) support.push_back(q);
    }
    Circuit basis(nq);
    for (int q : support) {
      const char L = letter_at(key.x, key.z, q);
      if (L == 'X') basis.append(Gate::h(q));
      else if (L == 'Y') basis.append(Gate::rx(q, half_pi));
    }
    Circuit stair(nq);
    for (std::size_t i = 0; i + 1 < support.size(); ++i)
      stair.append(Gate::cnot(support[i], support[i + 1]));
    c.append(basis);
    c.append(stair);
    c.append(Gate::rz(support.back(), -2 * phi));
    c.append(stair.inverse());
    c.append(basis.inverse());
  }
  return c;
}

namespace {

std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

/// Equality-check cascades and the linking CNOT shared by the QEB and FEB
/// circuits. The multi-controlled Ry fires exactly on the two exchanged
/// configurations: occupied qubits all equal, virtual qubits all equal,
/// highest-occupied != highest-virtual after the linking CNOT.
struct QebCore {
  Circuit left;
  std::vector<ControlSpec> controls;
  int target;
};

QebCore qeb_core(const Excitation& exc, int nq) {
  const auto& occ = exc.occupied();
  const auto& vir = exc.virtuals();
  const int on = occ.back();
  const int vn = vir.back();
  QebCore core{Circuit(nq), {}, vn};
  for (std::size_t m = 0; m + 1 < occ.size(); ++m)
    core.left.append(Gate::cnot(on, occ[m]));
  for (std::size_t m = 0; m + 1 < vir.size(); ++m)
    core.left.append(Gate::cnot(vn, vir[m]));
  core.left.append(Gate::cnot(vn, on));
  for (std::size_t m = 0; m + 1 < occ.size(); ++m)
    core.controls.push_back({occ[m], Polarity::AntiControl});
  for (std::size_t m = 0; m + 1 < vir.size(); ++m)
    core.controls.push_back({vir[m], Polarity::AntiControl});
  core.controls.push_back({on, Polarity::Control});
  std::sort(core.controls.begin(), core.controls.end(),
            [](const ControlSpec& a, const ControlSpec& b) {
              return a.qubit < b.qubit;
            });
  return core;
}

Circuit exchange_circuit(const Excitation& exc, double angle2, int nq) {
  QebCore core = qeb_core(exc, nq);
  Circuit c(nq);
  c.append(core.left);
  c.append(decompose_mcry(Gate::mcry(core.target, core.controls, angle2), nq));
  c.append(core.left.inverse());
  return c;
}

}  // namespace

Circuit decompose_mcry(const Gate& gate, int nq) {
  if (gate.kind != GateKind::MCRy)
    throw std::invalid_argument("decompose_mcry expects an MCRy gate");
  const int k = static_cast<int>(gate.controls.size());
  auto controls = gate.controls;
  std::sort(controls.begin(), controls.end(),
            [](const ControlSpec& a, const ControlSpec& b) {
              return a.qubit < b.qubit;
            });
  // Fire pattern: bit i set iff controls[i] is a normal control.
  std::uint64_t pattern = 0;
  for (int i = 0; i < k; ++i) {
    if (controls[i].polarity == Polarity::Control)
      pattern |= std::uint64_t{1} << i;
  }
  Circuit c(nq);
  const std::uint64_t steps = std::uint64_t{1} << k;
  const double base = gate.angle / static_cast<double>(steps);
  for (std::uint64_t j = 1; j <= steps; ++j) {
    const int par = std::popcount(gray(j - 1) & pattern) % 2;
    c.append(Gate::ry(gate.target, par ? -base : base));
    const std::uint64_t flip =
        j < steps ? gray(j) ^ gray(j - 1) : std::uint64_t{1} << (k - 1);
    const int bit = std::countr_zero(flip);
    c.append(Gate::cnot(controls[bit].qubit, gate.target));
  }
  return c;
}

Circuit synth_qeb(const Excitation& exc, double theta, int nq) {
  if (exc.max_index() >= nq)
    throw std::out_of_range("excitation exceeds qubit count");
  return exchange_circuit(exc, 2 * theta, nq);
}

Circuit synth_feb(const Excitation& exc, double theta, int nq) {
  if (exc.max_index() >= nq)
    throw std::out_of_range("excitation exceeds qubit count");
  std::vector<int> gaps;
  for (int q = 0; q < nq; ++q) {
    if ((exc.gap_mask() >> q) & 1) gaps.push_back(q);
  }
  const int vn = exc.virtuals().back();
  // Parity staircase chaining the gap qubits, CZ passing the accumulated
  // Jordan-Wigner parity into the exchange core. With no gaps the CZ pair
  // acts between the lowest occupied and highest virtual qubit, where it is
  // inert on the exchanged configurations.
  Circuit pre(nq);
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i)
    pre.append(Gate::cnot(gaps[i], gaps[i + 1]));
  pre.append(gaps.empty() ? Gate::cz(exc.occupied().front(), vn)
                          : Gate::cz(gaps.back(), vn));
  const double sign = rank_sign(exc.rank());
  Circuit c(nq);
  c.append(pre);
  c.append(exchange_circuit(exc, sign * 2 * theta, nq));
  c.append(pre.inverse());
  return c;
}

Circuit synth(const Excitation& exc, CircuitFamily family, double theta,
              int nq) {
  switch (family) {
    case CircuitFamily::StandardFermionic:
      return synth_standard(exc, ExcitationFlavor::Fermionic, theta, nq);
    case CircuitFamily::StandardQubit:
      return synth_standard(exc, ExcitationFlavor::Qubit, theta, nq);
    case CircuitFamily::FEB: return synth_feb(exc, theta, nq);
    case CircuitFamily::QEB: return synth_qeb(exc, theta, nq);
  }
  throw std::logic_error("unknown family");
}

GateCount count_formula(const Excitation& exc, CircuitFamily family) {
  const std::int64_t n = exc.rank();
  std::vector<int> sorted(exc.occupied());
  sorted.insert(sorted.end(), exc.virtuals().begin(), exc.virtuals().end());
  std::sort(sorted.begin(), sorted.end());
  GateCount out;
  switch (family) {
    case CircuitFamily::StandardFermionic: {
      std::int64_t alternating = 0;
      for (std::int64_t i = 0; i < 2 * n; ++i)
        alternating += (i % 2 ? -1 : 1) * sorted[2 * n - 1 - i];
      out.single_qubit = (4 * n + 1) << (2 * n - 1);
      out.cnot = (alternating + n - 1) << (2 * n);
      break;
    }
    case CircuitFamily::StandardQubit:
      out.single_qubit = (4 * n + 1) << (2 * n - 1);
      out.cnot = (2 * n - 1) << (2 * n);
      break;
    case CircuitFamily::QEB:
      out.single_qubit = std::int64_t{1} << (2 * n - 1);
      out.cnot = (std::int64_t{1} << (2 * n - 1)) + 4 * n - 2;
      break;
    case CircuitFamily::FEB: {
      std::int64_t gap_sum = 0;
      std::int64_t gapped_pairs = 0;
      for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t d = sorted[2 * i + 1] - sorted[2 * i];
        if (d > 2) gap_sum += d - 2;
        if (d > 1) ++gapped_pairs;
      }
      out.single_qubit = std::int64_t{1} << (2 * n - 1);
      out.cnot = (std::int64_t{1} << (2 * n - 1)) + 4 * n - 2 +
                 2 * (gap_sum + gapped_pairs - (gapped_pairs > 0 ? 1 : 0));
      out.cz = 2;
      break;
    }
  }
  return out;
}

}  // namespace exciteq
