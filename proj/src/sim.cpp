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

#include "exciteq/sim.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace exciteq {

namespace {

int parity(std::uint64_t v) { return std::popcount(v) & 1; }

struct Mat2 {
  cplx a, b, c, d;  // [[a, b], [c, d]]
};

Mat2 single_qubit_matrix(const Gate& g) {
  const double half = g.angle / 2;
  switch (g.kind) {
    case GateKind::X: return {0, 1, 1, 0};
    case GateKind::H: {
      const double s = 1.0 / std::numbers::sqrt2;
      return {s, s, s, -s};
    }
    case GateKind::Rx:
      return {std::cos(half), cplx(0, -std::sin(half)),
              cplx(0, -std::sin(half)), std::cos(half)};
    case GateKind::Ry:
      return {std::cos(half), -std::sin(half), std::sin(half),
              std::cos(half)};
    case GateKind::Rz:
      return {std::exp(cplx(0, -half)), 0, 0, std::exp(cplx(0, half))};
    default:
      throw std::invalid_argument("not a single-qubit kernel gate");
  }
}

}  // namespace

StateVector::StateVector(int nq) : nq_(nq) {
  if (nq < 1 || nq > kMaxSimQubits)
    throw std::invalid_argument("statevector qubit count out of range");
  amp_.assign(std::int64_t{1} << nq, cplx{0, 0});
}

double StateVector::norm() const {
  double s = 0;
  for (const auto& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

double StateVector::max_imag() const {
  double m = 0;
  for (const auto& a : amp_) m = std::max(m, std::abs(a.imag()));
  return m;
}

cplx StateVector::inner(const StateVector& other) const {
  if (other.nq_ != nq_) throw std::invalid_argument("qubit count mismatch");
  cplx s{0, 0};
  for (std::int64_t i = 0; i < dim(); ++i)
    s += std::conj(amp_[i]) * other.amp_[i];
  return s;
}

StateVector prepare_determinant(int nq, std::uint64_t occupation) {
  if (nq < 64 && (occupation >> nq) != 0)
    throw std::invalid_argument("occupation exceeds qubit count");
  StateVector psi(nq);
  psi[static_cast<std::int64_t>(occupation)] = 1.0;
  return psi;
}

void apply_gate_inplace(StateVector& psi, const Gate& g) {
  const std::int64_t dim = psi.dim();
  const std::int64_t tbit = std::int64_t{1} << g.target;
  auto controls_ok = [&](std::int64_t b) {
    for (const auto& c : g.controls) {
      const bool set = (b >> c.qubit) & 1;
      if (set != (c.polarity == Polarity::Control)) return false;
    }
    return true;
  };
  switch (g.kind) {
    case GateKind::MCRy:
      throw std::invalid_argument("MCRy must be decomposed before simulation");
    case GateKind::CNOT:
      for (std::int64_t b = 0; b < dim; ++b) {
        if (!(b & tbit) && controls_ok(b)) {
          // control bit unaffected by the flip, so the pair swaps once
          std::swap(psi[b], psi[b | tbit]);
        }
      }
      return;
    case GateKind::CZ:
      for (std::int64_t b = 0; b < dim; ++b) {
        if ((b & tbit) && controls_ok(b)) psi[b] = -psi[b];
      }
      return;
    default: {
      const Mat2 u = single_qubit_matrix(g);
      for (std::int64_t b = 0; b < dim; ++b) {
        if (b & tbit) continue;
        const std::int64_t b1 = b | tbit;
        const cplx a0 = psi[b], a1 = psi[b1];
        psi[b] = u.a * a0 + u.b * a1;
        psi[b1] = u.c * a0 + u.d * a1;
      }
      return;
    }
  }
}

StateVector apply_gate(const StateVector& psi, const Gate& g) {
  StateVector out = psi;
  apply_gate_inplace(out, g);
  return out;
}

void apply_circuit_inplace(StateVector& psi, const Circuit& c) {
  if (c.num_qubits() > psi.num_qubits())
    throw std::invalid_argument("circuit wider than state");
  for (const auto& g : c.gates()) apply_gate_inplace(psi, g);
}

StateVector apply_circuit(const StateVector& psi, const Circuit& c) {
  if (std::abs(psi.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("apply_circuit expects a normalized state");
  StateVector out = psi;
  apply_circuit_inplace(out, c);
  if (std::abs(out.norm() - 1.0) > 1e-12)
    throw std::runtime_error("norm drift after circuit application");
  return out;
}

StateVector apply_paulisum(const StateVector& psi, const PauliSum& o) {
  StateVector out(psi.num_qubits());
  const std::int64_t dim = psi.dim();
  for (const auto& [key, c] : o.terms()) {
    // P(x,z)|b> = i^{|x&z|} (-1)^{|z&b|} |b^x>
    cplx base = c;
    switch (std::popcount(key.x & key.z) % 4) {
      case 1: base *= cplx{0, 1}; break;
      case 2: base *= -1.0; break;
      case 3: base *= cplx{0, -1}; break;
      default: break;
    }
    const std::int64_t x = static_cast<std::int64_t>(key.x);
    for (std::int64_t b = 0; b < dim; ++b) {
      const cplx v = parity(b & key.z) ? -base : base;
      out[b ^ x] += v * psi[b];
    }
  }
  return out;
}

double expectation(const StateVector& psi, const PauliSum& o) {
  if (!o.is_hermitian())
    throw std::invalid_argument("expectation requires a Hermitian operator");
  const StateVector opsi = apply_paulisum(psi, o);
  const cplx val = psi.inner(opsi);
  if (std::abs(val.imag()) > 1e-10)
    throw std::runtime_error("expectation has imaginary residue");
  return val.real();
}

StateVector evolve_exact(const StateVector& psi, const PauliSum& o,
                         double tau, int term_cap) {
  if (!o.is_hermitian())
    throw std::invalid_argument("evolve_exact requires a Hermitian operator");
  if (!std::isfinite(tau)) throw std::invalid_argument("tau must be finite");
  StateVector out = psi;
  StateVector term = psi;
  const cplx itau{0, tau};
  for (int k = 1; k <= term_cap; ++k) {
    StateVector next = apply_paulisum(term, o);
    const cplx scale = itau / static_cast<double>(k);
    double nrm = 0;
    for (std::int64_t i = 0; i < next.dim(); ++i) {
      next[i] *= scale;
      out[i] += next[i];
      nrm += std::norm(next[i]);
    }
    if (std::sqrt(nrm) < 1e-14) return out;
    term = std::move(next);
  }
  throw std::runtime_error(
      "evolve_exact series did not converge; split the time step");
}

Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
  const int nq = c.num_qubits();
  if (nq > kOracleQubitCap)
    throw std::invalid_argument("circuit_unitary capped at 12 qubits");
  const std::int64_t dim = std::int64_t{1} << nq;
  Eigen::MatrixXcd u(dim, dim);
  for (std::int64_t b = 0; b < dim; ++b) {
    StateVector psi = prepare_determinant(nq, static_cast<std::uint64_t>(b));
    apply_circuit_inplace(psi, c);
    for (std::int64_t r = 0; r < dim; ++r) u(r, b) = psi[r];
  }
  return u;
}

double excitation_det_sign(const Excitation& exc, ExcitationFlavor flavor,
                           std::uint64_t det) {
  if (flavor == ExcitationFlavor::Qubit) return 1.0;
  double s = rank_sign(exc.rank());
  if (parity(det & exc.gap_mask())) s = -s;
  return s;
}

void apply_excitation_rotation(StateVector& psi, const Excitation& exc,
                               ExcitationFlavor flavor, double theta) {
  const std::int64_t dim = psi.dim();
  const std::int64_t mask = static_cast<std::int64_t>(exc.mask());
  const std::int64_t omask = static_cast<std::int64_t>(exc.occ_mask());
  const double c = std::cos(theta), s = std::sin(theta);
  for (std::int64_t b = 0; b < dim; ++b) {
    if ((b & mask) != omask) continue;
    const std::int64_t b2 = b ^ mask;
    const double sgn =
        excitation_det_sign(exc, flavor, static_cast<std::uint64_t>(b));
    const cplx aA = psi[b], aB = psi[b2];
    psi[b] = c * aA - sgn * s * aB;
    psi[b2] = sgn * s * aA + c * aB;
  }
}

StateVector apply_excitation_generator(const StateVector& psi,
                                       const Excitation& exc,
                                       ExcitationFlavor flavor) {
  StateVector out(psi.num_qubits());
  const std::int64_t dim = psi.dim();
  const std::int64_t mask = static_cast<std::int64_t>(exc.mask());
  const std::int64_t omask = static_cast<std::int64_t>(exc.occ_mask());
  for (std::int64_t b = 0; b < dim; ++b) {
    if ((b & mask) != omask) continue;
    const std::int64_t b2 = b ^ mask;
    const double sgn =
        excitation_det_sign(exc, flavor, static_cast<std::uint64_t>(b));
    out[b2] += sgn * psi[b];
    out[b] -= sgn * psi[b2];
  }
  return out;
}

}  // namespace exciteq
