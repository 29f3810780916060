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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "exciteq/pauli.hpp"
#include "exciteq/sim.hpp"

namespace exciteq {

/// Spatial-orbital integrals in chemists' notation (pq|rs), hartree.
/// Spin-orbital indexing everywhere else is interleaved: alpha on even,
/// beta on odd qubits; spin orbital p maps to spatial p/2.
class MolecularIntegrals {
 public:
  MolecularIntegrals(int n_spatial, int n_electrons, int ms2, double e_nuc);

  int n_spatial() const { return n_spatial_; }
  int n_electrons() const { return n_electrons_; }
  int ms2() const { return ms2_; }
  int n_spin_orbitals() const { return 2 * n_spatial_; }
  double e_nuc() const { return e_nuc_; }
  void set_e_nuc(double v) { e_nuc_ = v; }

  double h1(int p, int q) const { return h_[idx2(p, q)]; }
  double eri(int p, int q, int r, int s) const {
    return g_[idx4(p, q, r, s)];
  }
  /// Populates all eight permutation-equivalent entries; throws on a
  /// symmetry-inconsistent duplicate beyond tol.
  void set_h1(int p, int q, double v, double tol = 1e-10);
  void set_eri(int p, int q, int r, int s, double v, double tol = 1e-10);

  /// Spin-orbital one-electron integral (interleaved convention).
  double so_h1(int p, int q) const;
  /// Antisymmetrized spin-orbital integral <pq||rs> (physicists').
  double so_antisym(int p, int q, int r, int s) const;

 private:
  std::size_t idx2(int p, int q) const;
  std::size_t idx4(int p, int q, int r, int s) const;
  int n_spatial_;
  int n_electrons_;
  int ms2_;
  double e_nuc_;
  std::vector<double> h_;
  std::vector<double> g_;
};

/// FCIDUMP text: header "&FCI NORB=..,NELEC=..,MS2=..,... /" (or &END), then
/// "value i j k l" with 1-based indices; (0,0,0,0) is the core energy,
/// (i,j,0,0) one-electron, otherwise chemists' (ij|kl).
MolecularIntegrals parse_fcidump(std::istream& in);
MolecularIntegrals parse_fcidump_file(const std::string& path);
std::string serialize_fcidump(const MolecularIntegrals& ints);

struct QubitHamiltonian {
  PauliSum paulis;  // hartree; e_nuc folded into the identity term
  int nq = 0;
};

/// Second-quantized Hamiltonian mapped through Jordan-Wigner; pruned at 1e-12.
QubitHamiltonian build_hamiltonian(const MolecularIntegrals& ints);

/// Aufbau occupation: the lowest n_electrons interleaved spin orbitals.
/// Throws for odd electron counts (supply an explicit occupation instead).
std::uint64_t hf_determinant(const MolecularIntegrals& ints);

/// Fock diagonal in the dump's canonical basis:
/// eps_p = h_pp + sum_{q occ} <pq||pq>, per spin orbital.
std::vector<double> orbital_energies(const MolecularIntegrals& ints);

/// Closed-form restricted HF energy from the integrals.
double hf_energy(const MolecularIntegrals& ints);

struct FciResult {
  double energy = 0.0;
  StateVector ground;
  int sector_dim = 0;
};

/// Lowest eigenvalue in the fixed (n_electrons, 2*Sz) sector via dense
/// diagonalization of the sector-projected matrix. The ground state comes
/// back embedded in the full 2^nq space with a deterministic phase.
FciResult fci_solve(const QubitHamiltonian& h, int n_electrons, int ms2);

}  // namespace exciteq
