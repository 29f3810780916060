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

#include <catch2/catch_amalgamated.hpp>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "exciteq/chem.hpp"
#include "exciteq/sim.hpp"
#include "oracles.hpp"

using namespace exciteq;

namespace {

const std::string kFixtures = EXCITEQ_FIXTURE_DIR;

nlohmann::json sidecar(const std::string& name) {
  std::ifstream in(kFixtures + "/" + name + ".json");
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

MolecularIntegrals fixture(const std::string& name) {
  return parse_fcidump_file(kFixtures + "/" + name + ".fcidump");
}

}  // namespace

TEST_CASE("minimal one-orbital dump") {
  std::istringstream in(
      "&FCI NORB=1,NELEC=2,MS2=0,\n ISYM=1,\n &END\n"
      " 0.5  0  0  0  0\n");
  const MolecularIntegrals ints = parse_fcidump(in);
  CHECK(ints.n_spatial() == 1);
  CHECK(ints.n_electrons() == 2);
  CHECK(ints.e_nuc() == 0.5);
  CHECK(ints.h1(0, 0) == 0.0);
  CHECK(ints.eri(0, 0, 0, 0) == 0.0);
  // slash-terminated headers work too
  std::istringstream slash("&FCI NORB=1,NELEC=2,MS2=0 /\n 0.25 0 0 0 0\n");
  CHECK(parse_fcidump(slash).e_nuc() == 0.25);
}

TEST_CASE("malformed input is rejected") {
  std::istringstream nohdr("1.0 1 1 0 0\n");
  CHECK_THROWS(parse_fcidump(nohdr));
  std::istringstream oor("&FCI NORB=1,NELEC=2,MS2=0 /\n 1.0 2 1 0 0\n");
  CHECK_THROWS(parse_fcidump(oor));
  std::istringstream dup(
      "&FCI NORB=2,NELEC=2,MS2=0 /\n 1.0 1 2 0 0\n 1.5 2 1 0 0\n");
  CHECK_THROWS(parse_fcidump(dup));
}

TEST_CASE("h2 fixture round-trips and reproduces the recorded energies") {
  const MolecularIntegrals ints = fixture("h2");
  const auto meta = sidecar("h2");
  std::istringstream again(serialize_fcidump(ints));
  const MolecularIntegrals back = parse_fcidump(again);
  CHECK(back.n_spatial() == ints.n_spatial());
  CHECK(back.e_nuc() == ints.e_nuc());
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) CHECK(back.h1(p, q) == ints.h1(p, q));
  CHECK(back.eri(1, 0, 1, 0) == ints.eri(1, 0, 1, 0));

  CHECK(hf_energy(ints) ==
        Catch::Approx(meta["hf"].get<double>()).epsilon(1e-10));

  const QubitHamiltonian h = build_hamiltonian(ints);
  CHECK(h.nq == 4);
  CHECK(h.paulis.is_hermitian());
  const StateVector hf = prepare_determinant(4, hf_determinant(ints));
  CHECK(expectation(hf, h.paulis) ==
        Catch::Approx(meta["hf"].get<double>()).epsilon(1e-10));

  const FciResult fci = fci_solve(h, 2, 0);
  CHECK(std::abs(fci.energy - meta["fci"].get<double>()) < 1e-9);
  CHECK(fci.energy <= hf_energy(ints));
  CHECK(fci.sector_dim == 4);

  // dense diagonalization oracle on the full 16x16 matrix
  const Eigen::MatrixXcd hm = oracle::sum_matrix(h.paulis, 4);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hm);
  CHECK(fci.energy >= es.eigenvalues()(0) - 1e-12);
}

TEST_CASE("zero integrals give the constant Hamiltonian") {
  MolecularIntegrals ints(2, 2, 0, 1.25);
  const QubitHamiltonian h = build_hamiltonian(ints);
  CHECK(h.paulis.size() == 1);
  CHECK(h.paulis.coefficient(0, 0) == cplx(1.25, 0));
}

TEST_CASE("hamiltonian commutes with particle number and Sz") {
  const QubitHamiltonian h = build_hamiltonian(fixture("h2"));
  PauliSum number, sz;
  for (int q = 0; q < h.nq; ++q) {
    // n_q = (1 - Z_q)/2, weighted by the spin for Sz
    number += PauliSum::identity({0.5, 0});
    number.add_term(0, std::uint64_t{1} << q, {-0.5, 0});
    const double w = (q % 2 == 0) ? 0.5 : -0.5;
    sz += PauliSum::identity({0.5 * w, 0});
    sz.add_term(0, std::uint64_t{1} << q, {-0.5 * w, 0});
  }
  for (const PauliSum& sym : {number, sz}) {
    const PauliSum comm = h.paulis * sym - sym * h.paulis;
    CHECK(comm.pruned(1e-10).empty());
  }
}

TEST_CASE("orbital energies and MP denominators") {
  const MolecularIntegrals ints = fixture("h2");
  const std::vector<double> eps = orbital_energies(ints);
  REQUIRE(eps.size() == 4);
  // closed shell: spin-paired degeneracy
  CHECK(eps[0] == Catch::Approx(eps[1]).margin(1e-12));
  CHECK(eps[2] == Catch::Approx(eps[3]).margin(1e-12));
  // canonical dump: matches the generating package's orbital energies
  CHECK(eps[0] == Catch::Approx(-0.584971).margin(1e-5));
  CHECK(eps[2] == Catch::Approx(0.673146).margin(1e-5));
  // double-excitation denominator eps_i + eps_j - eps_a - eps_b
  const Excitation d({0, 1}, {2, 3});
  double delta = 0;
  for (int q : d.occupied()) delta += eps[q];
  for (int q : d.virtuals()) delta -= eps[q];
  CHECK(delta == Catch::Approx(2 * (eps[0] - eps[2])).margin(1e-12));
}

TEST_CASE("aufbau occupation") {
  CHECK(hf_determinant(fixture("h2")) == 0b0011);
  CHECK(hf_determinant(fixture("h4")) == 0b00001111);
  MolecularIntegrals odd(2, 1, 1, 0.0);
  CHECK_THROWS(hf_determinant(odd));
}

TEST_CASE("one-qubit sector diagonalization") {
  QubitHamiltonian h;
  h.nq = 1;
  h.paulis.add_term(0, 1, {1, 0});  // Z0
  const FciResult r = fci_solve(h, 1, 1);
  CHECK(r.energy == Catch::Approx(-1.0));
  CHECK(r.sector_dim == 1);
  CHECK_THROWS(fci_solve(h, 1, -1));  // the only qubit is alpha
}

TEST_CASE("h4 fixture ground energy matches the sidecar") {
  const MolecularIntegrals ints = fixture("h4");
  const auto meta = sidecar("h4");
  const QubitHamiltonian h = build_hamiltonian(ints);
  const FciResult fci = fci_solve(h, ints.n_electrons(), ints.ms2());
  CHECK(std::abs(fci.energy - meta["fci"].get<double>()) < 1e-9);
  CHECK(fci.sector_dim == 36);
  // deterministic phase on the ground state
  double maxamp = 0;
  std::int64_t imax = 0;
  for (std::int64_t i = 0; i < fci.ground.dim(); ++i) {
    if (std::abs(fci.ground[i]) > maxamp) {
      maxamp = std::abs(fci.ground[i]);
      imax = i;
    }
  }
  CHECK(fci.ground[imax].imag() == Catch::Approx(0.0).margin(1e-12));
  CHECK(fci.ground[imax].real() > 0);
}
