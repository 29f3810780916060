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
#include <random>

#include "exciteq/fermion.hpp"
#include "oracles.hpp"

using namespace exciteq;

TEST_CASE("excitation construction and parsing") {
  Excitation e({5, 1, 2}, {11, 8, 9});
  CHECK(e.rank() == 3);
  CHECK(e.occupied() == std::vector<int>{1, 2, 5});
  CHECK(e.virtuals() == std::vector<int>{8, 9, 11});
  CHECK(e.to_string() == "occ:1,2,5;vir:8,9,11");
  CHECK(parse_excitation("occ:5,1,2;vir:11,8,9") == e);
  CHECK_THROWS(Excitation({1, 2}, {2, 3}));       // overlap
  CHECK_THROWS(Excitation({1}, {2, 3}));          // length mismatch
  CHECK_THROWS(parse_excitation("occ:1,2 vir:3,4"));
  // sorted pairs (1,2)(5,8)(9,11): gaps {6,7} and {10}
  CHECK(e.gap_mask() == ((1ull << 6) | (1ull << 7) | (1ull << 10)));
}

TEST_CASE("jw_ladder lowest orbitals") {
  // a^0 -> (X0 - iY0)/2, no Z string
  PauliSum a0 = jw_ladder(0, LadderKind::Create, 2);
  CHECK(a0.size() == 2);
  CHECK(a0.coefficient(1, 0) == cplx(0.5, 0));
  CHECK(a0.coefficient(1, 1) == cplx(0, -0.5));
  // a^1 -> (X1 - iY1)/2 * Z0
  PauliSum a1 = jw_ladder(1, LadderKind::Create, 2);
  CHECK(a1.size() == 2);
  CHECK(a1.coefficient(0b10, 0b01) == cplx(0.5, 0));
  CHECK(a1.coefficient(0b10, 0b11) == cplx(0, -0.5));
  // annihilation is the adjoint
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, 5);
  for (int t = 0; t < 5; ++t) {
    const int p = pick(rng);
    CHECK(jw_ladder(p, LadderKind::Annihilate, 6) ==
          jw_ladder(p, LadderKind::Create, 6).adjoint());
  }
  CHECK_THROWS(jw_ladder(4, LadderKind::Create, 4));
}

TEST_CASE("single excitation Pauli image") {
  // kappa_0^1 from expanding the ladder product: (i/2)(Y0 X1 - X0 Y1)
  PauliSum k = excitation_to_paulisum(Excitation({0}, {1}),
                                      ExcitationFlavor::Fermionic, 2);
  CHECK(k.size() == 2);
  CHECK(k.coefficient(0b11, 0b01) == cplx(0, 0.5));   // Y0 X1
  CHECK(k.coefficient(0b11, 0b10) == cplx(0, -0.5));  // X0 Y1
  // and it matches the explicit ladder expansion
  PauliSum t1 = jw_ladder(1, LadderKind::Create, 2) *
                jw_ladder(0, LadderKind::Annihilate, 2);
  PauliSum expanded = t1 - t1.adjoint();
  CHECK(oracle::max_abs(oracle::sum_matrix(k, 2) -
                        oracle::sum_matrix(expanded, 2)) < 1e-14);
}

TEST_CASE("string counts, coefficients, mutual commutation") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 3; ++n) {
    for (ExcitationFlavor fl :
         {ExcitationFlavor::Fermionic, ExcitationFlavor::Qubit}) {
      const Excitation exc = oracle::random_excitation(rng, n, 2 * n + 2);
      const PauliSum k = excitation_to_paulisum(exc, fl, 2 * n + 2);
      CHECK(k.size() == (std::size_t{1} << (2 * n - 1)));
      const double mag = 1.0 / static_cast<double>(1 << (2 * n - 1));
      for (const auto& [key, c] : k.terms()) {
        CHECK(std::abs(c.real()) < 1e-15);
        CHECK(std::abs(std::abs(c.imag()) - mag) < 1e-15);
      }
      for (const auto& [ka, ca] : k.terms()) {
        for (const auto& [kb, cb] : k.terms()) {
          CHECK(commutes({ca, ka.x, ka.z}, {cb, kb.x, kb.z}));
        }
      }
    }
  }
}

TEST_CASE("qubit flavor differs from fermionic by gap Z factors and the rank sign") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 3;
    const Excitation exc = oracle::random_excitation(rng, n, 2 * n + 2);
    const PauliSum kf =
        excitation_to_paulisum(exc, ExcitationFlavor::Fermionic, 2 * n + 2);
    const PauliSum kq =
        excitation_to_paulisum(exc, ExcitationFlavor::Qubit, 2 * n + 2);
    PauliSum stripped;
    for (const auto& [key, c] : kf.terms()) {
      CHECK((key.x & ~exc.mask()) == 0);
      CHECK((key.z & ~key.x) == (key.z & exc.gap_mask()));
      stripped.add_term(key.x, key.z & ~exc.gap_mask(), c);
    }
    // the ladder ordering carries the same global sign (-1)^floor(n/2) the
    // fermionic circuit rotation compensates
    CHECK(stripped == kq.scaled({rank_sign(n), 0}));
  }
}

TEST_CASE("matrix_of is anti-Hermitian and matches the dense oracle") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 1 + trial % 2;
    const int nq = 2 * n + 1;
    const Excitation exc = oracle::random_excitation(rng, n, nq);
    for (ExcitationFlavor fl :
         {ExcitationFlavor::Fermionic, ExcitationFlavor::Qubit}) {
      const Eigen::MatrixXcd m = matrix_of(exc, fl, nq);
      CHECK(oracle::max_abs(m + m.adjoint()) < 1e-14);
      CHECK(oracle::max_abs(
                m - oracle::sum_matrix(excitation_to_paulisum(exc, fl, nq),
                                       nq)) < 1e-14);
    }
  }
  CHECK_THROWS(matrix_of(Excitation({0}, {1}), ExcitationFlavor::Qubit, 13));
}

TEST_CASE("qubit excitation moves occupation without parity sign") {
  // Q_0^1 applied to |10> (qubit 0 set) -> |01>
  const Eigen::MatrixXcd q =
      matrix_of(Excitation({0}, {1}), ExcitationFlavor::Qubit, 2);
  Eigen::VectorXcd in = Eigen::VectorXcd::Zero(4);
  in(0b01) = 1.0;
  Eigen::VectorXcd out = q * in;
  CHECK(std::abs(out(0b10) - cplx(1, 0)) < 1e-14);
}

TEST_CASE("fermionic excitation picks up the spectator parity") {
  // kappa_0^2 vs Q_0^2: qubit 1 sits between the pair, so its occupation
  // flips the sign of the fermionic action.
  const Eigen::MatrixXcd kf =
      matrix_of(Excitation({0}, {2}), ExcitationFlavor::Fermionic, 3);
  const Eigen::MatrixXcd kq =
      matrix_of(Excitation({0}, {2}), ExcitationFlavor::Qubit, 3);
  CHECK(std::abs(kf(0b110, 0b011) + kq(0b110, 0b011)) < 1e-14);
  CHECK(std::abs(kq(0b110, 0b011) - cplx(1, 0)) < 1e-14);
  // without the spectator the two agree: |100> -> |001>
  CHECK(std::abs(kf(0b100, 0b001) - kq(0b100, 0b001)) < 1e-14);

  // adjacent indices have no gap: the parities of the two ladder operators
  // cancel and the flavors coincide exactly
  CHECK(oracle::max_abs(
            matrix_of(Excitation({1}, {2}), ExcitationFlavor::Fermionic, 3) -
            matrix_of(Excitation({1}, {2}), ExcitationFlavor::Qubit, 3)) <
        1e-14);
}

TEST_CASE("exp(theta Q) touches only the matched configurations") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int n = 1; n <= 2; ++n) {
    const int nq = 2 * n;
    std::vector<int> occ(n), vir(n);
    for (int i = 0; i < n; ++i) {
      occ[i] = i;
      vir[i] = n + i;
    }
    const Excitation exc(occ, vir);
    const double theta = angle(rng);
    const Eigen::MatrixXcd u = oracle::expm_antihermitian(
        theta * matrix_of(exc, ExcitationFlavor::Qubit, nq));
    const std::int64_t a = static_cast<std::int64_t>(exc.occ_mask());
    const std::int64_t b = static_cast<std::int64_t>(exc.vir_mask());
    for (std::int64_t col = 0; col < (1 << nq); ++col) {
      if (col == a || col == b) continue;
      Eigen::VectorXcd e = Eigen::VectorXcd::Unit(1 << nq, col);
      CHECK(oracle::max_abs(u * e - e) < 1e-12);
    }
    CHECK(std::abs(u(a, a) - std::cos(theta)) < 1e-12);
    CHECK(std::abs(u(b, a) - std::sin(theta)) < 1e-12);
    CHECK(std::abs(u(a, b) + std::sin(theta)) < 1e-12);
    CHECK(std::abs(u(b, b) - std::cos(theta)) < 1e-12);
  }
}
