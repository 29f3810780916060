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

#include "exciteq/pauli.hpp"
#include "oracles.hpp"

using namespace exciteq;

namespace {
PauliTerm term(std::uint64_t x, std::uint64_t z, cplx c = {1, 0}) {
  return PauliTerm{c, x, z};
}
}  // namespace

TEST_CASE("single-qubit products") {
  // X * Y = iZ
  PauliTerm p = multiply(term(1, 0), term(1, 1));
  CHECK(p.x_mask == 0);
  CHECK(p.z_mask == 1);
  CHECK(p.coeff == cplx(0, 1));
  // identity absorbs
  PauliTerm q = multiply(term(0, 0), term(1, 1, {0.5, -0.25}));
  CHECK(q.x_mask == 1);
  CHECK(q.z_mask == 1);
  CHECK(q.coeff == cplx(0.5, -0.25));
}

TEST_CASE("two-qubit product matches the dense oracle") {
  // (Z0 X1) * (X0 X1)
  PauliTerm a = term(0b10, 0b01);
  PauliTerm b = term(0b11, 0b00);
  PauliTerm p = multiply(a, b);
  oracle::Mat lhs = oracle::term_matrix(a, 2) * oracle::term_matrix(b, 2);
  oracle::Mat rhs = oracle::term_matrix(p, 2);
  CHECK(oracle::max_abs(lhs - rhs) < 1e-14);
  // comes out as +i * Y0
  CHECK(p.x_mask == 0b01);
  CHECK(p.z_mask == 0b01);
  CHECK(std::abs(p.coeff - cplx(0, 1)) < 1e-15);
}

TEST_CASE("multiply is associative and phase-exact on random terms") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint64_t> mask(0, 15);
  for (int trial = 0; trial < 200; ++trial) {
    PauliTerm a = term(mask(rng), mask(rng));
    PauliTerm b = term(mask(rng), mask(rng));
    PauliTerm c = term(mask(rng), mask(rng));
    PauliTerm ab_c = multiply(multiply(a, b), c);
    PauliTerm a_bc = multiply(a, multiply(b, c));
    CHECK(ab_c.x_mask == a_bc.x_mask);
    CHECK(ab_c.z_mask == a_bc.z_mask);
    CHECK(std::abs(ab_c.coeff - a_bc.coeff) < 1e-14);
    oracle::Mat dense = oracle::term_matrix(a, 4) * oracle::term_matrix(b, 4);
    CHECK(oracle::max_abs(dense - oracle::term_matrix(multiply(a, b), 4)) <
          1e-14);
  }
}

TEST_CASE("commutes") {
  CHECK_FALSE(commutes(term(1, 0), term(0, 1)));  // X0 vs Z0
  // X0 Z1 vs Z0 X1 commute (two anticommuting positions)
  PauliTerm a = term(0b01, 0b10);
  PauliTerm b = term(0b10, 0b01);
  CHECK(commutes(a, b));
  oracle::Mat ma = oracle::term_matrix(a, 2), mb = oracle::term_matrix(b, 2);
  CHECK(oracle::max_abs(ma * mb - mb * ma) < 1e-14);
}

TEST_CASE("sum algebra matches dense arithmetic") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    PauliSum a = oracle::random_pauli_sum(rng, 3, 6);
    PauliSum b = oracle::random_pauli_sum(rng, 3, 6);
    const cplx alpha{0.7, -0.3};
    oracle::Mat ma = oracle::sum_matrix(a, 3), mb = oracle::sum_matrix(b, 3);
    CHECK(oracle::max_abs(oracle::sum_matrix(a + b, 3) - (ma + mb)) < 1e-13);
    CHECK(oracle::max_abs(oracle::sum_matrix(a.scaled(alpha), 3) - alpha * ma) <
          1e-13);
    CHECK(oracle::max_abs(oracle::sum_matrix(a * b, 3) - ma * mb) < 1e-12);
    CHECK(oracle::max_abs(oracle::sum_matrix(a.adjoint(), 3) - ma.adjoint()) <
          1e-13);
    // adjoint(ab) = adjoint(b) adjoint(a)
    PauliSum lhs = (a * b).adjoint();
    PauliSum rhs = b.adjoint() * a.adjoint();
    CHECK(oracle::max_abs(oracle::sum_matrix(lhs, 3) -
                          oracle::sum_matrix(rhs, 3)) < 1e-12);
  }
}

TEST_CASE("additive inverse and pruning") {
  std::mt19937 rng(17);
  PauliSum a = oracle::random_pauli_sum(rng, 4, 8);
  PauliSum zero = a + a.scaled({-1, 0});
  CHECK(zero.pruned().empty());
  PauliSum tiny;
  tiny.add_term(1, 0, {1e-16, 0});
  tiny.add_term(2, 0, {0.5, 0});
  CHECK(tiny.pruned().size() == 1);
}

TEST_CASE("hermiticity checks") {
  PauliSum h;
  h.add_term(1, 0, {0.3, 0});
  h.add_term(0, 3, {-1.25, 0});
  CHECK(h.is_hermitian());
  CHECK(h.adjoint() == h);
  h.add_term(3, 1, {0, 0.1});
  CHECK_FALSE(h.is_hermitian());
}

TEST_CASE("text rendering round-trips") {
  PauliSum s;
  s.add_term(0b100100, 0b100001, {0, -0.5});  // coeff -0.5i, letters Z0 X2 Y5
  CHECK(to_string(s) == "(-0.5i) Z0 X2 Y5");
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    PauliSum a = oracle::random_pauli_sum(rng, 5, 7).pruned();
    CHECK(parse_pauli_sum(to_string(a)) == a);
  }
  PauliSum ident = PauliSum::identity({0.25, 0.75});
  CHECK(parse_pauli_sum(to_string(ident)) == ident);
  CHECK_THROWS(parse_pauli_sum("Z0 (1)"));
  CHECK_THROWS(parse_pauli_sum("(1) W0"));
}
