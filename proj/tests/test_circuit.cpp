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

#include "exciteq/circuit.hpp"
#include "exciteq/sim.hpp"
#include "oracles.hpp"

using namespace exciteq;

namespace {

Circuit random_circuit(std::mt19937& rng, int nq, int ngates) {
  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_int_distribution<int> qubit(0, nq - 1);
  std::uniform_real_distribution<double> angle(-3.14, 3.14);
  Circuit c(nq);
  for (int i = 0; i < ngates; ++i) {
    const int t = qubit(rng);
    switch (kind(rng)) {
      case 0: c.append(Gate::h(t)); break;
      case 1: c.append(Gate::rx(t, angle(rng))); break;
      case 2: c.append(Gate::ry(t, angle(rng))); break;
      case 3: c.append(Gate::rz(t, angle(rng))); break;
      default: {
        int ctl = qubit(rng);
        while (ctl == t) ctl = qubit(rng);
        const Polarity pol =
            kind(rng) % 2 ? Polarity::Control : Polarity::AntiControl;
        c.append(kind(rng) >= 3 ? Gate::cnot(ctl, t, pol)
                                : Gate::cz(ctl, t, pol));
        break;
      }
    }
  }
  return c;
}

}  // namespace

TEST_CASE("validation") {
  Circuit c(3);
  CHECK_THROWS(c.append(Gate::x(3)));
  CHECK_THROWS(c.append(Gate::cnot(1, 1)));
  CHECK_THROWS(c.append(Gate::ry(0, std::nan(""))));
  CHECK_THROWS(c.append(Gate{GateKind::CNOT, 0, 0.0, {}}));
  CHECK_THROWS(c.append(Gate::mcry(0, {}, 0.5)));
  c.append(Gate::mcry(0, {{1, Polarity::AntiControl}}, 0.5));
  CHECK(c.size() == 1);
}

TEST_CASE("inverse undoes a random circuit") {
  std::mt19937 rng(31);
  Circuit c = random_circuit(rng, 4, 30);
  CHECK(c.inverse().gates().front().kind == c.gates().back().kind);
  Circuit id = compose(c, c.inverse());
  StateVector psi(4);
  std::uniform_real_distribution<double> re(-1, 1);
  double norm2 = 0;
  for (std::int64_t i = 0; i < psi.dim(); ++i) {
    psi[i] = cplx(re(rng), re(rng));
    norm2 += std::norm(psi[i]);
  }
  for (std::int64_t i = 0; i < psi.dim(); ++i) psi[i] /= std::sqrt(norm2);
  const StateVector back = apply_circuit(psi, id);
  double dev = 0;
  for (std::int64_t i = 0; i < psi.dim(); ++i)
    dev = std::max(dev, std::abs(back[i] - psi[i]));
  CHECK(dev < 1e-12);
  CHECK(Gate::ry(0, 0.7).inverse().angle == -0.7);
}

TEST_CASE("inverse of a CNOT staircase is the reversed staircase") {
  Circuit stair(4);
  stair.append(Gate::cnot(0, 1));
  stair.append(Gate::cnot(1, 2));
  stair.append(Gate::cnot(2, 3));
  Circuit rev(4);
  rev.append(Gate::cnot(2, 3));
  rev.append(Gate::cnot(1, 2));
  rev.append(Gate::cnot(0, 1));
  CHECK(oracle::max_abs(circuit_unitary(stair.inverse()) -
                        circuit_unitary(rev)) < 1e-14);
}

TEST_CASE("gate counts") {
  Circuit c(3);
  CHECK(c.count_gates() == GateCount{});
  c.append(Gate::h(0));
  c.append(Gate::cnot(0, 1));
  c.append(Gate::cz(1, 2));
  c.append(Gate::rz(2, 0.1));
  const GateCount gc = c.count_gates();
  CHECK(gc.single_qubit == 2);
  CHECK(gc.cnot == 1);
  CHECK(gc.cz == 1);

  Circuit d(3);
  d.append(Gate::ry(1, 0.4));
  const GateCount sum = compose(c, d).count_gates();
  CHECK(sum == gc + d.count_gates());

  Circuit bad(3);
  bad.append(Gate::mcry(0, {{1, Polarity::Control}}, 0.2));
  CHECK_THROWS(bad.count_gates());
}

TEST_CASE("json round-trip") {
  std::mt19937 rng(77);
  Circuit c = random_circuit(rng, 5, 25);
  c.append(Gate::mcry(0, {{2, Polarity::Control}, {4, Polarity::AntiControl}},
                      -0.33));
  const Circuit back = Circuit::from_json(c.to_json());
  REQUIRE(back.size() == c.size());
  CHECK(back.num_qubits() == c.num_qubits());
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(back.gates()[i].kind == c.gates()[i].kind);
    CHECK(back.gates()[i].target == c.gates()[i].target);
    CHECK(back.gates()[i].angle == c.gates()[i].angle);
    CHECK(back.gates()[i].controls == c.gates()[i].controls);
  }
}
