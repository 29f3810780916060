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
#include <string>
#include <vector>

namespace exciteq {

enum class GateKind { X, H, Rx, Ry, Rz, CNOT, CZ, MCRy };
enum class Polarity { Control, AntiControl };

struct ControlSpec {
  int qubit;
  Polarity polarity = Polarity::Control;
  friend bool operator==(const ControlSpec&, const ControlSpec&) = default;
};

/// One gate. CNOT/CZ carry exactly one control; single-qubit kinds none;
/// MCRy one or more (possibly anti-)controls. Angles are radians.
struct Gate {
  GateKind kind;
  int target = 0;
  double angle = 0.0;
  std::vector<ControlSpec> controls;

  static Gate x(int t);
  static Gate h(int t);
  static Gate rx(int t, double angle);
  static Gate ry(int t, double angle);
  static Gate rz(int t, double angle);
  static Gate cnot(int control, int t,
                   Polarity pol = Polarity::Control);
  static Gate cz(int control, int t, Polarity pol = Polarity::Control);
  static Gate mcry(int t, std::vector<ControlSpec> controls, double angle);

  bool is_rotation() const {
    return kind == GateKind::Rx || kind == GateKind::Ry ||
           kind == GateKind::Rz || kind == GateKind::MCRy;
  }
  /// Reversed gate: rotations negate the angle, the rest are self-inverse.
  Gate inverse() const;
};

std::string to_string(GateKind k);
GateKind gate_kind_from_string(const std::string& s);

struct GateCount {
  std::int64_t single_qubit = 0;
  std::int64_t cnot = 0;
  std::int64_t cz = 0;
  GateCount& operator+=(const GateCount& o);
  friend GateCount operator+(GateCount a, const GateCount& b) { return a += b; }
  friend bool operator==(const GateCount&, const GateCount&) = default;
};

class Circuit {
 public:
  explicit Circuit(int nq);

  int num_qubits() const { return nq_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Validates qubit ranges and control/target disjointness.
  void append(const Gate& g);
  void append(const Circuit& other);

  friend Circuit compose(const Circuit& a, const Circuit& b);

  /// Gate order reversed, rotation angles negated.
  Circuit inverse() const;

  /// Exact tallies by kind; throws if an MCRy is still present.
  GateCount count_gates() const;

  std::string to_json() const;
  static Circuit from_json(const std::string& text);

 private:
  int nq_;
  std::vector<Gate> gates_;
};

}  // namespace exciteq
