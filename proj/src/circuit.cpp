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

#include "exciteq/circuit.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace exciteq {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Gate Gate::x(int t) { return Gate{GateKind::X, t, 0.0, {}}; }
Gate Gate::h(int t) { return Gate{GateKind::H, t, 0.0, {}}; }
Gate Gate::rx(int t, double angle) { return Gate{GateKind::Rx, t, angle, {}}; }
Gate Gate::ry(int t, double angle) { return Gate{GateKind::Ry, t, angle, {}}; }
Gate Gate::rz(int t, double angle) { return Gate{GateKind::Rz, t, angle, {}}; }
Gate Gate::cnot(int control, int t, Polarity pol) {
  return Gate{GateKind::CNOT, t, 0.0, {{control, pol}}};
}
Gate Gate::cz(int control, int t, Polarity pol) {
  return Gate{GateKind::CZ, t, 0.0, {{control, pol}}};
}
Gate Gate::mcry(int t, std::vector<ControlSpec> controls, double angle) {
  return Gate{GateKind::MCRy, t, angle, std::move(controls)};
}

Gate Gate::inverse() const {
  Gate g = *this;
  if (g.is_rotation()) g.angle = -g.angle;
  return g;
}

std::string to_string(GateKind k) {
  switch (k) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::Rx: return "Rx";
    case GateKind::Ry: return "Ry";
    case GateKind::Rz: return "Rz";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::MCRy: return "MCRy";
  }
  throw std::logic_error("unknown gate kind");
}

GateKind gate_kind_from_string(const std::string& s) {
  if (s == "X") return GateKind::X;
  if (s == "H") return GateKind::H;
  if (s == "Rx") return GateKind::Rx;
  if (s == "Ry") return GateKind::Ry;
  if (s == "Rz") return GateKind::Rz;
  if (s == "CNOT") return GateKind::CNOT;
  if (s == "CZ") return GateKind::CZ;
  if (s == "MCRy") return GateKind::MCRy;
  throw std::invalid_argument("unknown gate kind: " + s);
}

GateCount& GateCount::operator+=(const GateCount& o) {
  single_qubit += o.single_qubit;
  cnot += o.cnot;
  cz += o.cz;
  return *this;
}

Circuit::Circuit(int nq) : nq_(nq) {
  require(nq >= 1 && nq <= 64, "qubit count must be in [1, 64]");
}

void Circuit::append(const Gate& g) {
  require(g.target >= 0 && g.target < nq_, "gate target out of range");
  require(std::isfinite(g.angle), "gate angle must be finite");
  switch (g.kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
      require(g.controls.empty(), "single-qubit gate cannot carry controls");
      break;
    case GateKind::CNOT:
    case GateKind::CZ:
      require(g.controls.size() == 1, "CNOT/CZ take exactly one control");
      break;
    case GateKind::MCRy:
      require(!g.controls.empty(), "MCRy needs at least one control");
      break;
  }
  for (const auto& c : g.controls) {
    require(c.qubit >= 0 && c.qubit < nq_, "control qubit out of range");
    require(c.qubit != g.target, "control must differ from target");
  }
  gates_.push_back(g);
}

void Circuit::append(const Circuit& other) {
  require(other.nq_ <= nq_, "composed circuit exceeds qubit count");
  for (const auto& g : other.gates_) append(g);
}

Circuit compose(const Circuit& a, const Circuit& b) {
  Circuit out(std::max(a.nq_, b.nq_));
  out.append(a);
  out.append(b);
  return out;
}

Circuit Circuit::inverse() const {
  Circuit out(nq_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it)
    out.append(it->inverse());
  return out;
}

GateCount Circuit::count_gates() const {
  GateCount c;
  for (const auto& g : gates_) {
    switch (g.kind) {
      case GateKind::MCRy:
        throw std::invalid_argument(
            "cannot count a circuit containing an undecomposed MCRy");
      case GateKind::CNOT: ++c.cnot; break;
      case GateKind::CZ: ++c.cz; break;
      default: ++c.single_qubit; break;
    }
  }
  return c;
}

std::string Circuit::to_json() const {
  nlohmann::json j;
  j["nq"] = nq_;
  auto& gs = j["gates"] = nlohmann::json::array();
  for (const auto& g : gates_) {
    nlohmann::json jg;
    jg["kind"] = to_string(g.kind);
    jg["target"] = g.target;
    if (g.is_rotation()) jg["angle"] = g.angle;
    auto ctrls = nlohmann::json::array();
    for (const auto& c : g.controls)
      ctrls.push_back({c.qubit, c.polarity == Polarity::Control ? "+" : "-"});
    jg["controls"] = ctrls;
    gs.push_back(jg);
  }
  return j.dump();
}

Circuit Circuit::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Circuit c(j.at("nq").get<int>());
  for (const auto& jg : j.at("gates")) {
    Gate g;
    g.kind = gate_kind_from_string(jg.at("kind").get<std::string>());
    g.target = jg.at("target").get<int>();
    g.angle = jg.value("angle", 0.0);
    for (const auto& jc : jg.at("controls")) {
      g.controls.push_back(
          {jc.at(0).get<int>(), jc.at(1).get<std::string>() == "+"
                                    ? Polarity::Control
                                    : Polarity::AntiControl});
    }
    c.append(g);
  }
  return c;
}

}  // namespace exciteq
