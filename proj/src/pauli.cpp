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

#include "exciteq/pauli.hpp"

#include <bit>
#include <cstdio>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace exciteq {

namespace {

int popcount(std::uint64_t v) { return std::popcount(v); }

cplx ipow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

PauliTerm multiply(const PauliTerm& a, const PauliTerm& b) {
  // With P(x,z) = i^{|x&z|} X^x Z^z, the product phase is
  // i^{|x1&z1| + |x2&z2| - |x3&z3|} * (-1)^{|z1&x2|}.
  PauliTerm r;
  r.x_mask = a.x_mask ^ b.x_mask;
  r.z_mask = a.z_mask ^ b.z_mask;
  int k = popcount(a.x_mask & a.z_mask) + popcount(b.x_mask & b.z_mask) -
          popcount(r.x_mask & r.z_mask);
  cplx phase = ipow(k);
  if (popcount(a.z_mask & b.x_mask) % 2) phase = -phase;
  r.coeff = a.coeff * b.coeff * phase;
  return r;
}

bool commutes(const PauliTerm& a, const PauliTerm& b) {
  int anti = popcount(a.z_mask & b.x_mask) + popcount(a.x_mask & b.z_mask);
  return anti % 2 == 0;
}

char letter_at(std::uint64_t x_mask, std::uint64_t z_mask, int qubit) {
  const bool x = (x_mask >> qubit) & 1;
  const bool z = (z_mask >> qubit) & 1;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

PauliSum PauliSum::identity(cplx c) {
  PauliSum s;
  s.add_term(0, 0, c);
  return s;
}

void PauliSum::add_term(const PauliTerm& t) {
  add_term(t.x_mask, t.z_mask, t.coeff);
}

void PauliSum::add_term(std::uint64_t x_mask, std::uint64_t z_mask, cplx c) {
  terms_[Key{z_mask, x_mask}] += c;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  for (const auto& [k, c] : other.terms_) terms_[k] += c;
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  for (const auto& [k, c] : other.terms_) terms_[k] -= c;
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  PauliSum out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      PauliTerm p = multiply({ca, ka.x, ka.z}, {cb, kb.x, kb.z});
      out.add_term(p);
    }
  }
  return out;
}

PauliSum PauliSum::scaled(cplx factor) const {
  PauliSum out;
  for (const auto& [k, c] : terms_) out.terms_[k] = c * factor;
  return out;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out;
  for (const auto& [k, c] : terms_) out.terms_[k] = std::conj(c);
  return out;
}

PauliSum PauliSum::pruned(double tol) const {
  PauliSum out;
  for (const auto& [k, c] : terms_) {
    if (std::abs(c) > tol) out.terms_[k] = c;
  }
  return out;
}

void PauliSum::prune(double tol) { *this = pruned(tol); }

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [k, c] : terms_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

bool PauliSum::is_antihermitian(double tol) const {
  for (const auto& [k, c] : terms_) {
    if (std::abs(c.real()) > tol) return false;
  }
  return true;
}

cplx PauliSum::coefficient(std::uint64_t x_mask, std::uint64_t z_mask) const {
  auto it = terms_.find(Key{z_mask, x_mask});
  return it == terms_.end() ? cplx{0, 0} : it->second;
}

int PauliSum::min_qubits() const {
  std::uint64_t all = 0;
  for (const auto& [k, c] : terms_) all |= k.x | k.z;
  int n = 0;
  while (all) {
    ++n;
    all >>= 1;
  }
  return n;
}

double PauliSum::max_abs_coeff() const {
  double m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

namespace {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_coeff(cplx c) {
  const double re = c.real(), im = c.imag();
  std::ostringstream os;
  if (im == 0.0) {
    os << "(" << format_real(re) << ")";
  } else if (re == 0.0) {
    os << "(" << format_real(im) << "i)";
  } else {
    os << "(" << format_real(re) << (im >= 0 ? "+" : "-")
       << format_real(std::abs(im)) << "i)";
  }
  return os.str();
}

}  // namespace

std::string to_string(const PauliTerm& t) {
  std::string s = format_coeff(t.coeff);
  std::uint64_t support = t.x_mask | t.z_mask;
  if (!support) return s + " I";
  for (int q = 0; q < 64; ++q) {
    if ((support >> q) & 1) {
      s += ' ';
      s += letter_at(t.x_mask, t.z_mask, q);
      s += std::to_string(q);
    }
  }
  return s;
}

std::string to_string(const PauliSum& s) {
  if (s.empty()) return "(0)";
  std::string out;
  for (const auto& [k, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(PauliTerm{c, k.x, k.z});
  }
  return out;
}

namespace {

cplx parse_coeff(const std::string& tok) {
  // "(a)", "(bi)", "(a+bi)", "(a-bi)"
  if (tok.size() < 3 || tok.front() != '(' || tok.back() != ')')
    throw std::invalid_argument("bad coefficient token: " + tok);
  std::string body = tok.substr(1, tok.size() - 2);
  bool imag = false;
  if (!body.empty() && body.back() == 'i') {
    imag = true;
    body.pop_back();
  }
  // split on the last +/- that is not an exponent sign or the leading sign
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < body.size(); ++i) {
    if ((body[i] == '+' || body[i] == '-') &&
        body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
    }
  }
  if (!imag) return {std::stod(body), 0.0};
  if (split == std::string::npos) return {0.0, std::stod(body)};
  double re = std::stod(body.substr(0, split));
  double im = std::stod(body.substr(split));
  return {re, im};
}

}  // namespace

PauliSum parse_pauli_sum(const std::string& text) {
  PauliSum out;
  std::istringstream in(text);
  std::string tok;
  cplx coeff{0, 0};
  std::uint64_t x = 0, z = 0;
  bool have_term = false;
  auto flush = [&] {
    if (have_term && coeff != cplx{0, 0}) out.add_term(x, z, coeff);
    x = z = 0;
    have_term = false;
  };
  while (in >> tok) {
    if (tok == "+") {
      flush();
      continue;
    }
    if (tok.front() == '(') {
      flush();
      coeff = parse_coeff(tok);
      have_term = true;
      continue;
    }
    if (!have_term) throw std::invalid_argument("letters before coefficient");
    if (tok == "I") continue;
    char L = tok[0];
    int q = std::stoi(tok.substr(1));
    if (q < 0 || q >= 64) throw std::invalid_argument("qubit out of range");
    if (L == 'X' || L == 'Y') x |= std::uint64_t{1} << q;
    if (L == 'Z' || L == 'Y') z |= std::uint64_t{1} << q;
    if (L != 'X' && L != 'Y' && L != 'Z')
      throw std::invalid_argument(std::string("bad Pauli letter: ") + tok);
  }
  flush();
  return out;
}

}  // namespace exciteq
