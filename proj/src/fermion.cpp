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

#include "exciteq/fermion.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace exciteq {

Excitation::Excitation(std::vector<int> occupied, std::vector<int> virt)
    : occ_(std::move(occupied)), vir_(std::move(virt)) {
  if (occ_.empty() || occ_.size() != vir_.size())
    throw std::invalid_argument("excitation index lists must be nonempty and equal length");
  std::sort(occ_.begin(), occ_.end());
  std::sort(vir_.begin(), vir_.end());
  std::set<int> all;
  for (int q : occ_) all.insert(q);
  for (int q : vir_) all.insert(q);
  if (all.size() != occ_.size() + vir_.size())
    throw std::invalid_argument("excitation indices must be distinct");
  if (*all.begin() < 0 || *all.rbegin() >= 64)
    throw std::invalid_argument("excitation index out of range");
  for (int q : occ_) occ_mask_ |= std::uint64_t{1} << q;
  for (int q : vir_) vir_mask_ |= std::uint64_t{1} << q;
  std::vector<int> sorted(all.begin(), all.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); i += 2) {
    for (int r = sorted[i] + 1; r < sorted[i + 1]; ++r)
      gap_mask_ |= std::uint64_t{1} << r;
  }
}

int Excitation::max_index() const {
  return std::max(occ_.back(), vir_.back());
}

std::string Excitation::to_string() const {
  std::ostringstream os;
  os << "occ:";
  for (std::size_t i = 0; i < occ_.size(); ++i)
    os << (i ? "," : "") << occ_[i];
  os << ";vir:";
  for (std::size_t i = 0; i < vir_.size(); ++i)
    os << (i ? "," : "") << vir_[i];
  return os.str();
}

bool excitation_less(const Excitation& a, const Excitation& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  return a < b;
}

Excitation parse_excitation(const std::string& spec) {
  auto semi = spec.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("expected 'occ:...;vir:...': " + spec);
  auto parse_list = [](std::string part, const std::string& tag) {
    if (part.rfind(tag + ":", 0) != 0)
      throw std::invalid_argument("expected '" + tag + ":' prefix in operator spec");
    part = part.substr(tag.size() + 1);
    std::vector<int> out;
    std::istringstream in(part);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    return out;
  };
  return Excitation(parse_list(spec.substr(0, semi), "occ"),
                    parse_list(spec.substr(semi + 1), "vir"));
}

PauliSum jw_ladder(int index, LadderKind kind, int nq) {
  if (index < 0 || index >= nq)
    throw std::out_of_range("spin-orbital index out of range");
  const std::uint64_t bit = std::uint64_t{1} << index;
  const cplx half_i =
      kind == LadderKind::Create ? cplx{0, -0.5} : cplx{0, 0.5};
  PauliSum q;
  q.add_term(bit, 0, {0.5, 0});  // X/2
  q.add_term(bit, bit, half_i);  // -iY/2 (create) or +iY/2 (annihilate)
  PauliSum zstring = PauliSum::identity();
  for (int i = 0; i < index; ++i) {
    PauliSum zi;
    zi.add_term(0, std::uint64_t{1} << i, {1, 0});
    zstring = zstring * zi;
  }
  return q * zstring;
}

PauliSum excitation_to_paulisum(const Excitation& exc, ExcitationFlavor flavor,
                                int nq) {
  if (exc.max_index() >= nq)
    throw std::out_of_range("excitation exceeds qubit count");
  // Application order: annihilate occupied ascending, create virtual
  // ascending; as a matrix product the last-applied factor is leftmost.
  std::vector<PauliSum> factors;
  for (int o : exc.occupied())
    factors.push_back(jw_ladder(o, LadderKind::Annihilate, nq));
  for (int v : exc.virtuals())
    factors.push_back(jw_ladder(v, LadderKind::Create, nq));
  if (flavor == ExcitationFlavor::Qubit) {
    // Drop the Z strings: keep only the on-site (X -+ iY)/2 parts.
    for (std::size_t i = 0; i < factors.size(); ++i) {
      int idx = i < exc.occupied().size()
                    ? exc.occupied()[i]
                    : exc.virtuals()[i - exc.occupied().size()];
      bool create = i >= exc.occupied().size();
      const std::uint64_t bit = std::uint64_t{1} << idx;
      PauliSum q;
      q.add_term(bit, 0, {0.5, 0});
      q.add_term(bit, bit, create ? cplx{0, -0.5} : cplx{0, 0.5});
      factors[i] = q;
    }
  }
  // factors are listed in application order; later factors multiply on
  // the left
  PauliSum product = PauliSum::identity();
  for (const auto& f : factors) product = f * product;
  PauliSum kappa = product - product.adjoint();
  kappa.prune();
  return kappa;
}

Eigen::MatrixXcd to_matrix(const PauliSum& sum, int nq) {
  const std::int64_t dim = std::int64_t{1} << nq;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [key, c] : sum.terms()) {
    // P(x,z)|b> = i^{|x&z|} (-1)^{|z&b|} |b^x>
    const int y_count = std::popcount(key.x & key.z);
    cplx base = c;
    switch (y_count % 4) {
      case 1: base *= cplx{0, 1}; break;
      case 2: base *= -1.0; break;
      case 3: base *= cplx{0, -1}; break;
      default: break;
    }
    for (std::int64_t b = 0; b < dim; ++b) {
      const double sign =
          std::popcount(static_cast<std::uint64_t>(b) & key.z) % 2 ? -1.0
                                                                   : 1.0;
      m(b ^ static_cast<std::int64_t>(key.x), b) += base * sign;
    }
  }
  return m;
}

Eigen::MatrixXcd matrix_of(const Excitation& exc, ExcitationFlavor flavor,
                           int nq) {
  if (nq > kOracleQubitCap)
    throw std::invalid_argument("dense oracle capped at 12 qubits");
  return to_matrix(excitation_to_paulisum(exc, flavor, nq), nq);
}

}  // namespace exciteq
