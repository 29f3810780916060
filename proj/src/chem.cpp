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

#include "exciteq/chem.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "exciteq/fermion.hpp"

namespace exciteq {

MolecularIntegrals::MolecularIntegrals(int n_spatial, int n_electrons, int ms2,
                                       double e_nuc)
    : n_spatial_(n_spatial),
      n_electrons_(n_electrons),
      ms2_(ms2),
      e_nuc_(e_nuc) {
  if (n_spatial < 1 || n_spatial > 32)
    throw std::invalid_argument("spatial orbital count out of range");
  if (n_electrons < 0 || n_electrons > 2 * n_spatial)
    throw std::invalid_argument("electron count out of range");
  const std::size_t n = static_cast<std::size_t>(n_spatial);
  h_.assign(n * n, 0.0);
  g_.assign(n * n * n * n, 0.0);
}

std::size_t MolecularIntegrals::idx2(int p, int q) const {
  return static_cast<std::size_t>(p) * n_spatial_ + q;
}

std::size_t MolecularIntegrals::idx4(int p, int q, int r, int s) const {
  const std::size_t n = static_cast<std::size_t>(n_spatial_);
  return ((static_cast<std::size_t>(p) * n + q) * n + r) * n + s;
}

void MolecularIntegrals::set_h1(int p, int q, double v, double tol) {
  for (auto [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
    double& slot = h_[idx2(a, b)];
    if (slot != 0.0 && std::abs(slot - v) > tol)
      throw std::invalid_argument("symmetry-inconsistent one-electron entry");
    slot = v;
  }
}

void MolecularIntegrals::set_eri(int p, int q, int r, int s, double v,
                                 double tol) {
  const std::array<std::array<int, 4>, 8> perms = {{
      {p, q, r, s}, {q, p, r, s}, {p, q, s, r}, {q, p, s, r},
      {r, s, p, q}, {s, r, p, q}, {r, s, q, p}, {s, r, q, p},
  }};
  for (const auto& e : perms) {
    double& slot = g_[idx4(e[0], e[1], e[2], e[3])];
    if (slot != 0.0 && std::abs(slot - v) > tol)
      throw std::invalid_argument("symmetry-inconsistent two-electron entry");
    slot = v;
  }
}

double MolecularIntegrals::so_h1(int p, int q) const {
  if ((p & 1) != (q & 1)) return 0.0;
  return h1(p / 2, q / 2);
}

double MolecularIntegrals::so_antisym(int p, int q, int r, int s) const {
  double v = 0.0;
  if ((p & 1) == (r & 1) && (q & 1) == (s & 1))
    v += eri(p / 2, r / 2, q / 2, s / 2);
  if ((p & 1) == (s & 1) && (q & 1) == (r & 1))
    v -= eri(p / 2, s / 2, q / 2, r / 2);
  return v;
}

namespace {

int header_field(const std::string& head, const std::string& name,
                 bool required, int fallback = 0) {
  std::regex re(name + R"(\s*=\s*(-?\d+))", std::regex::icase);
  std::smatch m;
  if (std::regex_search(head, m, re)) return std::stoi(m[1]);
  if (required)
    throw std::invalid_argument("FCIDUMP header missing " + name);
  return fallback;
}

}  // namespace

MolecularIntegrals parse_fcidump(std::istream& in) {
  std::string line;
  std::string head;
  bool header_done = false;
  while (std::getline(in, line)) {
    head += line + " ";
    const auto slash = line.find('/');
    if (line.find("&END") != std::string::npos ||
        line.find("&end") != std::string::npos ||
        slash != std::string::npos) {
      header_done = true;
      break;
    }
  }
  if (!header_done || head.find("&FCI") == std::string::npos)
    throw std::invalid_argument("malformed FCIDUMP header");
  const int norb = header_field(head, "NORB", true);
  const int nelec = header_field(head, "NELEC", true);
  const int ms2 = header_field(head, "MS2", false, 0);
  MolecularIntegrals ints(norb, nelec, ms2, 0.0);
  double v;
  int i, j, k, l;
  while (in >> v >> i >> j >> k >> l) {
    for (int idx : {i, j, k, l}) {
      if (idx < 0 || idx > norb)
        throw std::invalid_argument("FCIDUMP index out of range");
    }
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      ints.set_e_nuc(v);
    } else if (k == 0 && l == 0) {
      if (i == 0 || j == 0)
        throw std::invalid_argument("malformed one-electron entry");
      ints.set_h1(i - 1, j - 1, v);
    } else {
      if (i == 0 || j == 0 || k == 0 || l == 0)
        throw std::invalid_argument("malformed two-electron entry");
      ints.set_eri(i - 1, j - 1, k - 1, l - 1, v);
    }
  }
  return ints;
}

MolecularIntegrals parse_fcidump_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open FCIDUMP file: " + path);
  return parse_fcidump(in);
}

std::string serialize_fcidump(const MolecularIntegrals& ints) {
  std::ostringstream os;
  const int n = ints.n_spatial();
  os << "&FCI NORB=" << n << ",NELEC=" << ints.n_electrons()
     << ",MS2=" << ints.ms2() << ",\n  ORBSYM=";
  for (int p = 0; p < n; ++p) os << "1,";
  os << "\n  ISYM=1,\n &END\n";
  os.setf(std::ios::scientific);
  os.precision(16);
  auto emit = [&](double v, int i, int j, int k, int l) {
    if (v == 0.0) return;
    os << v << "  " << i << "  " << j << "  " << k << "  " << l << "\n";
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k <= i; ++k) {
        const int lmax = (k == i) ? j : k;
        for (int l = 0; l <= lmax; ++l)
          emit(ints.eri(i, j, k, l), i + 1, j + 1, k + 1, l + 1);
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) emit(ints.h1(i, j), i + 1, j + 1, 0, 0);
  os << ints.e_nuc() << "  0  0  0  0\n";
  return os.str();
}

QubitHamiltonian build_hamiltonian(const MolecularIntegrals& ints) {
  const int nq = ints.n_spin_orbitals();
  std::vector<PauliSum> create(nq), annih(nq);
  for (int p = 0; p < nq; ++p) {
    create[p] = jw_ladder(p, LadderKind::Create, nq);
    annih[p] = jw_ladder(p, LadderKind::Annihilate, nq);
  }
  PauliSum h = PauliSum::identity(cplx{ints.e_nuc(), 0});
  for (int p = 0; p < nq; ++p) {
    for (int q = 0; q < nq; ++q) {
      const double v = ints.so_h1(p, q);
      if (std::abs(v) < 1e-14) continue;
      h += (create[p] * annih[q]).scaled(v);
    }
    h.prune(1e-12);
  }
  for (int p = 0; p < nq; ++p) {
    for (int q = 0; q < nq; ++q) {
      if (q == p) continue;
      PauliSum cc = create[p] * create[q];
      for (int r = 0; r < nq; ++r) {
        for (int s = 0; s < nq; ++s) {
          if (s == r) continue;
          const double v = ints.so_antisym(p, q, r, s);
          if (std::abs(v) < 1e-14) continue;
          h += (cc * annih[s] * annih[r]).scaled(0.25 * v);
        }
      }
      h.prune(1e-12);
    }
  }
  return QubitHamiltonian{h.pruned(1e-12), nq};
}

std::uint64_t hf_determinant(const MolecularIntegrals& ints) {
  if (ints.n_electrons() % 2 != 0)
    throw std::invalid_argument(
        "odd electron count needs an explicit occupation");
  return (std::uint64_t{1} << ints.n_electrons()) - 1;
}

std::vector<double> orbital_energies(const MolecularIntegrals& ints) {
  const int nq = ints.n_spin_orbitals();
  const int nel = ints.n_electrons();
  std::vector<double> eps(nq);
  for (int p = 0; p < nq; ++p) {
    double e = ints.so_h1(p, p);
    for (int q = 0; q < nel; ++q) e += ints.so_antisym(p, q, p, q);
    eps[p] = e;
  }
  return eps;
}

double hf_energy(const MolecularIntegrals& ints) {
  const int nel = ints.n_electrons();
  double e = ints.e_nuc();
  for (int p = 0; p < nel; ++p) {
    e += ints.so_h1(p, p);
    for (int q = 0; q < nel; ++q) e += 0.5 * ints.so_antisym(p, q, p, q);
  }
  return e;
}

FciResult fci_solve(const QubitHamiltonian& h, int n_electrons, int ms2) {
  const int nq = h.nq;
  if (nq > kMaxSimQubits)
    throw std::invalid_argument("fci_solve capped at 16 qubits");
  const std::int64_t dim = std::int64_t{1} << nq;
  std::vector<std::int64_t> sector;
  for (std::int64_t b = 0; b < dim; ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    if (std::popcount(ub) != n_electrons) continue;
    int sz2 = 0;
    for (int q = 0; q < nq; ++q) {
      if ((ub >> q) & 1) sz2 += (q % 2 == 0) ? 1 : -1;
    }
    if (sz2 == ms2) sector.push_back(b);
  }
  if (sector.empty()) throw std::invalid_argument("empty (N, Sz) sector");
  const std::int64_t sdim = static_cast<std::int64_t>(sector.size());
  std::vector<std::int64_t> where(dim, -1);
  for (std::int64_t i = 0; i < sdim; ++i) where[sector[i]] = i;
  Eigen::MatrixXcd hs = Eigen::MatrixXcd::Zero(sdim, sdim);
  for (std::int64_t col = 0; col < sdim; ++col) {
    StateVector e(nq);
    e[sector[col]] = 1.0;
    const StateVector he = apply_paulisum(e, h.paulis);
    for (std::int64_t b = 0; b < dim; ++b) {
      if (where[b] >= 0 && he[b] != cplx{0, 0}) hs(where[b], col) = he[b];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hs);
  FciResult out{es.eigenvalues()(0), StateVector(nq),
                static_cast<int>(sdim)};
  const Eigen::VectorXcd v = es.eigenvectors().col(0);
  // deterministic phase: largest-magnitude amplitude real positive
  std::int64_t imax = 0;
  for (std::int64_t i = 1; i < sdim; ++i) {
    if (std::abs(v(i)) > std::abs(v(imax))) imax = i;
  }
  const cplx phase = std::abs(v(imax)) > 0 ? v(imax) / std::abs(v(imax))
                                           : cplx{1, 0};
  for (std::int64_t i = 0; i < sdim; ++i)
    out.ground[sector[i]] = v(i) / phase;
  return out;
}

}  // namespace exciteq
