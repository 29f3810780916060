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

#include "exciteq/solvers.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "exciteq/util.hpp"

namespace exciteq {

namespace {

int sz2_of_indices(const std::vector<int>& idxs) {
  int s = 0;
  for (int q : idxs) s += (q % 2 == 0) ? 1 : -1;
  return s;
}

std::vector<std::vector<int>> combinations(const std::vector<int>& items,
                                           int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  const int n = static_cast<int>(items.size());
  if (k > n || k <= 0) return out;
  while (true) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = items[idx[i]];
    out.push_back(std::move(pick));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

void AnsatzState::push(const Excitation& exc, ExcitationFlavor flavor,
                       double param) {
  ops.push_back({exc, flavor});
  params.push_back(param);
}

void AnsatzState::validate() const {
  if (ops.size() != params.size())
    throw std::invalid_argument("ansatz ops/params length mismatch");
  for (double t : params) {
    if (!std::isfinite(t))
      throw std::invalid_argument("ansatz parameter not finite");
  }
}

StateVector ansatz_apply(const AnsatzState& state, const StateVector& psi0,
                         ApplyMode mode) {
  state.validate();
  StateVector psi = psi0;
  if (mode == ApplyMode::Exact) {
    ansatz_apply_inplace(state, psi);
    return psi;
  }
  const int nq = psi.num_qubits();
  for (int k = 0; k < state.size(); ++k) {
    const CircuitFamily fam =
        state.ops[k].flavor == ExcitationFlavor::Fermionic
            ? (state.family == CircuitFamily::StandardFermionic
                   ? CircuitFamily::StandardFermionic
                   : CircuitFamily::FEB)
            : (state.family == CircuitFamily::StandardQubit
                   ? CircuitFamily::StandardQubit
                   : CircuitFamily::QEB);
    const Circuit c = synth(state.ops[k].exc, fam, state.params[k], nq);
    apply_circuit_inplace(psi, c);
  }
  return psi;
}

void ansatz_apply_inplace(const AnsatzState& state, StateVector& psi) {
  for (int k = 0; k < state.size(); ++k) {
    apply_excitation_rotation(psi, state.ops[k].exc, state.ops[k].flavor,
                              state.params[k]);
  }
}

void ansatz_unapply_inplace(const AnsatzState& state, StateVector& psi) {
  for (int k = state.size() - 1; k >= 0; --k) {
    apply_excitation_rotation(psi, state.ops[k].exc, state.ops[k].flavor,
                              -state.params[k]);
  }
}

GateCount ansatz_gate_count(const AnsatzState& state, CircuitFamily family) {
  GateCount total;
  for (const auto& op : state.ops) total += count_formula(op.exc, family);
  return total;
}

PoolKind pool_kind_from_string(const std::string& s) {
  if (s == "full") return PoolKind::ParticleHoleFull;
  if (s == "sd") return PoolKind::ParticleHoleSD;
  if (s == "gsd") return PoolKind::GeneralizedSD;
  throw std::invalid_argument("unknown pool kind: " + s);
}

std::string to_string(PoolKind k) {
  switch (k) {
    case PoolKind::ParticleHoleFull: return "full";
    case PoolKind::ParticleHoleSD: return "sd";
    case PoolKind::GeneralizedSD: return "gsd";
  }
  throw std::logic_error("unknown pool kind");
}

OperatorPool build_pool(PoolKind kind, std::uint64_t reference, int nq,
                        int max_rank) {
  OperatorPool pool{kind, {}};
  if (kind == PoolKind::GeneralizedSD) {
    for (int p = 0; p < nq; ++p) {
      for (int q = p + 1; q < nq; ++q) {
        if ((p % 2) == (q % 2)) pool.candidates.emplace_back(
            std::vector<int>{p}, std::vector<int>{q});
      }
    }
    std::vector<int> all(nq);
    for (int i = 0; i < nq; ++i) all[i] = i;
    for (const auto& four : combinations(all, 4)) {
      // three pairings of four distinct indices; keep occ < vir
      static const int split[3][2][2] = {
          {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
      for (const auto& sp : split) {
        std::vector<int> o{four[sp[0][0]], four[sp[0][1]]};
        std::vector<int> v{four[sp[1][0]], four[sp[1][1]]};
        if (sz2_of_indices(o) != sz2_of_indices(v)) continue;
        if (std::tie(o[0], o[1]) > std::tie(v[0], v[1])) std::swap(o, v);
        pool.candidates.emplace_back(o, v);
      }
    }
  } else {
    std::vector<int> occ_ref, vir_ref;
    for (int q = 0; q < nq; ++q) {
      if ((reference >> q) & 1) occ_ref.push_back(q);
      else vir_ref.push_back(q);
    }
    int top = kind == PoolKind::ParticleHoleSD
                  ? 2
                  : (max_rank > 0 ? max_rank
                                  : static_cast<int>(occ_ref.size()));
    top = std::min<int>(top, static_cast<int>(
                                 std::min(occ_ref.size(), vir_ref.size())));
    for (int n = 1; n <= top; ++n) {
      for (const auto& o : combinations(occ_ref, n)) {
        for (const auto& v : combinations(vir_ref, n)) {
          if (sz2_of_indices(o) == sz2_of_indices(v))
            pool.candidates.emplace_back(o, v);
        }
      }
    }
  }
  std::sort(pool.candidates.begin(), pool.candidates.end(), excitation_less);
  pool.candidates.erase(
      std::unique(pool.candidates.begin(), pool.candidates.end()),
      pool.candidates.end());
  return pool;
}

double mp_denominator(const Excitation& exc, const std::vector<double>& eps) {
  double d = 0;
  for (int q : exc.occupied()) d += eps.at(q);
  for (int q : exc.virtuals()) d -= eps.at(q);
  return d;
}

StateVector residual_state(const AnsatzState& state, const QubitHamiltonian& h,
                           std::uint64_t reference) {
  StateVector psi = prepare_determinant(h.nq, reference);
  ansatz_apply_inplace(state, psi);
  StateVector w = apply_paulisum(psi, h.paulis);
  ansatz_unapply_inplace(state, w);
  return w;
}

double residual_exact(const AnsatzState& state, const QubitHamiltonian& h,
                      std::uint64_t reference, const Excitation& mu,
                      ExcitationFlavor mu_flavor, double cached_e_ref) {
  const StateVector phi = prepare_determinant(h.nq, reference);
  if (std::isnan(cached_e_ref)) {
    StateVector u_phi = phi;
    ansatz_apply_inplace(state, u_phi);
    if (u_phi.max_imag() > 1e-10)
      throw std::runtime_error("complex-amplitude trial state");
    cached_e_ref = expectation(u_phi, h.paulis);
  }
  const std::uint64_t det = reference ^ mu.mask();
  StateVector u_mu = prepare_determinant(h.nq, det);
  ansatz_apply_inplace(state, u_mu);
  const double e_mu = expectation(u_mu, h.paulis);

  StateVector omega = phi;
  apply_excitation_rotation(omega, mu, mu_flavor, std::numbers::pi / 4);
  ansatz_apply_inplace(state, omega);
  if (omega.max_imag() > 1e-10)
    throw std::runtime_error("complex-amplitude trial state");
  const double e_omega = expectation(omega, h.paulis);
  return e_omega - 0.5 * (e_mu + cached_e_ref);
}

std::vector<double> diis_extrapolate(
    const std::vector<std::vector<double>>& t_history,
    const std::vector<std::vector<double>>& e_history,
    bool* used_fallback) {
  if (used_fallback) *used_fallback = false;
  if (t_history.size() != e_history.size() || t_history.size() < 2)
    throw std::invalid_argument("DIIS needs >= 2 aligned history entries");
  const int m = static_cast<int>(t_history.size());
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m + 1, m + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      double dot = 0;
      for (std::size_t k = 0; k < e_history[i].size(); ++k)
        dot += e_history[i][k] * e_history[j][k];
      b(i, j) = dot;
    }
    b(i, m) = b(m, i) = -1;
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
  rhs(m) = -1;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(b, Eigen::ComputeThinU |
                                               Eigen::ComputeThinV);
  const double cond_floor = svd.singularValues()(0) * 1e-12;
  if (svd.singularValues()(m) <= cond_floor) {
    if (used_fallback) *used_fallback = true;
    return t_history.back();
  }
  const Eigen::VectorXd c = svd.solve(rhs);
  std::vector<double> out(t_history[0].size(), 0.0);
  for (int i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] += c(i) * t_history[i][k];
  }
  return out;
}

PqeResult pqe_solve(AnsatzState& state, const QubitHamiltonian& h,
                    std::uint64_t reference, const std::vector<double>& eps,
                    const PqeOptions& opts, int macro_index,
                    std::vector<TraceRow>* rows) {
  state.validate();
  if (state.ops.empty()) throw std::invalid_argument("empty ansatz");
  PqeResult res;
  const int m = state.size();
  std::vector<double> denom(m);
  for (int k = 0; k < m; ++k) {
    double d = mp_denominator(state.ops[k].exc, eps);
    if (std::abs(d) < opts.denom_floor) {
      d = std::copysign(opts.denom_floor, d == 0 ? -1.0 : d);
      res.denom_floor_hit = true;
    }
    denom[k] = d;
  }
  std::vector<std::vector<double>> t_hist, e_hist;
  for (int it = 0; it < opts.max_micro; ++it) {
    const StateVector y = residual_state(state, h, reference);
    res.energy = y[static_cast<std::int64_t>(reference)].real();
    std::vector<double> r(m), dt(m);
    double norm2 = 0;
    for (int k = 0; k < m; ++k) {
      const std::uint64_t det = reference ^ state.ops[k].exc.mask();
      const double sign = excitation_det_sign(
          state.ops[k].exc, state.ops[k].flavor, reference);
      r[k] = sign * y[static_cast<std::int64_t>(det)].real();
      norm2 += r[k] * r[k];
    }
    res.n_residual_evals += m;
    res.residual_norm = std::sqrt(norm2);
    res.micro_iters = it + 1;
    if (rows) {
      rows->push_back({macro_index, it, res.energy, res.residual_norm, m,
                       ansatz_gate_count(state, state.family).cnot});
    }
    if (res.residual_norm <= opts.eps_r) {
      res.converged = true;
      return res;
    }
    for (int k = 0; k < m; ++k) {
      dt[k] = r[k] / denom[k];
      state.params[k] += dt[k];
    }
    t_hist.push_back(state.params);
    e_hist.push_back(dt);
    if (static_cast<int>(t_hist.size()) > opts.diis_depth) {
      t_hist.erase(t_hist.begin());
      e_hist.erase(e_hist.begin());
    }
    if (t_hist.size() >= 2) {
      bool fell_back = false;
      state.params = diis_extrapolate(t_hist, e_hist, &fell_back);
      res.diis_fallback |= fell_back;
    }
  }
  res.converged = false;
  return res;
}

std::vector<std::pair<Excitation, double>> spqe_residual_screen(
    const AnsatzState& state, const QubitHamiltonian& h,
    std::uint64_t reference, const std::vector<Excitation>& remaining,
    double dt) {
  if (dt <= 0) throw std::invalid_argument("screening time step must be > 0");
  StateVector psi = prepare_determinant(h.nq, reference);
  ansatz_apply_inplace(state, psi);
  StateVector r_tilde = evolve_exact(psi, h.paulis, dt);
  ansatz_unapply_inplace(state, r_tilde);
  std::vector<std::pair<Excitation, double>> out;
  out.reserve(remaining.size());
  for (const auto& exc : remaining) {
    const std::uint64_t det = reference ^ exc.mask();
    const double amp2 = std::norm(r_tilde[static_cast<std::int64_t>(det)]);
    out.emplace_back(exc, amp2 / (dt * dt));
  }
  return out;
}

std::vector<Excitation> select_operators(
    const std::vector<std::pair<Excitation, double>>& importances,
    double omega) {
  if (omega <= 0) throw std::invalid_argument("selection threshold must be > 0");
  std::vector<std::pair<Excitation, double>> sorted = importances;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second < b.second;
              return excitation_less(a.first, b.first);
            });
  const double budget = omega * omega;
  double discarded = 0;
  std::vector<std::pair<Excitation, double>> kept;
  for (const auto& [exc, val] : sorted) {
    if (discarded + val <= budget) {
      discarded += val;
    } else {
      kept.emplace_back(exc, val);
    }
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return excitation_less(a.first, b.first);
  });
  std::vector<Excitation> out;
  out.reserve(kept.size());
  for (auto& [exc, val] : kept) out.push_back(exc);
  return out;
}

namespace {

void fill_gate_counts(SolveReport& rep) {
  for (CircuitFamily f :
       {CircuitFamily::StandardFermionic, CircuitFamily::StandardQubit,
        CircuitFamily::FEB, CircuitFamily::QEB}) {
    rep.gate_counts[to_string(f)] = ansatz_gate_count(rep.ansatz, f);
  }
}

}  // namespace

SolveReport spqe_solve(const QubitHamiltonian& h, std::uint64_t reference,
                       const std::vector<double>& eps, OperatorPool pool,
                       ExcitationFlavor flavor, CircuitFamily family,
                       const SpqeOptions& opts) {
  SolveReport rep;
  rep.solver = "spqe";
  rep.ansatz.family = family;
  StateVector phi = prepare_determinant(h.nq, reference);
  rep.hf_energy = expectation(phi, h.paulis);
  rep.energy = rep.hf_energy;
  auto& remaining = pool.candidates;
  for (int macro = 0; macro < opts.max_macro; ++macro) {
    const auto importances = spqe_residual_screen(rep.ansatz, h, reference,
                                                  remaining, opts.dt);
    rep.n_residual_evals += 1;  // one prepared state per screen
    const auto selected = select_operators(importances, opts.omega);
    if (selected.empty()) {
      rep.converged = true;
      break;
    }
    for (const auto& exc : selected) {
      rep.ansatz.push(exc, flavor, 0.0);
      remaining.erase(std::find(remaining.begin(), remaining.end(), exc));
    }
    const PqeResult pqe = pqe_solve(rep.ansatz, h, reference, eps, opts.pqe,
                                    macro, &rep.rows);
    rep.energy = pqe.energy;
    rep.n_residual_evals += pqe.n_residual_evals;
    rep.macro_trace.push_back({macro, static_cast<int>(selected.size()),
                               rep.ansatz.size(), pqe.energy,
                               pqe.residual_norm, pqe.micro_iters,
                               pqe.converged});
  }
  // exact residuals of everything left in the pool exhibit the error bound
  const StateVector y = residual_state(rep.ansatz, h, reference);
  rep.energy = y[static_cast<std::int64_t>(reference)].real();
  double bound = 0;
  for (const auto& exc : remaining)
    bound += std::abs(y[static_cast<std::int64_t>(reference ^ exc.mask())]);
  rep.sum_unselected_abs_residuals = bound;
  fill_gate_counts(rep);
  return rep;
}

double ansatz_energy(const AnsatzState& state, const QubitHamiltonian& h,
                     std::uint64_t reference) {
  StateVector psi = prepare_determinant(h.nq, reference);
  ansatz_apply_inplace(state, psi);
  return expectation(psi, h.paulis);
}

std::vector<double> ansatz_gradient(const AnsatzState& state,
                                    const QubitHamiltonian& h,
                                    std::uint64_t reference,
                                    double* energy_out) {
  const int m = state.size();
  StateVector phi = prepare_determinant(h.nq, reference);
  ansatz_apply_inplace(state, phi);
  StateVector lam = apply_paulisum(phi, h.paulis);
  const cplx e = phi.inner(lam);
  if (energy_out) *energy_out = e.real();
  std::vector<double> g(m);
  for (int k = m - 1; k >= 0; --k) {
    const auto& op = state.ops[k];
    // here phi = U_k...U_0|ref>, lam = (U_{m-1}...U_{k+1})^dag H U|ref>
    const StateVector kphi =
        apply_excitation_generator(phi, op.exc, op.flavor);
    g[k] = 2.0 * lam.inner(kphi).real();
    apply_excitation_rotation(phi, op.exc, op.flavor, -state.params[k]);
    apply_excitation_rotation(lam, op.exc, op.flavor, -state.params[k]);
  }
  return g;
}

VqeResult vqe_solve(AnsatzState& state, const QubitHamiltonian& h,
                    std::uint64_t reference, const VqeOptions& opts,
                    int macro_index, std::vector<TraceRow>* rows) {
  state.validate();
  if (state.ops.empty()) throw std::invalid_argument("empty ansatz");
  const int m = state.size();
  VqeResult res;
  Eigen::MatrixXd hinv = Eigen::MatrixXd::Identity(m, m);
  double energy = 0;
  std::vector<double> grad = ansatz_gradient(state, h, reference, &energy);
  res.n_gradient_evals += m;
  auto norm_of = [](const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  };
  for (int it = 0; it < opts.max_iter; ++it) {
    res.energy = energy;
    res.grad_norm = norm_of(grad);
    res.iterations = it;
    if (rows) {
      rows->push_back({macro_index, it, energy, res.grad_norm, m,
                       ansatz_gate_count(state, state.family).cnot});
    }
    if (res.grad_norm < opts.g_tol) {
      res.converged = true;
      return res;
    }
    Eigen::VectorXd gvec = Eigen::Map<const Eigen::VectorXd>(grad.data(), m);
    Eigen::VectorXd dir = -(hinv * gvec);
    const double slope = gvec.dot(dir);
    const std::vector<double> t_old = state.params;
    double alpha = 1.0;
    double new_energy = 0;
    bool accepted = false;
    for (int bt = 0; bt < opts.max_backtracks; ++bt) {
      for (int k = 0; k < m; ++k)
        state.params[k] = t_old[k] + alpha * dir(k);
      new_energy = ansatz_energy(state, h, reference);
      if (new_energy <= energy + 1e-4 * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      state.params = t_old;
      res.line_search_failed = true;
      res.converged = false;
      return res;
    }
    std::vector<double> new_grad =
        ansatz_gradient(state, h, reference, &new_energy);
    res.n_gradient_evals += m;
    Eigen::VectorXd s(m), yv(m);
    for (int k = 0; k < m; ++k) {
      s(k) = state.params[k] - t_old[k];
      yv(k) = new_grad[k] - grad[k];
    }
    const double sy = s.dot(yv);
    if (sy > 1e-12) {
      const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(m, m);
      const double rho = 1.0 / sy;
      hinv = (eye - rho * s * yv.transpose()) * hinv *
                 (eye - rho * yv * s.transpose()) +
             rho * s * s.transpose();
    }
    energy = new_energy;
    grad = std::move(new_grad);
  }
  res.energy = energy;
  res.grad_norm = norm_of(grad);
  res.iterations = opts.max_iter;
  res.converged = res.grad_norm < opts.g_tol;
  return res;
}

SolveReport adapt_vqe_solve(const QubitHamiltonian& h, std::uint64_t reference,
                            const OperatorPool& pool, ExcitationFlavor flavor,
                            CircuitFamily family, const AdaptOptions& opts) {
  SolveReport rep;
  rep.solver = "adapt-vqe";
  rep.ansatz.family = family;
  StateVector phi = prepare_determinant(h.nq, reference);
  rep.hf_energy = expectation(phi, h.paulis);
  rep.energy = rep.hf_energy;
  const int pool_size = static_cast<int>(pool.candidates.size());
  for (int macro = 0; macro < opts.max_macro; ++macro) {
    StateVector psi = prepare_determinant(h.nq, reference);
    ansatz_apply_inplace(rep.ansatz, psi);
    const StateVector w = apply_paulisum(psi, h.paulis);
    // selection gradient per candidate: <Psi|[H, K_nu]|Psi> = 2 Re <w|K_nu psi>
    std::vector<double> grads(pool_size);
    parallel_for(pool_size, [&](int i) {
      const StateVector kpsi =
          apply_excitation_generator(psi, pool.candidates[i], flavor);
      grads[i] = 2.0 * w.inner(kpsi).real();
    });
    rep.n_gradient_evals += pool_size;
    int best = 0;
    for (int i = 1; i < pool_size; ++i) {
      if (std::abs(grads[i]) > std::abs(grads[best])) best = i;
    }
    const double gmax = std::abs(grads[best]);
    if (gmax < opts.eps_g) {
      rep.converged = true;
      break;
    }
    rep.ansatz.push(pool.candidates[best], flavor, 0.0);
    const VqeResult vqe =
        vqe_solve(rep.ansatz, h, reference, opts.vqe, macro, &rep.rows);
    rep.energy = vqe.energy;
    rep.n_gradient_evals += vqe.n_gradient_evals;
    rep.macro_trace.push_back({macro, 1, rep.ansatz.size(), vqe.energy, gmax,
                               vqe.iterations, vqe.converged});
  }
  fill_gate_counts(rep);
  return rep;
}

std::string report_to_json(const SolveReport& r) {
  nlohmann::json j;
  j["schema"] = "exciteq/v1";
  j["solver"] = r.solver;
  j["family"] = to_string(r.ansatz.family);
  j["energy"] = r.energy;
  j["hf_energy"] = r.hf_energy;
  if (r.has_fci) {
    j["fci_energy"] = r.fci_energy;
    j["fci_error"] = r.fci_error;
  }
  j["n_params"] = r.ansatz.size();
  j["n_residual_evals"] = r.n_residual_evals;
  j["n_gradient_evals"] = r.n_gradient_evals;
  j["converged"] = r.converged;
  j["sum_unselected_abs_residuals"] = r.sum_unselected_abs_residuals;
  auto& counts = j["gate_counts"] = nlohmann::json::object();
  for (const auto& [fam, gc] : r.gate_counts) {
    counts[fam] = {{"single_qubit", gc.single_qubit},
                   {"cnot", gc.cnot},
                   {"cz", gc.cz}};
  }
  auto& ans = j["ansatz"] = nlohmann::json::array();
  for (int k = 0; k < r.ansatz.size(); ++k) {
    ans.push_back({{"occ", r.ansatz.ops[k].exc.occupied()},
                   {"vir", r.ansatz.ops[k].exc.virtuals()},
                   {"flavor", r.ansatz.ops[k].flavor ==
                                      ExcitationFlavor::Fermionic
                                  ? "fermionic"
                                  : "qubit"},
                   {"param", r.ansatz.params[k]}});
  }
  auto& mt = j["macro_trace"] = nlohmann::json::array();
  for (const auto& rec : r.macro_trace) {
    mt.push_back({{"macro", rec.macro},
                  {"selected", rec.selected},
                  {"n_params", rec.n_params},
                  {"energy", rec.energy},
                  {"norm", rec.norm},
                  {"micro_iters", rec.micro_iters},
                  {"converged", rec.converged}});
  }
  return j.dump(2);
}

std::string trace_to_csv(const std::vector<TraceRow>& rows) {
  std::ostringstream os;
  os << "macro,micro,energy,norm,n_params,cnot_count\n";
  os.precision(15);
  for (const auto& r : rows) {
    os << r.macro << ',' << r.micro << ',' << r.energy << ',' << r.norm << ','
       << r.n_params << ',' << r.cnot << '\n';
  }
  return os.str();
}

}  // namespace exciteq
