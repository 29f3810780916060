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
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "exciteq/chem.hpp"
#include "exciteq/fermion.hpp"
#include "exciteq/sim.hpp"
#include "exciteq/synth.hpp"

namespace exciteq {

struct AnsatzOp {
  Excitation exc;
  ExcitationFlavor flavor;
};

/// Ordered ansatz: ops[0] is applied to the reference first. The circuit
/// family is the accounting/synthesis flavor for the same unitaries.
struct AnsatzState {
  std::vector<AnsatzOp> ops;
  std::vector<double> params;
  CircuitFamily family = CircuitFamily::FEB;

  int size() const { return static_cast<int>(ops.size()); }
  void push(const Excitation& exc, ExcitationFlavor flavor, double param);
  void validate() const;
};

enum class ApplyMode { Circuits, Exact };

/// U(t)|psi0>: sequential application of the synthesized circuit (or the
/// exact matched-pair rotation) for each (op, parameter).
StateVector ansatz_apply(const AnsatzState& state, const StateVector& psi0,
                         ApplyMode mode = ApplyMode::Circuits);

/// U(t)^dag |psi| via reversed order and negated parameters (Exact mode).
void ansatz_unapply_inplace(const AnsatzState& state, StateVector& psi);
void ansatz_apply_inplace(const AnsatzState& state, StateVector& psi);

/// Sum of per-operator closed-form counts for the given family.
GateCount ansatz_gate_count(const AnsatzState& state, CircuitFamily family);

enum class PoolKind { ParticleHoleFull, ParticleHoleSD, GeneralizedSD };

PoolKind pool_kind_from_string(const std::string& s);
std::string to_string(PoolKind k);

struct OperatorPool {
  PoolKind kind;
  std::vector<Excitation> candidates;  // canonically ordered
};

/// All Sz-conserving excitations of the requested kind. For particle-hole
/// pools, max_rank 0 means "up to the electron count of the reference".
OperatorPool build_pool(PoolKind kind, std::uint64_t reference, int nq,
                        int max_rank = 0);

/// Moller-Plesset denominator sum(eps_occ) - sum(eps_vir).
double mp_denominator(const Excitation& exc, const std::vector<double>& eps);

/// Exact residual element by the three-expectation route:
/// r = <Omega(pi/4)|Hbar|Omega(pi/4)> - (E_mu + E_ref)/2, with
/// Hbar = U^dag H U. Pass the cached E_ref = <Phi|Hbar|Phi> when available
/// (NaN recomputes it). Throws if the trial state is not real.
double residual_exact(const AnsatzState& state, const QubitHamiltonian& h,
                      std::uint64_t reference, const Excitation& mu,
                      ExcitationFlavor mu_flavor,
                      double cached_e_ref = std::numeric_limits<double>::quiet_NaN());

/// y = U^dag H U |Phi>; residuals are signed amplitudes of y.
StateVector residual_state(const AnsatzState& state, const QubitHamiltonian& h,
                           std::uint64_t reference);

/// Pulay extrapolation: minimize |sum c_i e_i| subject to sum c_i = 1 and
/// return sum c_i t_i. Falls back to the latest entry when the bordered
/// system is singular (condition threshold 1e-12); *used_fallback reports it.
std::vector<double> diis_extrapolate(
    const std::vector<std::vector<double>>& t_history,
    const std::vector<std::vector<double>>& e_history,
    bool* used_fallback = nullptr);

struct TraceRow {
  int macro = 0;
  int micro = 0;
  double energy = 0;
  double norm = 0;  // residual or gradient norm
  int n_params = 0;
  std::int64_t cnot = 0;
};

struct MacroRecord {
  int macro = 0;
  int selected = 0;
  int n_params = 0;
  double energy = 0;
  double norm = 0;
  int micro_iters = 0;
  bool converged = true;
};

struct SolveReport {
  std::string solver;
  AnsatzState ansatz;
  double energy = 0;
  double hf_energy = 0;
  bool has_fci = false;
  double fci_energy = 0;
  double fci_error = 0;
  std::int64_t n_residual_evals = 0;
  std::int64_t n_gradient_evals = 0;
  std::map<std::string, GateCount> gate_counts;
  double sum_unselected_abs_residuals = 0;
  bool converged = true;
  std::vector<MacroRecord> macro_trace;
  std::vector<TraceRow> rows;
};

std::string report_to_json(const SolveReport& r);
std::string trace_to_csv(const std::vector<TraceRow>& rows);

struct PqeOptions {
  double eps_r = 1e-5;
  int max_micro = 50;
  int diis_depth = 8;
  double denom_floor = 1e-6;
};

struct PqeResult {
  double energy = 0;
  double residual_norm = 0;
  int micro_iters = 0;
  bool converged = false;
  std::int64_t n_residual_evals = 0;
  bool diis_fallback = false;
  bool denom_floor_hit = false;
};

/// Fixed-ansatz PQE micro-iterations with DIIS; updates state.params.
PqeResult pqe_solve(AnsatzState& state, const QubitHamiltonian& h,
                    std::uint64_t reference, const std::vector<double>& eps,
                    const PqeOptions& opts = {}, int macro_index = 0,
                    std::vector<TraceRow>* rows = nullptr);

struct SpqeOptions {
  double omega = 1e-2;
  double dt = 1e-3;
  int max_macro = 50;
  PqeOptions pqe;
};

/// Time-evolution residual screening: importances
/// |<det_nu | U^dag e^{i dt H} U |Phi>|^2 / dt^2 for the remaining pool,
/// returned in the pool's canonical order.
std::vector<std::pair<Excitation, double>> spqe_residual_screen(
    const AnsatzState& state, const QubitHamiltonian& h,
    std::uint64_t reference, const std::vector<Excitation>& remaining,
    double dt);

/// Cumulative selection: ascending by importance, discard while the running
/// discarded sum stays <= Omega^2, return survivors in descending order.
std::vector<Excitation> select_operators(
    const std::vector<std::pair<Excitation, double>>& importances,
    double omega);

SolveReport spqe_solve(const QubitHamiltonian& h, std::uint64_t reference,
                       const std::vector<double>& eps, OperatorPool pool,
                       ExcitationFlavor flavor, CircuitFamily family,
                       const SpqeOptions& opts = {});

struct VqeOptions {
  double g_tol = 1e-5;
  int max_iter = 50;
  int max_backtracks = 40;
};

struct VqeResult {
  double energy = 0;
  double grad_norm = 0;
  int iterations = 0;
  bool converged = false;
  bool line_search_failed = false;
  std::int64_t n_gradient_evals = 0;
};

/// <Phi|U^dag H U|Phi> and its analytic parameter gradient via one forward
/// and one reverse statevector sweep.
double ansatz_energy(const AnsatzState& state, const QubitHamiltonian& h,
                     std::uint64_t reference);
std::vector<double> ansatz_gradient(const AnsatzState& state,
                                    const QubitHamiltonian& h,
                                    std::uint64_t reference,
                                    double* energy_out = nullptr);

/// BFGS with Armijo backtracking; updates state.params.
VqeResult vqe_solve(AnsatzState& state, const QubitHamiltonian& h,
                    std::uint64_t reference, const VqeOptions& opts = {},
                    int macro_index = 0, std::vector<TraceRow>* rows = nullptr);

struct AdaptOptions {
  double eps_g = 1e-3;
  int max_macro = 200;
  VqeOptions vqe;
};

SolveReport adapt_vqe_solve(const QubitHamiltonian& h, std::uint64_t reference,
                            const OperatorPool& pool, ExcitationFlavor flavor,
                            CircuitFamily family,
                            const AdaptOptions& opts = {});

}  // namespace exciteq
