#pragma once

#include <Eigen/SparseCore>

#include "xxness/params.hpp"
#include "xxness/pauli.hpp"
#include "xxness/two_qubit.hpp"

namespace xxness {

struct LiouvilleModel {
  ChainSpec chain;
  DrivingParams driving;
  DephasingSpec dephasing;
};

// Superoperator of d rho/dt = i[rho, H] + sum_k ([L_k rho, L_k^+] +
// [L_k, rho L_k^+]) acting on column-stacked rho. The bracket form carries a
// factor 2 relative to the conventional dissipator; it is kept exactly as the
// closed-form results require, which the equilibrium product-state test pins.
struct Liouvillian {
  LiouvilleModel model;
  Eigen::Index dim = 0;  // 4^n
  SparseMatrixXc matrix;
};

struct BuildOptions {
  int n_max = 7;
  // Permit models whose steady state is known to be non-unique (both bath
  // couplings zero); used to exercise the degeneracy diagnostics.
  bool allow_degenerate_model = false;
};

enum class SolveMethod {
  automatic,      // sector-restricted sparse LU
  sector_sparse,  // restrict to the magnetization-difference-zero block
  full_sparse,    // sparse LU on the full superoperator
  full_dense,     // dense LU on the full superoperator (small n cross-check)
};

struct SolveOptions {
  SolveMethod method = SolveMethod::automatic;
  double residual_tol = 1e-10;
  double psd_tol = 1e-10;
  // Estimate the steady-state degeneracy (two smallest singular values on the
  // dense path, shift-inverted subspace iteration on the sparse path) and
  // throw DegenerateSteadyStateError when it exceeds one.
  bool diagnose_nullity = false;
};

struct SteadyStateSolution {
  MatrixXc rho;  // 2^n x 2^n, Hermitian, unit trace
  double residual = 0.0;  // ||L vec(rho)||_2 over the full space
  int nullity = 1;
  bool nullity_diagnosed = false;
  double hermiticity_adjustment = 0.0;  // magnitude folded in by (rho+rho^+)/2
  double rho_min_eigenvalue = 0.0;
};

// XX chain Hamiltonian, sum of sigma^x sigma^x + sigma^y sigma^y bonds.
SparseMatrixXc xx_hamiltonian(int n);

// Bath and dephasing Lindblad operators for the model, in the order
// left(+,-), right(+,-), dephasing site 1..n.
std::vector<SparseMatrixXc> lindblad_operators(const LiouvilleModel& m);

Liouvillian build_liouvillian(const ChainSpec& chain, const DrivingParams& p,
                              const DephasingSpec& deph,
                              const BuildOptions& opts = {});

// || vec(1)^T L ||_inf; zero for a trace-preserving generator.
double trace_preservation_defect(const Liouvillian& L);

SteadyStateSolution steady_state(const Liouvillian& L,
                                 const SolveOptions& opts = {});

// Reduced density matrix of sites (j, k), 1 <= j < k <= n.
TwoQubitState partial_trace_pair(const SteadyStateSolution& s, int j, int k,
                                 int n);

// Real part of tr(rho * obs); Hermitian observables have vanishing imaginary
// part (checked by the caller via expectation_complex when needed).
double expectation(const SteadyStateSolution& s, const PauliString& obs, int n);
Complex expectation_complex(const SteadyStateSolution& s,
                            const PauliString& obs, int n);

// Convenience observables.
double site_z(const SteadyStateSolution& s, int j, int n);
double bond_current_t(const SteadyStateSolution& s, int j, int n);  // -<x_j y_{j+1}>
double bond_energy(const SteadyStateSolution& s, int j, int n);  // <xx + yy>

// Central nearest-neighbor pair (j, j+1) with j = (n+1)/2.
inline int central_pair_left_site(int n) { return (n + 1) / 2; }

// One-call oracle: build, solve, return the solution.
SteadyStateSolution solve_ness(const LiouvilleModel& m,
                               const BuildOptions& build_opts = {},
                               const SolveOptions& solve_opts = {});

}  // namespace xxness
