#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xxness/params.hpp"
#include "xxness/two_qubit.hpp"

namespace xxness {

// Dephasing-free steady-state observables that determine every two-spin
// reduced density matrix: spin current t = -<sigma^x_j sigma^y_{j+1}>, edge
// magnetizations a1 = <sigma^z_1>, an = <sigma^z_n>, and the flat bulk value
// a = <sigma^z_{2..n-1}>. Independent of chain length.
struct NessExpectations {
  double t = 0.0;
  double a1 = 0.0;
  double a = 0.0;
  double an = 0.0;

  // <sigma^z_j sigma^z_k> = a_j a_k - t^2 [k == j+1].
  static double zz(double aj, double ak, bool nearest_neighbor, double t) {
    return aj * ak - (nearest_neighbor ? t * t : 0.0);
  }
};

// Analytic phase-boundary curve in the (c, d) square at fixed symmetric
// coupling.
struct RegionBoundary {
  enum class Kind { boundary_tongue, bulk_pocket };
  Kind kind = Kind::boundary_tongue;
  double gamma = 1.0;  // coupling (gamma_left = gamma_right)
  std::vector<std::pair<double, double>> curve;  // (c, d) points, lambda = 0
  double c_min = 1.0;
};

const char* to_string(RegionBoundary::Kind kind);

NessExpectations ness_expectations(const DrivingParams& p);

// Reduced density matrix of the left edge pair (1, 2).
TwoQubitState boundary_rdm(const DrivingParams& p);

// Reduced density matrix of the right edge pair (n-1, n): the left formula
// under the mirror map (couplings swapped, mu negated), factors re-swapped
// into chain order.
TwoQubitState right_boundary_rdm(const DrivingParams& p);

// Reduced density matrix of a bulk nearest-neighbor pair (both spins in
// 2..n-1).
TwoQubitState bulk_rdm(const DrivingParams& p);

// lambda_min of the partially transposed edge-pair matrix,
// 1/4 (1 + a a1 - t^2 - sqrt((a + a1)^2 + 4 t^2)).
double boundary_lambda_min(const DrivingParams& p);
double boundary_lambda_min(double a, double a1, double t);

// lambda_min of the partially transposed bulk-pair matrix,
// 1/4 (1 + a^2 - t^2 - 2 sqrt(a^2 + t^2)).
double bulk_lambda_min(const DrivingParams& p);
double bulk_lambda_min(double a, double t);

// --- Region boundaries, symmetric coupling gamma_c == gamma ---

// Smallest c of the edge-pair entanglement tongue at coupling gamma; values
// above 1 mean the tongue is empty.
double boundary_tongue_cmin(double gamma);

// Lower edge d(c, gamma) of the right tongue, c in [c_min, 1].
double boundary_tongue_edge(double c, double gamma);

// Coupling below which the edge tongue vanishes (c_min reaches 1); ~0.5106.
double gamma_min_boundary();

// Coupling at which the edge tongue is widest (argmin of c_min); ~1.08873.
double boundary_tongue_widest_gamma();

// Lower edge d(c, gamma) of the right bulk pocket, c in [c_min, 1].
double bulk_pocket_edge(double c, double gamma);

// Smallest c of the bulk pocket; minimal at gamma = 1, above 1 outside the
// coupling window.
double bulk_pocket_cmin(double gamma);

// Couplings between which a bulk pocket exists:
// gamma_+- = (1 + sqrt(2) +- sqrt(2 sqrt(2) - 1)) / 2, product exactly 1.
std::pair<double, double> bulk_coupling_window();

// Critical dephasing above which central-pair entanglement vanishes,
// (sqrt(2) + 1 - gamma - 1/gamma) / (n - 2); negative means no entangled
// region at any dephasing.
double dephasing_gamma_c(double gamma, int n);

// Coupling window at dephasing rate gamma_deph and size n; std::nullopt when
// the discriminant is negative (no entangled region).
std::optional<std::pair<double, double>> dephasing_coupling_window(
    double gamma_deph, int n);

// 2|t| + mu_bar^2 - 1: entanglement of non-nearest-neighbor pairs would
// require a positive value, which no admissible driving attains.
double non_nn_entanglement_margin(const DrivingParams& p);

// Sampled analytic curves for the CLI and figure output.
RegionBoundary tongue_curve(double gamma, int n_points = 201);
RegionBoundary pocket_curve(double gamma, int n_points = 201);

}  // namespace xxness
