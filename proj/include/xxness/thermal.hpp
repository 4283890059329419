#pragma once

#include "xxness/params.hpp"
#include "xxness/two_qubit.hpp"

namespace xxness {

// Infinite-chain grand-canonical expectations. The implemented weight is
// exp(-beta H + phi M)/Z, which is the convention under which the integrals
// below hold literally (at beta = 0, <z> = tanh(phi)); pinned by the
// finite-ring diagonalization oracle in the test suite.
struct ThermalExpectations {
  double z = 0.0;
  double xx = 0.0;
  double zz = 0.0;  // always z^2 - xx^2 (infinite-chain relation)

  static ThermalExpectations from_z_xx(double z, double xx) {
    return {z, xx, z * z - xx * xx};
  }
};

// <sigma^z> = (1/pi) Int_0^pi tanh(phi - 2 beta cos k) dk, abs err <= 1e-10.
double gc_magnetization(const GrandCanonicalParams& g);

// <sigma^x sigma^x> = (1/pi) Int_0^pi cos(k) tanh(phi - 2 beta cos k) dk.
double gc_xx(const GrandCanonicalParams& g);

ThermalExpectations gc_expectations(const GrandCanonicalParams& g);

// Nearest-neighbor reduced density matrix of the grand-canonical chain.
TwoQubitState gc_two_spin_rdm(const GrandCanonicalParams& g);

// lambda_min of the partially transposed thermal RDM, closed form:
// 1/4 (1 - xx^2 + z^2 - 2 sqrt(xx^2 + z^2)).
double thermal_lambda_min(const ThermalExpectations& e);
double gc_lambda_min(const GrandCanonicalParams& g);

// Inverse temperature at which the thermal RDM stops being entangled, i.e.
// the root of (xx + sqrt(2))^2 - 1 - z^2 in beta. Bracket [1e-6, 10],
// tolerance 1e-8; throws NoRootError if the bracket has no sign change.
double critical_beta(double phi);

}  // namespace xxness
