#include "xxness/thermal.hpp"

#include <cmath>
#include <numbers>

#include "xxness/quadrature.hpp"
#include "xxness/roots.hpp"

namespace xxness {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kQuadTol = 1e-11;
}  // namespace

double gc_magnetization(const GrandCanonicalParams& g) {
  const double beta = g.beta, phi = g.phi;
  const double val = integrate(
      [beta, phi](double k) { return std::tanh(phi - 2.0 * beta * std::cos(k)); },
      0.0, kPi, kQuadTol);
  return val / kPi;
}

double gc_xx(const GrandCanonicalParams& g) {
  const double beta = g.beta, phi = g.phi;
  const double val = integrate(
      [beta, phi](double k) {
        return std::cos(k) * std::tanh(phi - 2.0 * beta * std::cos(k));
      },
      0.0, kPi, kQuadTol);
  return val / kPi;
}

ThermalExpectations gc_expectations(const GrandCanonicalParams& g) {
  return ThermalExpectations::from_z_xx(gc_magnetization(g), gc_xx(g));
}

TwoQubitState gc_two_spin_rdm(const GrandCanonicalParams& g) {
  const ThermalExpectations e = gc_expectations(g);
  PauliExpectations pe;
  pe.z_left = pe.z_right = e.z;
  pe.xx = pe.yy = e.xx;
  pe.zz = e.zz;
  pe.xy = 0.0;
  return rdm_from_expectations(pe);
}

double thermal_lambda_min(const ThermalExpectations& e) {
  const double w = e.xx * e.xx + e.z * e.z;
  return 0.25 * (1.0 - e.xx * e.xx + e.z * e.z - 2.0 * std::sqrt(w));
}

double gc_lambda_min(const GrandCanonicalParams& g) {
  return thermal_lambda_min(gc_expectations(g));
}

double critical_beta(double phi) {
  auto f = [phi](double beta) {
    const ThermalExpectations e = gc_expectations({beta, phi});
    const double s = e.xx + std::sqrt(2.0);
    return s * s - 1.0 - e.z * e.z;
  };
  return brent_root(f, 1e-6, 10.0, 1e-8);
}

}  // namespace xxness
