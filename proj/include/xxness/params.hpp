#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace xxness {

// Open chain of n spin-1/2 sites, XX coupling with unit strength.
struct ChainSpec {
  int n = 2;
};

// Bath couplings and driving strengths. Admissible when gamma_left,
// gamma_right >= 0 (not both zero) and (mu, mu_bar) lies inside the closed
// rhombus 1 +- mu/2 +- mu_bar >= 0, corners (0,+-1) and (+-2,0).
struct DrivingParams {
  double gamma_left = 1.0;
  double gamma_right = 1.0;
  double mu = 0.0;
  double mu_bar = 0.0;

  bool symmetric() const { return gamma_left == gamma_right; }
};

// Square reparametrization of the driving: c = mu/2 - mu_bar, d = mu/2 + mu_bar,
// both in [-1, 1].
struct SquareCoords {
  double c = 0.0;
  double d = 0.0;
};

// Uniform local dephasing rate.
struct DephasingSpec {
  double gamma = 0.0;
};

// Grand-canonical weight parameters (inverse temperature, chemical potential).
struct GrandCanonicalParams {
  double beta = 0.0;
  double phi = 0.0;
};

// Report-style validation: collects every violation instead of failing fast,
// so grid scans can annotate nodes.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  std::string joined(const char* sep = "; ") const;
};

inline double rhombus_margin(double mu, double mu_bar) {
  // min over the four sign combinations of 1 +- mu/2 +- mu_bar
  double m = 1.0 - std::abs(mu) / 2.0 - std::abs(mu_bar);
  return m;
}

inline bool inside_rhombus(double mu, double mu_bar, double tol = 0.0) {
  return rhombus_margin(mu, mu_bar) >= -tol;
}

// (mu, mu_bar) -> (c, d). Throws InvalidParamsError outside the rhombus.
SquareCoords to_square(const DrivingParams& p);

// (c, d) -> driving with the given couplings. Throws InvalidParamsError if
// |c| > 1 or |d| > 1. The image is exactly the rhombus.
DrivingParams from_square(const SquareCoords& s, double gamma_left = 1.0,
                          double gamma_right = 1.0);

// Left-right mirror of the chain (site j -> n+1-j): swaps the bath couplings
// and flips the sign of mu.
DrivingParams mirrored(const DrivingParams& p);

ValidationReport validate_driving(const DrivingParams& p);

ValidationReport validate(const DrivingParams& p, const DephasingSpec& d,
                          const ChainSpec& c);

// Throw InvalidParamsError with the joined report if validation fails.
void require_valid_driving(const DrivingParams& p);
void require_valid(const DrivingParams& p, const DephasingSpec& d,
                   const ChainSpec& c);

}  // namespace xxness
