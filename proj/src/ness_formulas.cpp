#include "xxness/ness_formulas.hpp"

#include <cmath>
#include <sstream>

#include "xxness/errors.hpp"
#include "xxness/roots.hpp"

namespace xxness {

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Clamp tiny negative round-off under a square root; anything genuinely
// negative is a domain error handled by the caller.
double safe_sqrt(double v, const char* what) {
  if (v < -1e-9) {
    std::ostringstream os;
    os << what << ": negative discriminant " << v;
    throw InvalidParamsError(os.str());
  }
  return std::sqrt(std::max(v, 0.0));
}

void require_coupling(double gamma) {
  if (!(gamma > 0.0))
    throw InvalidParamsError("coupling gamma must be > 0");
}

}  // namespace

const char* to_string(RegionBoundary::Kind kind) {
  switch (kind) {
    case RegionBoundary::Kind::boundary_tongue: return "boundary-tongue";
    case RegionBoundary::Kind::bulk_pocket: return "bulk-pocket";
  }
  return "?";
}

NessExpectations ness_expectations(const DrivingParams& p) {
  require_valid_driving(p);
  const double gl = p.gamma_left, gr = p.gamma_right;
  const double denom = (1.0 + gl * gr) * (gl + gr);
  NessExpectations e;
  e.t = p.mu * gl * gr / denom;
  const double half_mu = p.mu / 2.0;
  e.a1 = p.mu_bar - half_mu * ((gl - gr) + gl * gr * (gl + gr)) / denom;
  e.a = p.mu_bar - half_mu * ((gl - gr) * (1.0 - gl * gr)) / denom;
  e.an = p.mu_bar - half_mu * ((gl - gr) - gl * gr * (gl + gr)) / denom;
  return e;
}

namespace {

TwoQubitState pair_rdm(double z_left, double z_right, double t) {
  PauliExpectations pe;
  pe.z_left = z_left;
  pe.z_right = z_right;
  pe.zz = z_left * z_right - t * t;
  pe.xx = pe.yy = 0.0;
  pe.xy = -t;  // t = -<sigma^x sigma^y>; sign pinned against the oracle
  return rdm_from_expectations(pe);
}

}  // namespace

TwoQubitState boundary_rdm(const DrivingParams& p) {
  const NessExpectations e = ness_expectations(p);
  return pair_rdm(e.a1, e.a, e.t);
}

TwoQubitState right_boundary_rdm(const DrivingParams& p) {
  return swap_sites(boundary_rdm(mirrored(p)));
}

TwoQubitState bulk_rdm(const DrivingParams& p) {
  const NessExpectations e = ness_expectations(p);
  return pair_rdm(e.a, e.a, e.t);
}

double boundary_lambda_min(double a, double a1, double t) {
  const double s = (a + a1) * (a + a1) + 4.0 * t * t;
  return 0.25 * (1.0 + a * a1 - t * t - std::sqrt(s));
}

double boundary_lambda_min(const DrivingParams& p) {
  const NessExpectations e = ness_expectations(p);
  return boundary_lambda_min(e.a, e.a1, e.t);
}

double bulk_lambda_min(double a, double t) {
  return 0.25 * (1.0 + a * a - t * t - 2.0 * std::sqrt(a * a + t * t));
}

double bulk_lambda_min(const DrivingParams& p) {
  const NessExpectations e = ness_expectations(p);
  return bulk_lambda_min(e.a, e.t);
}

double boundary_tongue_cmin(double gamma) {
  require_coupling(gamma);
  const double g2 = gamma * gamma;
  const double g4 = g2 * g2;
  const double num = 3.0 + 8.0 * g2 + 4.0 * g4 -
                     2.0 * gamma * (1.0 + g2) * std::sqrt(8.0 + g2);
  const double den = 1.0 + 2.0 * g2 * (1.0 + g2);
  return num / den;
}

double boundary_tongue_edge(double c, double gamma) {
  require_coupling(gamma);
  const double cmin = boundary_tongue_cmin(gamma);
  if (c < cmin - 1e-9 || c > 1.0 + 1e-12) {
    std::ostringstream os;
    os << "tongue edge defined for c in [" << cmin << ", 1], got " << c;
    throw InvalidParamsError(os.str());
  }
  const double g2 = gamma * gamma;
  const double g4 = g2 * g2;
  const double g6 = g4 * g2;
  const double w = gamma * (1.0 + g2) * std::sqrt(8.0 + g2);
  const double v =
      (1.0 + g2) * ((9.0 + 5.0 * c * c) * g4 + (1.0 + c * c) * g6 -
                    4.0 * (-1.0 + c * w) - 2.0 * g2 * (-6.0 - 2.0 * c * c + c * w));
  return 1.0 - (1.0 + w - c * (1.0 + 3.0 * g2 + g4) -
                safe_sqrt(v, "boundary_tongue_edge"));
}

double gamma_min_boundary() {
  const double r = 3.0 * std::sqrt(78.0);
  const double s = -3.0 + std::cbrt(27.0 - r) + std::cbrt(27.0 + r);
  return std::sqrt(s / 6.0);
}

double boundary_tongue_widest_gamma() {
  return brent_minimize([](double g) { return boundary_tongue_cmin(g); }, 0.6,
                        3.0, 1e-9)
      .first;
}

double bulk_pocket_edge(double c, double gamma) {
  require_coupling(gamma);
  const double cmin = bulk_pocket_cmin(gamma);
  if (c < cmin - 1e-9 || c > 1.0 + 1e-12) {
    std::ostringstream os;
    os << "pocket edge defined for c in [" << cmin << ", 1], got " << c;
    throw InvalidParamsError(os.str());
  }
  const double g2 = gamma * gamma;
  const double g4 = g2 * g2;
  const double disc =
      1.0 + gamma * (3.0 * gamma + c * c * gamma + gamma * g2 -
                     std::sqrt(8.0) * c * (1.0 + g2));
  const double num = c * (1.0 + 3.0 * g2 + g4) +
                     2.0 * (1.0 + g2) *
                         (-gamma * kSqrt2 + safe_sqrt(disc, "bulk_pocket_edge"));
  return num / (1.0 + g2 + g4);
}

double bulk_pocket_cmin(double gamma) {
  require_coupling(gamma);
  const double g2 = gamma * gamma;
  const double g4 = g2 * g2;
  return 3.0 - 4.0 * gamma * (kSqrt2 + gamma * (-1.0 + gamma * kSqrt2)) /
                   (1.0 + g2 + g4);
}

std::pair<double, double> bulk_coupling_window() {
  const double s = 1.0 + kSqrt2;
  const double root = std::sqrt(s * s - 4.0);  // = sqrt(2 sqrt(2) - 1)
  return {0.5 * (s - root), 0.5 * (s + root)};
}

double dephasing_gamma_c(double gamma, int n) {
  require_coupling(gamma);
  if (n < 3) throw InvalidParamsError("dephasing_gamma_c requires n >= 3");
  return (kSqrt2 + 1.0 - gamma - 1.0 / gamma) / (n - 2);
}

std::optional<std::pair<double, double>> dephasing_coupling_window(
    double gamma_deph, int n) {
  if (gamma_deph < 0.0)
    throw InvalidParamsError("dephasing gamma must be >= 0");
  if (n < 3)
    throw InvalidParamsError("dephasing_coupling_window requires n >= 3");
  const double s = 1.0 + kSqrt2 - gamma_deph * (n - 2);
  const double disc = s * s - 4.0;
  if (s <= 0.0 || disc < 0.0) return std::nullopt;
  const double root = std::sqrt(disc);
  return std::make_pair(0.5 * (s - root), 0.5 * (s + root));
}

double non_nn_entanglement_margin(const DrivingParams& p) {
  const NessExpectations e = ness_expectations(p);
  return 2.0 * std::abs(e.t) + p.mu_bar * p.mu_bar - 1.0;
}

namespace {

RegionBoundary sample_curve(RegionBoundary::Kind kind, double gamma,
                            int n_points) {
  RegionBoundary rb;
  rb.kind = kind;
  rb.gamma = gamma;
  rb.c_min = (kind == RegionBoundary::Kind::boundary_tongue)
                 ? boundary_tongue_cmin(gamma)
                 : bulk_pocket_cmin(gamma);
  if (rb.c_min > 1.0 || n_points < 2) return rb;
  rb.curve.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double c =
        rb.c_min + (1.0 - rb.c_min) * static_cast<double>(i) / (n_points - 1);
    const double d = (kind == RegionBoundary::Kind::boundary_tongue)
                         ? boundary_tongue_edge(c, gamma)
                         : bulk_pocket_edge(c, gamma);
    rb.curve.emplace_back(c, d);
  }
  return rb;
}

}  // namespace

RegionBoundary tongue_curve(double gamma, int n_points) {
  return sample_curve(RegionBoundary::Kind::boundary_tongue, gamma, n_points);
}

RegionBoundary pocket_curve(double gamma, int n_points) {
  return sample_curve(RegionBoundary::Kind::bulk_pocket, gamma, n_points);
}

}  // namespace xxness
