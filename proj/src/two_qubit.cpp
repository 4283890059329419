#include "xxness/two_qubit.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "xxness/errors.hpp"

namespace xxness {

namespace {

constexpr double kHermTol = 1e-12;

double hermiticity_defect(const Matrix4c& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// Smaller eigenvalue of the Hermitian block [[a, b], [conj(b), d]].
double block_min_eig(double a, double d, Complex b) {
  const double half_tr = 0.5 * (a + d);
  const double half_diff = 0.5 * (a - d);
  return half_tr - std::sqrt(half_diff * half_diff + std::norm(b));
}

}  // namespace

ValidationReport TwoQubitState::validate() const {
  ValidationReport rep;
  const double herm = hermiticity_defect(m_);
  if (herm > kHermTol) {
    std::ostringstream os;
    os << "not Hermitian (defect " << herm << ")";
    rep.violations.push_back(os.str());
  }
  const double tr_err = std::abs(m_.trace() - Complex(1.0, 0.0));
  if (tr_err > 1e-12) {
    std::ostringstream os;
    os << "trace differs from 1 by " << tr_err;
    rep.violations.push_back(os.str());
  }
  if (herm <= 1e-9) {
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(m_, Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues().minCoeff();
    if (lmin < -1e-10) {
      std::ostringstream os;
      os << "not positive semidefinite (lambda_min " << lmin << ")";
      rep.violations.push_back(os.str());
    }
  }
  return rep;
}

TwoQubitState rdm_from_expectations(const PauliExpectations& e) {
  const double zl = e.z_left, zr = e.z_right;
  Matrix4c m = Matrix4c::Zero();
  // Diagonal: 1/4 (1 + zl s1 + zr s2 + zz s1 s2), s = +-1.
  m(0, 0) = 0.25 * (1 + zl + zr + e.zz);
  m(1, 1) = 0.25 * (1 + zl - zr - e.zz);
  m(2, 2) = 0.25 * (1 - zl + zr - e.zz);
  m(3, 3) = 0.25 * (1 - zl - zr + e.zz);
  // Inner coherence <ud|rho|du> = 1/4 (xx + yy) + i/2 xy.
  const Complex inner(0.25 * (e.xx + e.yy), 0.5 * e.xy);
  m(1, 2) = inner;
  m(2, 1) = std::conj(inner);
  // Outer coherence <uu|rho|dd> = 1/4 (xx - yy).
  const Complex outer(0.25 * (e.xx - e.yy), 0.0);
  m(0, 3) = outer;
  m(3, 0) = std::conj(outer);
  return TwoQubitState(m);
}

Matrix4c partial_transpose(const Matrix4c& rho, Side side) {
  Matrix4c out;
  for (int r1 = 0; r1 < 2; ++r1)
    for (int r2 = 0; r2 < 2; ++r2)
      for (int c1 = 0; c1 < 2; ++c1)
        for (int c2 = 0; c2 < 2; ++c2) {
          const int row = 2 * r1 + r2, col = 2 * c1 + c2;
          if (side == Side::right)
            out(row, col) = rho(2 * r1 + c2, 2 * c1 + r2);
          else
            out(row, col) = rho(2 * c1 + r2, 2 * r1 + c2);
        }
  return out;
}

double min_eigenvalue(const Matrix4c& m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (hermiticity_defect(m) > 1e-10 * scale)
    throw InvalidParamsError("min_eigenvalue: matrix is not Hermitian");

  // X shape: nonzeros confined to the diagonal and the anti-diagonal.
  const double off = std::max({std::abs(m(0, 1)), std::abs(m(0, 2)),
                               std::abs(m(1, 0)), std::abs(m(2, 0)),
                               std::abs(m(1, 3)), std::abs(m(2, 3)),
                               std::abs(m(3, 1)), std::abs(m(3, 2))});
  if (off <= 1e-14 * scale) {
    const double outer =
        block_min_eig(m(0, 0).real(), m(3, 3).real(), m(0, 3));
    const double inner =
        block_min_eig(m(1, 1).real(), m(2, 2).real(), m(1, 2));
    return std::min(outer, inner);
  }

  Eigen::SelfAdjointEigenSolver<Matrix4c> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double negativity(const TwoQubitState& rho) {
  const Matrix4c pt = partial_transpose(rho);
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(pt, Eigen::EigenvaluesOnly);
  double sum = 0.0;
  for (int i = 0; i < 4; ++i)
    if (es.eigenvalues()[i] < 0.0) sum -= es.eigenvalues()[i];
  return sum;
}

bool is_entangled(const TwoQubitState& rho, double eps) {
  return min_eigenvalue(partial_transpose(rho)) < -eps;
}

TwoQubitState swap_sites(const TwoQubitState& rho) {
  Matrix4c out;
  for (int r1 = 0; r1 < 2; ++r1)
    for (int r2 = 0; r2 < 2; ++r2)
      for (int c1 = 0; c1 < 2; ++c1)
        for (int c2 = 0; c2 < 2; ++c2)
          out(2 * r2 + r1, 2 * c2 + c1) = rho(2 * r1 + r2, 2 * c1 + c2);
  return TwoQubitState(out);
}

}  // namespace xxness
