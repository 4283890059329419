#pragma once

#include "xxness/params.hpp"
#include "xxness/pauli.hpp"

namespace xxness {

// Default classification threshold: entangled iff lambda_min(PT) < -eps.
// Nonzero so grid classification near phase boundaries does not flicker with
// solver noise; boundaries themselves are located by bisecting lambda = 0.
inline constexpr double kEntanglementEps = 1e-12;

// Pauli expectation values of a two-spin state. xy is <sigma^x (x) sigma^y>;
// states handled here have <sigma^y (x) sigma^x> = -xy (z-rotation
// invariance), which places the current term on the inner off-diagonal.
struct PauliExpectations {
  double z_left = 0.0;
  double z_right = 0.0;
  double xx = 0.0;
  double yy = 0.0;
  double zz = 0.0;
  double xy = 0.0;
};

// Two-spin reduced density matrix in the |uu>, |ud>, |du>, |dd> basis.
class TwoQubitState {
 public:
  TwoQubitState() : m_(Matrix4c::Identity() / 4.0) {}
  explicit TwoQubitState(const Matrix4c& m) : m_(m) {}

  const Matrix4c& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  // Hermiticity and trace to 1e-12, eigenvalues >= -1e-10.
  ValidationReport validate() const;

 private:
  Matrix4c m_;
};

enum class Side { left, right };

// rho = 1/4 [ 1 + z_l z(x)1 + z_r 1(x)z + xx x(x)x + yy y(x)y + zz z(x)z
//             + xy (x(x)y - y(x)x) ].
// Hermitian and unit trace by construction; PSD only for physical inputs.
TwoQubitState rdm_from_expectations(const PauliExpectations& e);

// Transposition of one tensor factor (default: the right spin).
Matrix4c partial_transpose(const Matrix4c& rho, Side side = Side::right);
inline Matrix4c partial_transpose(const TwoQubitState& rho,
                                  Side side = Side::right) {
  return partial_transpose(rho.matrix(), side);
}

// Smallest eigenvalue of a Hermitian 4x4 matrix. X-shaped matrices use the
// closed form of the two 2x2 blocks; anything else goes through the dense
// symmetric eigensolver. Throws InvalidParamsError on non-Hermitian input.
double min_eigenvalue(const Matrix4c& m);

// Sum of |negative eigenvalues| of the partial transpose; 0 iff separable.
double negativity(const TwoQubitState& rho);

bool is_entangled(const TwoQubitState& rho, double eps = kEntanglementEps);

// Exchange of the two tensor factors.
TwoQubitState swap_sites(const TwoQubitState& rho);

}  // namespace xxness
