#include "xxness/pauli.hpp"

#include <stdexcept>

namespace xxness {

namespace pauli {

Matrix2c identity() { return Matrix2c::Identity(); }

Matrix2c x() {
  Matrix2c m;
  m << 0, 1, 1, 0;
  return m;
}

Matrix2c y() {
  Matrix2c m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Matrix2c z() {
  Matrix2c m;
  m << 1, 0, 0, -1;
  return m;
}

Matrix2c plus() {
  Matrix2c m = Matrix2c::Zero();
  m(0, 1) = 1.0;
  return m;
}

Matrix2c minus() {
  Matrix2c m = Matrix2c::Zero();
  m(1, 0) = 1.0;
  return m;
}

Matrix2c from_axis(char axis) {
  switch (axis) {
    case 'I': return identity();
    case 'x': return x();
    case 'y': return y();
    case 'z': return z();
    case '+': return plus();
    case '-': return minus();
  }
  throw std::invalid_argument(std::string("unknown Pauli axis '") + axis + "'");
}

}  // namespace pauli

MatrixXc kron(const MatrixXc& a, const MatrixXc& b) {
  MatrixXc out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

SparseMatrixXc kron_sparse(const SparseMatrixXc& a, const SparseMatrixXc& b) {
  SparseMatrixXc out(a.rows() * b.rows(), a.cols() * b.cols());
  std::vector<Eigen::Triplet<Complex>> trips;
  trips.reserve(static_cast<std::size_t>(a.nonZeros()) * b.nonZeros());
  for (int ka = 0; ka < a.outerSize(); ++ka)
    for (SparseMatrixXc::InnerIterator ia(a, ka); ia; ++ia)
      for (int kb = 0; kb < b.outerSize(); ++kb)
        for (SparseMatrixXc::InnerIterator ib(b, kb); ib; ++ib)
          trips.emplace_back(ia.row() * b.rows() + ib.row(),
                             ia.col() * b.cols() + ib.col(),
                             ia.value() * ib.value());
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

SparseMatrixXc site_operator(const Matrix2c& op, int site, int n) {
  if (site < 1 || site > n)
    throw std::out_of_range("site_operator: site index out of range");
  const Eigen::Index dim = Eigen::Index(1) << n;
  const Eigen::Index left = Eigen::Index(1) << (site - 1);
  const Eigen::Index right = Eigen::Index(1) << (n - site);
  SparseMatrixXc out(dim, dim);
  std::vector<Eigen::Triplet<Complex>> trips;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const Complex v = op(r, c);
      if (v == Complex(0, 0)) continue;
      for (Eigen::Index l = 0; l < left; ++l)
        for (Eigen::Index q = 0; q < right; ++q) {
          const Eigen::Index row = (l * 2 + r) * right + q;
          const Eigen::Index col = (l * 2 + c) * right + q;
          trips.emplace_back(row, col, v);
        }
    }
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

SparseMatrixXc PauliString::to_operator(int n) const {
  const Eigen::Index dim = Eigen::Index(1) << n;
  SparseMatrixXc out(dim, dim);
  out.setIdentity();
  for (const Factor& f : factors)
    out = (out * site_operator(pauli::from_axis(f.axis), f.site, n)).eval();
  return out;
}

}  // namespace xxness
