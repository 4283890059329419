#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <vector>

namespace xxness {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;
using SparseMatrixXc = Eigen::SparseMatrix<Complex>;

// Basis convention, fixed project-wide: |up> has sigma_z eigenvalue +1 and is
// basis index 0. Multi-site basis index is s_1 s_2 ... s_n read as a binary
// number, site 1 most significant, bit 1 meaning down. Two-qubit order is
// therefore |uu>, |ud>, |du>, |dd>.
namespace pauli {

Matrix2c identity();
Matrix2c x();
Matrix2c y();
Matrix2c z();
Matrix2c plus();   // sigma^+ = (x + i y)/2, |down> -> |up>
Matrix2c minus();  // sigma^- = (x - i y)/2

// Single-letter axis label 'I', 'x', 'y', 'z', '+', '-'.
Matrix2c from_axis(char axis);

}  // namespace pauli

// Kronecker products; the first factor owns the most significant index.
MatrixXc kron(const MatrixXc& a, const MatrixXc& b);
SparseMatrixXc kron_sparse(const SparseMatrixXc& a, const SparseMatrixXc& b);

// Embeds a single-site operator at site j (1-based) of an n-site chain.
SparseMatrixXc site_operator(const Matrix2c& op, int site, int n);

// Product of single-site Pauli factors on distinct sites, identity elsewhere.
struct PauliString {
  struct Factor {
    int site;   // 1-based
    char axis;  // 'x', 'y', 'z', '+', '-'
  };
  std::vector<Factor> factors;

  SparseMatrixXc to_operator(int n) const;
};

}  // namespace xxness
