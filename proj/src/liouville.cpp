#include "xxness/liouville.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <Eigen/SparseLU>
#include <bit>
#include <cmath>
#include <random>
#include <sstream>

#include "xxness/errors.hpp"

namespace xxness {

namespace {

Eigen::Index pow4(int n) { return Eigen::Index(1) << (2 * n); }
Eigen::Index pow2(int n) { return Eigen::Index(1) << n; }

SparseMatrixXc sparse_identity(Eigen::Index dim) {
  SparseMatrixXc id(dim, dim);
  id.setIdentity();
  return id;
}

// vec is column-stacked: vec index = col * dim + row.
// vec(A rho B) = (B^T (x) A) vec(rho).
SparseMatrixXc left_right_super(const SparseMatrixXc& a,
                                const SparseMatrixXc& b) {
  return kron_sparse(SparseMatrixXc(b.transpose()), a);
}

}  // namespace

SparseMatrixXc xx_hamiltonian(int n) {
  const Eigen::Index dim = pow2(n);
  SparseMatrixXc h(dim, dim);
  for (int j = 1; j < n; ++j) {
    h = h + SparseMatrixXc(site_operator(pauli::x(), j, n) *
                           site_operator(pauli::x(), j + 1, n)) +
        SparseMatrixXc(site_operator(pauli::y(), j, n) *
                       site_operator(pauli::y(), j + 1, n));
  }
  return h;
}

std::vector<SparseMatrixXc> lindblad_operators(const LiouvilleModel& m) {
  const int n = m.chain.n;
  const DrivingParams& p = m.driving;
  std::vector<SparseMatrixXc> ops;
  auto add_bath = [&](double rate, const Matrix2c& op, int site) {
    // rate = Gamma * (1 +- mu/2 +- mu_bar); zero-rate operators drop out.
    if (rate <= 0.0) return;
    ops.push_back(
        SparseMatrixXc(std::sqrt(rate) * site_operator(op, site, n)));
  };
  add_bath(p.gamma_left * (1.0 - p.mu / 2.0 + p.mu_bar), pauli::plus(), 1);
  add_bath(p.gamma_left * (1.0 + p.mu / 2.0 - p.mu_bar), pauli::minus(), 1);
  add_bath(p.gamma_right * (1.0 + p.mu / 2.0 + p.mu_bar), pauli::plus(), n);
  add_bath(p.gamma_right * (1.0 - p.mu / 2.0 - p.mu_bar), pauli::minus(), n);
  if (m.dephasing.gamma > 0.0) {
    const double amp = std::sqrt(m.dephasing.gamma / 2.0);
    for (int j = 1; j <= n; ++j)
      ops.push_back(SparseMatrixXc(amp * site_operator(pauli::z(), j, n)));
  }
  return ops;
}

Liouvillian build_liouvillian(const ChainSpec& chain, const DrivingParams& p,
                              const DephasingSpec& deph,
                              const BuildOptions& opts) {
  ValidationReport rep = validate(p, deph, chain);
  if (!rep.ok()) {
    const bool only_no_bath =
        rep.violations.size() == 1 && p.gamma_left == 0.0 &&
        p.gamma_right == 0.0 && p.gamma_left >= 0.0 && p.gamma_right >= 0.0;
    if (!(opts.allow_degenerate_model && only_no_bath))
      throw InvalidParamsError(rep.joined());
  }
  if (chain.n > opts.n_max) {
    std::ostringstream os;
    os << "chain size " << chain.n << " exceeds n_max " << opts.n_max;
    throw SizeLimitError(os.str());
  }

  const int n = chain.n;
  const Eigen::Index dim = pow2(n);
  const SparseMatrixXc id = sparse_identity(dim);

  Liouvillian L;
  L.model = {chain, p, deph};
  L.dim = pow4(n);

  // i [rho, H] = i (rho H - H rho)
  const SparseMatrixXc h = xx_hamiltonian(n);
  SparseMatrixXc super =
      SparseMatrixXc(Complex(0, 1) *
                     (left_right_super(id, h) - left_right_super(h, id)));

  // [L rho, L^+] + [L, rho L^+] = 2 L rho L^+ - L^+L rho - rho L^+L
  for (const SparseMatrixXc& lk : lindblad_operators(L.model)) {
    const SparseMatrixXc lk_dag = SparseMatrixXc(lk.adjoint());
    const SparseMatrixXc ll = SparseMatrixXc(lk_dag * lk);
    super = super + SparseMatrixXc(2.0 * left_right_super(lk, lk_dag)) -
            left_right_super(ll, id) - left_right_super(id, ll);
  }
  super.makeCompressed();
  L.matrix = std::move(super);
  return L;
}

double trace_preservation_defect(const Liouvillian& L) {
  const Eigen::Index dim2 = static_cast<Eigen::Index>(std::sqrt(double(L.dim)));
  VectorXc tr_vec = VectorXc::Zero(L.dim);
  for (Eigen::Index r = 0; r < dim2; ++r) tr_vec(r * dim2 + r) = 1.0;
  const VectorXc res = L.matrix.adjoint() * tr_vec.conjugate();
  return res.cwiseAbs().maxCoeff();
}

namespace {

struct SectorIndex {
  std::vector<Eigen::Index> to_full;   // sector slot -> full vec index
  std::vector<Eigen::Index> to_slot;   // full vec index -> slot or -1
};

// Vec indices whose bra and ket magnetizations agree. The generator maps the
// block to itself, and a unique steady state lives inside it.
SectorIndex zero_sector(int n) {
  const Eigen::Index dim = pow2(n);
  SectorIndex s;
  s.to_slot.assign(static_cast<std::size_t>(dim * dim), -1);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const int pc_col = std::popcount(static_cast<std::uint64_t>(col));
    for (Eigen::Index row = 0; row < dim; ++row) {
      if (std::popcount(static_cast<std::uint64_t>(row)) != pc_col) continue;
      s.to_slot[static_cast<std::size_t>(col * dim + row)] =
          static_cast<Eigen::Index>(s.to_full.size());
      s.to_full.push_back(col * dim + row);
    }
  }
  return s;
}

// Replace the equation for rho(0,0) with the trace row and solve M x = e_0.
// The replaced row is redundant: the diagonal-entry rows sum to zero by trace
// preservation.
void set_trace_row(std::vector<Eigen::Triplet<Complex>>& trips,
                   Eigen::Index replaced_row,
                   const std::vector<Eigen::Index>& diag_slots) {
  for (Eigen::Index slot : diag_slots) trips.emplace_back(replaced_row, slot, 1.0);
}

VectorXc solve_sector(const Liouvillian& L, const SectorIndex& sector,
                      Eigen::Index dim2) {
  const Eigen::Index sdim = static_cast<Eigen::Index>(sector.to_full.size());
  std::vector<Eigen::Index> diag_slots;
  diag_slots.reserve(static_cast<std::size_t>(dim2));
  for (Eigen::Index r = 0; r < dim2; ++r)
    diag_slots.push_back(sector.to_slot[static_cast<std::size_t>(r * dim2 + r)]);
  const Eigen::Index trace_row = sector.to_slot[0];

  std::vector<Eigen::Triplet<Complex>> trips;
  trips.reserve(static_cast<std::size_t>(L.matrix.nonZeros()));
  for (int k = 0; k < L.matrix.outerSize(); ++k)
    for (SparseMatrixXc::InnerIterator it(L.matrix, k); it; ++it) {
      const Eigen::Index rs = sector.to_slot[static_cast<std::size_t>(it.row())];
      const Eigen::Index cs = sector.to_slot[static_cast<std::size_t>(it.col())];
      if (rs < 0 || cs < 0 || rs == trace_row) continue;
      trips.emplace_back(rs, cs, it.value());
    }
  set_trace_row(trips, trace_row, diag_slots);

  SparseMatrixXc m(sdim, sdim);
  m.setFromTriplets(trips.begin(), trips.end());
  m.makeCompressed();

  Eigen::SparseLU<SparseMatrixXc> lu;
  lu.compute(m);
  if (lu.info() != Eigen::Success)
    throw SolveError("steady_state: sparse LU factorization failed");
  VectorXc rhs = VectorXc::Zero(sdim);
  rhs(trace_row) = 1.0;
  const VectorXc x = lu.solve(rhs);

  VectorXc full = VectorXc::Zero(L.dim);
  for (Eigen::Index slot = 0; slot < sdim; ++slot)
    full(sector.to_full[static_cast<std::size_t>(slot)]) = x(slot);
  return full;
}

VectorXc solve_full(const Liouvillian& L, Eigen::Index dim2, bool dense) {
  std::vector<Eigen::Triplet<Complex>> trips;
  trips.reserve(static_cast<std::size_t>(L.matrix.nonZeros()) + dim2);
  for (int k = 0; k < L.matrix.outerSize(); ++k)
    for (SparseMatrixXc::InnerIterator it(L.matrix, k); it; ++it) {
      if (it.row() == 0) continue;  // replaced by the trace row
      trips.emplace_back(it.row(), it.col(), it.value());
    }
  for (Eigen::Index r = 0; r < dim2; ++r)
    trips.emplace_back(0, r * dim2 + r, 1.0);

  SparseMatrixXc m(L.dim, L.dim);
  m.setFromTriplets(trips.begin(), trips.end());
  m.makeCompressed();
  VectorXc rhs = VectorXc::Zero(L.dim);
  rhs(0) = 1.0;

  if (dense) {
    const MatrixXc md(m);
    return Eigen::PartialPivLU<MatrixXc>(md).solve(rhs);
  }
  Eigen::SparseLU<SparseMatrixXc> lu;
  lu.compute(m);
  if (lu.info() != Eigen::Success)
    throw SolveError("steady_state: sparse LU factorization failed");
  return lu.solve(rhs);
}

// Magnitudes of the two eigenvalues of L nearest zero, via subspace iteration
// with a shift-inverted operator.
std::pair<double, double> smallest_two_by_shift_invert(const Liouvillian& L) {
  const double scale =
      std::max(1.0, L.matrix.coeffs().cwiseAbs().maxCoeff());
  const Complex shift(1e-8 * scale, 0.0);
  SparseMatrixXc shifted = L.matrix;
  shifted -= shift * sparse_identity(L.dim);
  shifted.makeCompressed();
  Eigen::SparseLU<SparseMatrixXc> lu;
  lu.compute(shifted);
  if (lu.info() != Eigen::Success)
    throw SolveError("nullity diagnosis: shifted LU factorization failed");

  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> gauss;
  MatrixXc v(L.dim, 2);
  for (Eigen::Index i = 0; i < L.dim; ++i)
    for (int j = 0; j < 2; ++j) v(i, j) = Complex(gauss(rng), gauss(rng));

  for (int iter = 0; iter < 40; ++iter) {
    v = lu.solve(v);
    Eigen::HouseholderQR<MatrixXc> qr(v);
    v = qr.householderQ() * MatrixXc::Identity(L.dim, 2);
  }
  const Eigen::Matrix2cd t = v.adjoint() * (L.matrix * v);
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(t, false);
  double m0 = std::abs(es.eigenvalues()(0));
  double m1 = std::abs(es.eigenvalues()(1));
  if (m0 > m1) std::swap(m0, m1);
  return {m0, m1};
}

// Two smallest singular values of the dense superoperator.
std::pair<double, double> smallest_two_dense_svd(const Liouvillian& L) {
  const MatrixXc md(L.matrix);
  Eigen::BDCSVD<MatrixXc> svd(md);
  const auto& sv = svd.singularValues();
  return {sv(sv.size() - 1), sv(sv.size() - 2)};
}

int estimate_nullity(const Liouvillian& L) {
  const bool dense_ok = L.dim <= 1024;  // n <= 5
  const auto [s0, s1] =
      dense_ok ? smallest_two_dense_svd(L) : smallest_two_by_shift_invert(L);
  const double scale =
      std::max(1.0, L.matrix.coeffs().cwiseAbs().maxCoeff());
  const double tiny = 1e-10 * scale;
  if (s1 <= tiny) return 2;
  if (s0 <= tiny && s1 / std::max(s0, 1e-300) < 1e6) return 2;
  return 1;
}

}  // namespace

SteadyStateSolution steady_state(const Liouvillian& L,
                                 const SolveOptions& opts) {
  const int n = L.model.chain.n;
  const Eigen::Index dim2 = pow2(n);

  int nullity = 1;
  if (opts.diagnose_nullity) {
    nullity = estimate_nullity(L);
    if (nullity > 1) {
      std::ostringstream os;
      os << "steady state degenerate (estimated nullity " << nullity << ")";
      throw DegenerateSteadyStateError(os.str());
    }
  }

  VectorXc x;
  switch (opts.method) {
    case SolveMethod::automatic:
    case SolveMethod::sector_sparse: {
      const SectorIndex sector = zero_sector(n);
      x = solve_sector(L, sector, dim2);
      break;
    }
    case SolveMethod::full_sparse:
      x = solve_full(L, dim2, false);
      break;
    case SolveMethod::full_dense:
      x = solve_full(L, dim2, true);
      break;
  }

  SteadyStateSolution sol;
  sol.residual = (L.matrix * x).norm();

  MatrixXc rho = Eigen::Map<const MatrixXc>(x.data(), dim2, dim2);
  const MatrixXc herm_defect = rho - rho.adjoint();
  sol.hermiticity_adjustment = 0.5 * herm_defect.cwiseAbs().maxCoeff();
  rho = 0.5 * (rho + rho.adjoint().eval());
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > 1e-8)
    throw SolveError("steady_state: trace constraint not met by the solve");
  rho /= tr;
  sol.rho = std::move(rho);

  Eigen::SelfAdjointEigenSolver<MatrixXc> es(sol.rho, Eigen::EigenvaluesOnly);
  sol.rho_min_eigenvalue = es.eigenvalues().minCoeff();
  sol.nullity = nullity;
  sol.nullity_diagnosed = opts.diagnose_nullity;

  if (sol.residual > opts.residual_tol) {
    std::ostringstream os;
    os << "steady_state: residual " << sol.residual << " exceeds tolerance "
       << opts.residual_tol;
    throw SolveError(os.str());
  }
  if (sol.rho_min_eigenvalue < -opts.psd_tol) {
    std::ostringstream os;
    os << "steady_state: rho has eigenvalue " << sol.rho_min_eigenvalue
       << " below -" << opts.psd_tol << " (residual " << sol.residual << ")";
    throw SolveError(os.str());
  }
  return sol;
}

TwoQubitState partial_trace_pair(const SteadyStateSolution& s, int j, int k,
                                 int n) {
  if (!(1 <= j && j < k && k <= n))
    throw std::out_of_range("partial_trace_pair: need 1 <= j < k <= n");
  const Eigen::Index dim = pow2(n);
  const int bit_j = n - j;  // 0-based bit position; site 1 is most significant
  const int bit_k = n - k;

  std::vector<int> rest_bits;
  for (int b = 0; b < n; ++b)
    if (b != bit_j && b != bit_k) rest_bits.push_back(b);

  Matrix4c out = Matrix4c::Zero();
  const Eigen::Index rest_count = dim / 4;
  for (Eigen::Index rest = 0; rest < rest_count; ++rest) {
    Eigen::Index base = 0;
    for (std::size_t i = 0; i < rest_bits.size(); ++i)
      if (rest & (Eigen::Index(1) << i)) base |= Eigen::Index(1) << rest_bits[i];
    for (int p = 0; p < 4; ++p) {
      const Eigen::Index row = base | (Eigen::Index(p >> 1) << bit_j) |
                               (Eigen::Index(p & 1) << bit_k);
      for (int q = 0; q < 4; ++q) {
        const Eigen::Index col = base | (Eigen::Index(q >> 1) << bit_j) |
                                 (Eigen::Index(q & 1) << bit_k);
        out(p, q) += s.rho(row, col);
      }
    }
  }
  return TwoQubitState(out);
}

Complex expectation_complex(const SteadyStateSolution& s,
                            const PauliString& obs, int n) {
  const SparseMatrixXc op = obs.to_operator(n);
  Complex tr(0, 0);
  for (int k = 0; k < op.outerSize(); ++k)
    for (SparseMatrixXc::InnerIterator it(op, k); it; ++it)
      tr += s.rho(it.col(), it.row()) * it.value();
  return tr;
}

double expectation(const SteadyStateSolution& s, const PauliString& obs,
                   int n) {
  return expectation_complex(s, obs, n).real();
}

double site_z(const SteadyStateSolution& s, int j, int n) {
  return expectation(s, PauliString{{{j, 'z'}}}, n);
}

double bond_current_t(const SteadyStateSolution& s, int j, int n) {
  return -expectation(s, PauliString{{{j, 'x'}, {j + 1, 'y'}}}, n);
}

double bond_energy(const SteadyStateSolution& s, int j, int n) {
  return expectation(s, PauliString{{{j, 'x'}, {j + 1, 'x'}}}, n) +
         expectation(s, PauliString{{{j, 'y'}, {j + 1, 'y'}}}, n);
}

SteadyStateSolution solve_ness(const LiouvilleModel& m,
                               const BuildOptions& build_opts,
                               const SolveOptions& solve_opts) {
  const Liouvillian L =
      build_liouvillian(m.chain, m.driving, m.dephasing, build_opts);
  return steady_state(L, solve_opts);
}

}  // namespace xxness
