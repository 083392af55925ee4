#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "scarlab/cluster.hpp"
#include "scarlab/fields.hpp"

namespace scarlab::spin {

using Complex = std::complex<double>;
using SparseC = Eigen::SparseMatrix<Complex>;

/// Computational z-basis on `sites` spins: site 0 is the least significant
/// bit, bit 1 means spin-up, so basis index 0 is the all-down state and
/// 2m = 2*popcount(state) - N.
struct SpinBasis {
  int sites = 0;
  Eigen::Index dim() const { return Eigen::Index(1) << sites; }
};

inline double magnetization(std::uint64_t state, int sites) {
  return 0.5 * (2 * __builtin_popcountll(state) - sites);
}

/// Operator on the 2^N spin basis, assembled sparse and densified at solve
/// time. Hamiltonians and observables are Hermitian; ladder operators such
/// as Q^dag are stored in the same container.
struct OperatorMatrix {
  int sites = 0;
  SparseC mat;

  Eigen::Index dim() const { return mat.rows(); }
  double max_imag() const;
  bool is_real(double tol = 1e-14) const { return max_imag() < tol; }
  /// max_ab |A(a,b) - conj(A(b,a))|
  double hermiticity_defect() const;
  Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(mat); }
  Eigen::MatrixXd dense_real() const;
  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const { return mat * v; }
};

enum class Axis { x, y, z };

/// s_j^axis acting on the given site, identity elsewhere; eigenvalues +-1/2.
OperatorMatrix spin_operator(int sites, int site, Axis axis);

/// H0 = sum_edges J_ij s_i . s_j + h sum_j s_j^z  (real symmetric,
/// block-diagonal over magnetization sectors).
OperatorMatrix build_h0(const cluster::CouplingGraph& graph, double h);

/// H_ran = sum_j (x_j s_j^x + y_j s_j^y); Hermitian and traceless.
OperatorMatrix build_hran(const FieldRealization& real);

struct TotalSpinOps {
  OperatorMatrix sx, sy, sz, s2;
};

/// Total-spin components s^a = sum_j s_j^a plus s^2 = sx^2 + sy^2 + sz^2.
TotalSpinOps total_spin_ops(int sites);

/// Tower raising operator Q^dag = sum_j (s_j^x + i s_j^y); its adjoint is Q.
OperatorMatrix tower_op(int sites);

OperatorMatrix adjoint(const OperatorMatrix& op);
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);
/// max |entry| over the sparse representation
double max_abs(const SparseC& mat);

}  // namespace scarlab::spin
