#pragma once

#include <complex>

#include <Eigen/Dense>

#include "scarlab/errors.hpp"

namespace scarlab {
namespace lapack {

/// Caps the thread count of the underlying BLAS. The ensemble drivers pin
/// it to 1 and parallelize over realizations instead.
void set_blas_threads(int n);

/// Ascending eigenvalues of a symmetric/Hermitian matrix (dsyevd/zheevd,
/// values only). The input is taken by value: LAPACK overwrites it.
Eigen::VectorXd eigvalsh(Eigen::MatrixXd a);
Eigen::VectorXd eigvalsh(Eigen::MatrixXcd a);

/// Full eigensystem; `vectors` columns match the ascending eigenvalues.
void eigh(Eigen::MatrixXd a, Eigen::VectorXd& values, Eigen::MatrixXd& vectors);
void eigh(Eigen::MatrixXcd a, Eigen::VectorXd& values, Eigen::MatrixXcd& vectors);

}  // namespace lapack
}  // namespace scarlab
