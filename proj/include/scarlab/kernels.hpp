#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace scarlab::kernels {

// Hot loops of the pipeline. Each kernel exists twice: a plain serial
// reference used by the tests and an OpenMP version used in production.
// tools/bench_kernels compares the two.

namespace serial {

/// w_k = sum_m |<probes_m | vectors_k>|^2, one weight per column of
/// `vectors`.
Eigen::VectorXd overlap_weights(const Eigen::MatrixXcd& vectors,
                                const Eigen::MatrixXcd& probes);

/// F(t) = |sum_k w_k e^{-i E_k t}|^2 evaluated on the given times.
std::vector<double> phase_sum_curve(const Eigen::VectorXd& weights,
                                    const Eigen::VectorXd& energies,
                                    std::span<const double> times);

/// U^T S U for real U and sparse real S.
Eigen::MatrixXd congruence(const Eigen::MatrixXd& u,
                           const Eigen::SparseMatrix<double>& s);

/// U^dag S U for complex U and sparse complex S.
Eigen::MatrixXcd congruence(const Eigen::MatrixXcd& u,
                            const Eigen::SparseMatrix<std::complex<double>>& s);

}  // namespace serial

namespace omp {

Eigen::VectorXd overlap_weights(const Eigen::MatrixXcd& vectors,
                                const Eigen::MatrixXcd& probes);

std::vector<double> phase_sum_curve(const Eigen::VectorXd& weights,
                                    const Eigen::VectorXd& energies,
                                    std::span<const double> times);

Eigen::MatrixXd congruence(const Eigen::MatrixXd& u,
                           const Eigen::SparseMatrix<double>& s);

Eigen::MatrixXcd congruence(const Eigen::MatrixXcd& u,
                            const Eigen::SparseMatrix<std::complex<double>>& s);

}  // namespace omp

/// Strict local maxima of y(x) above min_height; the leftmost point of a
/// plateau wins. With include_boundaries the series is treated as padded
/// with -inf outside, so an extreme point larger than its single neighbor
/// counts. Returns (x, y) pairs in x order.
std::vector<std::pair<double, double>> local_maxima(std::span<const double> xs,
                                                    std::span<const double> ys,
                                                    double min_height,
                                                    bool include_boundaries = false);

}  // namespace scarlab::kernels
