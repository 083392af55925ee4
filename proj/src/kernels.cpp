#include "scarlab/kernels.hpp"

#include <cmath>

namespace scarlab::kernels {

namespace serial {

Eigen::VectorXd overlap_weights(const Eigen::MatrixXcd& vectors, const Eigen::MatrixXcd& probes) {
  const Eigen::Index cols = vectors.cols();
  Eigen::VectorXd weights(cols);
  for (Eigen::Index k = 0; k < cols; ++k) {
    double w = 0.0;
    for (Eigen::Index m = 0; m < probes.cols(); ++m)
      w += std::norm(probes.col(m).dot(vectors.col(k)));
    weights[k] = w;
  }
  return weights;
}

std::vector<double> phase_sum_curve(const Eigen::VectorXd& weights,
                                    const Eigen::VectorXd& energies,
                                    std::span<const double> times) {
  std::vector<double> out(times.size());
  for (std::size_t t = 0; t < times.size(); ++t) {
    double re = 0.0, im = 0.0;
    for (Eigen::Index k = 0; k < weights.size(); ++k) {
      const double phase = -energies[k] * times[t];
      re += weights[k] * std::cos(phase);
      im += weights[k] * std::sin(phase);
    }
    out[t] = re * re + im * im;
  }
  return out;
}

Eigen::MatrixXd congruence(const Eigen::MatrixXd& u, const Eigen::SparseMatrix<double>& s) {
  const Eigen::Index n = u.rows(), c = u.cols();
  Eigen::MatrixXd image = Eigen::MatrixXd::Zero(n, c);
  for (Eigen::Index j = 0; j < c; ++j)
    for (Eigen::Index k = 0; k < s.outerSize(); ++k)
      for (Eigen::SparseMatrix<double>::InnerIterator it(s, k); it; ++it)
        image(it.row(), j) += it.value() * u(it.col(), j);
  Eigen::MatrixXd out(c, c);
  for (Eigen::Index i = 0; i < c; ++i)
    for (Eigen::Index j = 0; j < c; ++j) {
      double acc = 0.0;
      for (Eigen::Index k = 0; k < n; ++k) acc += u(k, i) * image(k, j);
      out(i, j) = acc;
    }
  return out;
}

Eigen::MatrixXcd congruence(const Eigen::MatrixXcd& u,
                            const Eigen::SparseMatrix<std::complex<double>>& s) {
  const Eigen::Index n = u.rows(), c = u.cols();
  Eigen::MatrixXcd image = Eigen::MatrixXcd::Zero(n, c);
  for (Eigen::Index j = 0; j < c; ++j)
    for (Eigen::Index k = 0; k < s.outerSize(); ++k)
      for (Eigen::SparseMatrix<std::complex<double>>::InnerIterator it(s, k); it; ++it)
        image(it.row(), j) += it.value() * u(it.col(), j);
  Eigen::MatrixXcd out(c, c);
  for (Eigen::Index i = 0; i < c; ++i)
    for (Eigen::Index j = 0; j < c; ++j) {
      std::complex<double> acc = 0.0;
      for (Eigen::Index k = 0; k < n; ++k) acc += std::conj(u(k, i)) * image(k, j);
      out(i, j) = acc;
    }
  return out;
}

}  // namespace serial

namespace omp {

Eigen::VectorXd overlap_weights(const Eigen::MatrixXcd& vectors, const Eigen::MatrixXcd& probes) {
  const Eigen::Index cols = vectors.cols();
  Eigen::VectorXd weights(cols);
#pragma omp parallel for schedule(static)
  for (Eigen::Index k = 0; k < cols; ++k) {
    double w = 0.0;
    for (Eigen::Index m = 0; m < probes.cols(); ++m)
      w += std::norm(probes.col(m).dot(vectors.col(k)));
    weights[k] = w;
  }
  return weights;
}

std::vector<double> phase_sum_curve(const Eigen::VectorXd& weights,
                                    const Eigen::VectorXd& energies,
                                    std::span<const double> times) {
  std::vector<double> out(times.size());
  const std::int64_t nt = static_cast<std::int64_t>(times.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < nt; ++t) {
    double re = 0.0, im = 0.0;
    for (Eigen::Index k = 0; k < weights.size(); ++k) {
      const double phase = -energies[k] * times[t];
      re += weights[k] * std::cos(phase);
      im += weights[k] * std::sin(phase);
    }
    out[t] = re * re + im * im;
  }
  return out;
}

namespace {

// sparse image S * U with the sparse factor applied column-block-parallel
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> sparse_image(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& u,
    const Eigen::SparseMatrix<Scalar>& s) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> image(u.rows(), u.cols());
  const Eigen::Index c = u.cols();
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < c; ++j) image.col(j) = s * u.col(j);
  return image;
}

}  // namespace

Eigen::MatrixXd congruence(const Eigen::MatrixXd& u, const Eigen::SparseMatrix<double>& s) {
  Eigen::MatrixXd image = sparse_image<double>(u, s);
  // Eigen's blocked GEMM threads through OpenMP
  Eigen::MatrixXd out(u.cols(), u.cols());
  out.noalias() = u.transpose() * image;
  return out;
}

Eigen::MatrixXcd congruence(const Eigen::MatrixXcd& u,
                            const Eigen::SparseMatrix<std::complex<double>>& s) {
  Eigen::MatrixXcd image = sparse_image<std::complex<double>>(u, s);
  Eigen::MatrixXcd out(u.cols(), u.cols());
  out.noalias() = u.adjoint() * image;
  return out;
}

}  // namespace omp

std::vector<std::pair<double, double>> local_maxima(std::span<const double> xs,
                                                    std::span<const double> ys,
                                                    double min_height,
                                                    bool include_boundaries) {
  std::vector<std::pair<double, double>> peaks;
  const std::size_t n = ys.size();
  for (std::size_t i = 0; i < n; ++i) {
    const bool rises = i == 0 ? include_boundaries : ys[i] > ys[i - 1];
    if (!rises) continue;
    std::size_t j = i;
    while (j + 1 < n && ys[j + 1] == ys[i]) ++j;  // plateau: leftmost point wins
    const bool falls = j + 1 == n ? include_boundaries : ys[j + 1] < ys[i];
    if (falls && ys[i] > min_height) peaks.emplace_back(xs[i], ys[i]);
    i = j;
  }
  return peaks;
}

}  // namespace scarlab::kernels
