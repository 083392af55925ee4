#include "scarlab/lapack.hpp"

#include <string>
#include <vector>

extern "C" {
void dsyevd_(const char* jobz, const char* uplo, const int* n, double* a, const int* lda,
             double* w, double* work, const int* lwork, int* iwork, const int* liwork,
             int* info);
void zheevd_(const char* jobz, const char* uplo, const int* n, std::complex<double>* a,
             const int* lda, double* w, std::complex<double>* work, const int* lwork,
             double* rwork, const int* lrwork, int* iwork, const int* liwork, int* info);
void openblas_set_num_threads(int);
}

namespace scarlab::lapack {

void set_blas_threads(int n) { openblas_set_num_threads(n); }

namespace {

void run_dsyevd(const char* jobz, Eigen::MatrixXd& a, Eigen::VectorXd& w) {
  const int n = static_cast<int>(a.rows());
  w.resize(n);
  if (n == 0) return;
  int info = 0, lwork = -1, liwork = -1, iquery = 0;
  double dquery = 0.0;
  dsyevd_(jobz, "U", &n, a.data(), &n, w.data(), &dquery, &lwork, &iquery, &liwork, &info);
  lwork = static_cast<int>(dquery);
  liwork = iquery;
  std::vector<double> work(static_cast<std::size_t>(lwork));
  std::vector<int> iwork(static_cast<std::size_t>(liwork));
  dsyevd_(jobz, "U", &n, a.data(), &n, w.data(), work.data(), &lwork, iwork.data(), &liwork,
          &info);
  if (info != 0) throw SolverError("dsyevd failed with info=" + std::to_string(info));
}

void run_zheevd(const char* jobz, Eigen::MatrixXcd& a, Eigen::VectorXd& w) {
  const int n = static_cast<int>(a.rows());
  w.resize(n);
  if (n == 0) return;
  int info = 0, lwork = -1, lrwork = -1, liwork = -1, iquery = 0;
  std::complex<double> cquery;
  double rquery = 0.0;
  zheevd_(jobz, "U", &n, a.data(), &n, w.data(), &cquery, &lwork, &rquery, &lrwork, &iquery,
          &liwork, &info);
  lwork = static_cast<int>(cquery.real());
  lrwork = static_cast<int>(rquery);
  liwork = iquery;
  std::vector<std::complex<double>> work(static_cast<std::size_t>(lwork));
  std::vector<double> rwork(static_cast<std::size_t>(lrwork));
  std::vector<int> iwork(static_cast<std::size_t>(liwork));
  zheevd_(jobz, "U", &n, a.data(), &n, w.data(), work.data(), &lwork, rwork.data(), &lrwork,
          iwork.data(), &liwork, &info);
  if (info != 0) throw SolverError("zheevd failed with info=" + std::to_string(info));
}

}  // namespace

Eigen::VectorXd eigvalsh(Eigen::MatrixXd a) {
  Eigen::VectorXd w;
  run_dsyevd("N", a, w);
  return w;
}

Eigen::VectorXd eigvalsh(Eigen::MatrixXcd a) {
  Eigen::VectorXd w;
  run_zheevd("N", a, w);
  return w;
}

void eigh(Eigen::MatrixXd a, Eigen::VectorXd& values, Eigen::MatrixXd& vectors) {
  run_dsyevd("V", a, values);
  vectors = std::move(a);
}

void eigh(Eigen::MatrixXcd a, Eigen::VectorXd& values, Eigen::MatrixXcd& vectors) {
  run_zheevd("V", a, values);
  vectors = std::move(a);
}

}  // namespace scarlab::lapack
