#include "scarlab/spin_ops.hpp"

#include <vector>

#include "scarlab/errors.hpp"

namespace scarlab::spin {

namespace {

using Triplet = Eigen::Triplet<Complex>;

SparseC from_triplets(Eigen::Index dim, std::vector<Triplet>& trips) {
  SparseC mat(dim, dim);
  mat.setFromTriplets(trips.begin(), trips.end());  // duplicates are summed
  mat.prune([](Eigen::Index, Eigen::Index, const Complex& v) { return v != Complex(0.0, 0.0); });
  mat.makeCompressed();
  return mat;
}

void check_sites(int sites) {
  if (sites < 1 || sites > 24) throw ConfigError("spin ops: site count out of range");
}

}  // namespace

double OperatorMatrix::max_imag() const {
  double worst = 0.0;
  for (int k = 0; k < mat.outerSize(); ++k)
    for (SparseC::InnerIterator it(mat, k); it; ++it)
      worst = std::max(worst, std::abs(it.value().imag()));
  return worst;
}

double OperatorMatrix::hermiticity_defect() const {
  SparseC diff = SparseC(mat.adjoint()) - mat;
  return max_abs(diff);
}

Eigen::MatrixXd OperatorMatrix::dense_real() const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(mat.rows(), mat.cols());
  for (int k = 0; k < mat.outerSize(); ++k)
    for (SparseC::InnerIterator it(mat, k); it; ++it) out(it.row(), it.col()) = it.value().real();
  return out;
}

double max_abs(const SparseC& mat) {
  double worst = 0.0;
  for (int k = 0; k < mat.outerSize(); ++k)
    for (SparseC::InnerIterator it(mat, k); it; ++it)
      worst = std::max(worst, std::abs(it.value()));
  return worst;
}

OperatorMatrix spin_operator(int sites, int site, Axis axis) {
  check_sites(sites);
  if (site < 0 || site >= sites) throw ConfigError("spin_operator: site out of range");
  const Eigen::Index dim = Eigen::Index(1) << sites;
  const std::uint64_t bit = std::uint64_t(1) << site;
  std::vector<Triplet> trips;
  trips.reserve(dim);
  for (std::uint64_t b = 0; b < std::uint64_t(dim); ++b) {
    switch (axis) {
      case Axis::z:
        trips.emplace_back(b, b, Complex((b & bit) ? 0.5 : -0.5, 0.0));
        break;
      case Axis::x:
        trips.emplace_back(b ^ bit, b, Complex(0.5, 0.0));
        break;
      case Axis::y:
        // <down|s^y|up> = i/2, <up|s^y|down> = -i/2
        trips.emplace_back(b ^ bit, b, (b & bit) ? Complex(0.0, 0.5) : Complex(0.0, -0.5));
        break;
    }
  }
  return OperatorMatrix{sites, from_triplets(dim, trips)};
}

OperatorMatrix build_h0(const cluster::CouplingGraph& graph, double h) {
  check_sites(graph.sites);
  const int n = graph.sites;
  const Eigen::Index dim = Eigen::Index(1) << n;
  std::vector<Triplet> trips;
  trips.reserve(std::size_t(dim) * (graph.edges.size() + 1));
  for (std::uint64_t b = 0; b < std::uint64_t(dim); ++b) {
    double diag = h * magnetization(b, n);
    for (const cluster::Edge& e : graph.edges) {
      const bool up_i = b & (std::uint64_t(1) << e.i);
      const bool up_j = b & (std::uint64_t(1) << e.j);
      if (up_i == up_j) {
        diag += 0.25 * e.coupling;  // s_i^z s_j^z on aligned spins
      } else {
        diag -= 0.25 * e.coupling;
        // flip-flop (s_i^+ s_j^- + s_i^- s_j^+)/2
        const std::uint64_t flipped = b ^ (std::uint64_t(1) << e.i) ^ (std::uint64_t(1) << e.j);
        trips.emplace_back(flipped, b, Complex(0.5 * e.coupling, 0.0));
      }
    }
    trips.emplace_back(b, b, Complex(diag, 0.0));
  }
  return OperatorMatrix{n, from_triplets(dim, trips)};
}

OperatorMatrix build_hran(const FieldRealization& real) {
  check_sites(real.sites);
  if (static_cast<int>(real.xs.size()) != real.sites ||
      static_cast<int>(real.ys.size()) != real.sites)
    throw ConfigError("build_hran: field list length mismatch");
  const int n = real.sites;
  const Eigen::Index dim = Eigen::Index(1) << n;
  std::vector<Triplet> trips;
  trips.reserve(std::size_t(dim) * n);
  for (std::uint64_t b = 0; b < std::uint64_t(dim); ++b) {
    for (int j = 0; j < n; ++j) {
      const std::uint64_t bit = std::uint64_t(1) << j;
      const double x = real.xs[j];
      const double y = real.ys[j];
      if (x == 0.0 && y == 0.0) continue;
      const double sy = (b & bit) ? 0.5 * y : -0.5 * y;
      trips.emplace_back(b ^ bit, b, Complex(0.5 * x, sy));
    }
  }
  return OperatorMatrix{n, from_triplets(dim, trips)};
}

TotalSpinOps total_spin_ops(int sites) {
  check_sites(sites);
  const Eigen::Index dim = Eigen::Index(1) << sites;
  TotalSpinOps ops;
  ops.sx.sites = ops.sy.sites = ops.sz.sites = ops.s2.sites = sites;
  ops.sx.mat = SparseC(dim, dim);
  ops.sy.mat = SparseC(dim, dim);
  ops.sz.mat = SparseC(dim, dim);
  for (int j = 0; j < sites; ++j) {
    ops.sx.mat += spin_operator(sites, j, Axis::x).mat;
    ops.sy.mat += spin_operator(sites, j, Axis::y).mat;
    ops.sz.mat += spin_operator(sites, j, Axis::z).mat;
  }
  ops.s2.mat = SparseC(ops.sx.mat * ops.sx.mat) + SparseC(ops.sy.mat * ops.sy.mat) +
               SparseC(ops.sz.mat * ops.sz.mat);
  ops.s2.mat.prune([](Eigen::Index, Eigen::Index, const Complex& v) {
    return std::abs(v) > 1e-15;
  });
  ops.s2.mat.makeCompressed();
  return ops;
}

OperatorMatrix tower_op(int sites) {
  check_sites(sites);
  const Eigen::Index dim = Eigen::Index(1) << sites;
  std::vector<Triplet> trips;
  trips.reserve(std::size_t(dim) * sites / 2);
  for (std::uint64_t b = 0; b < std::uint64_t(dim); ++b)
    for (int j = 0; j < sites; ++j) {
      const std::uint64_t bit = std::uint64_t(1) << j;
      if (!(b & bit)) trips.emplace_back(b | bit, b, Complex(1.0, 0.0));  // s_j^+
    }
  return OperatorMatrix{sites, from_triplets(dim, trips)};
}

OperatorMatrix adjoint(const OperatorMatrix& op) {
  return OperatorMatrix{op.sites, SparseC(op.mat.adjoint())};
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  return OperatorMatrix{a.sites, SparseC(a.mat * b.mat) - SparseC(b.mat * a.mat)};
}

}  // namespace scarlab::spin
