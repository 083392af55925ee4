#include "scarlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <vector>

#include "scarlab/errors.hpp"
#include "scarlab/lapack.hpp"

namespace scarlab::spectral {

namespace {

constexpr double kHermTol = 1e-12;
constexpr double kDegenerateTol = 1e-8;   // energy grouping / tower threading
constexpr double kRoundTol = 1e-6;        // quantum-number rounding

int popcount(std::uint64_t v) { return __builtin_popcountll(v); }

/// Multiplies each column by a unit phase so its largest-magnitude entry is
/// real positive (ties on magnitude go to the smallest row index).
void fix_phases(Eigen::MatrixXcd& vectors) {
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    Eigen::Index best = 0;
    double mag = 0.0;
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
      const double a = std::abs(vectors(r, c));
      if (a > mag) {  // exact ties keep the smallest row index
        mag = a;
        best = r;
      }
    }
    if (mag == 0.0) continue;
    const std::complex<double> phase = vectors(best, c) / mag;
    vectors.col(c) *= std::conj(phase);
  }
}

bool column_less(const Eigen::MatrixXcd& vectors, Eigen::Index a, Eigen::Index b) {
  for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
    const auto va = vectors(r, a), vb = vectors(r, b);
    if (std::abs(va.real() - vb.real()) > 1e-10) return va.real() < vb.real();
    if (std::abs(va.imag() - vb.imag()) > 1e-10) return va.imag() < vb.imag();
  }
  return false;
}

/// Deterministic ordering inside (near-)exactly degenerate blocks.
void sort_degenerate(Eigen::VectorXd& energies, Eigen::MatrixXcd& vectors) {
  const Eigen::Index n = energies.size();
  Eigen::Index lo = 0;
  while (lo < n) {
    Eigen::Index hi = lo + 1;
    while (hi < n &&
           energies[hi] - energies[hi - 1] <= 1e-12 * std::max(1.0, std::abs(energies[hi])))
      ++hi;
    if (hi - lo > 1) {
      std::vector<Eigen::Index> order(hi - lo);
      std::iota(order.begin(), order.end(), lo);
      std::sort(order.begin(), order.end(),
                [&](Eigen::Index a, Eigen::Index b) { return column_less(vectors, a, b); });
      Eigen::MatrixXcd block(vectors.rows(), hi - lo);
      Eigen::VectorXd evals(hi - lo);
      for (Eigen::Index k = 0; k < hi - lo; ++k) {
        block.col(k) = vectors.col(order[k]);
        evals[k] = energies[order[k]];
      }
      vectors.middleCols(lo, hi - lo) = block;
      energies.segment(lo, hi - lo) = evals;
    }
    lo = hi;
  }
}

Spectrum finalize(Eigen::VectorXd energies, Eigen::MatrixXcd vectors) {
  fix_phases(vectors);
  sort_degenerate(energies, vectors);
  return Spectrum{std::move(energies), std::move(vectors)};
}

void check_hermitian(double defect) {
  if (defect > kHermTol)
    throw ConfigError("diagonalize: input is not Hermitian (defect " + std::to_string(defect) +
                      ")");
}

}  // namespace

Spectrum diagonalize(const spin::OperatorMatrix& op) {
  check_hermitian(op.hermiticity_defect());
  Eigen::VectorXd energies;
  if (op.is_real()) {
    Eigen::MatrixXd vectors;
    lapack::eigh(op.dense_real(), energies, vectors);
    return finalize(std::move(energies), vectors.cast<std::complex<double>>());
  }
  Eigen::MatrixXcd vectors;
  lapack::eigh(op.dense(), energies, vectors);
  return finalize(std::move(energies), std::move(vectors));
}

Spectrum diagonalize(const Eigen::MatrixXcd& dense) {
  check_hermitian((dense - dense.adjoint()).cwiseAbs().maxCoeff());
  Eigen::VectorXd energies;
  if (dense.imag().cwiseAbs().maxCoeff() < 1e-14) {
    Eigen::MatrixXd vectors;
    lapack::eigh(Eigen::MatrixXd(dense.real()), energies, vectors);
    return finalize(std::move(energies), vectors.cast<std::complex<double>>());
  }
  Eigen::MatrixXcd vectors;
  lapack::eigh(dense, energies, vectors);
  return finalize(std::move(energies), std::move(vectors));
}

Eigen::VectorXd eigenvalues(const spin::OperatorMatrix& op) {
  check_hermitian(op.hermiticity_defect());
  if (op.is_real()) return lapack::eigvalsh(op.dense_real());
  return lapack::eigvalsh(op.dense());
}

Eigen::VectorXd eigenvalues(const Eigen::MatrixXcd& dense) {
  check_hermitian((dense - dense.adjoint()).cwiseAbs().maxCoeff());
  if (dense.imag().cwiseAbs().maxCoeff() < 1e-14)
    return lapack::eigvalsh(Eigen::MatrixXd(dense.real()));
  return lapack::eigvalsh(dense);
}

std::vector<std::vector<std::uint64_t>> sector_decompose(int sites) {
  if (sites < 1) throw ConfigError("sector_decompose: need at least one site");
  std::vector<std::vector<std::uint64_t>> sectors(sites + 1);
  const std::uint64_t dim = std::uint64_t(1) << sites;
  for (std::uint64_t b = 0; b < dim; ++b) sectors[sites - popcount(b)].push_back(b);
  return sectors;
}

Spectrum diagonalize_sectors(const spin::OperatorMatrix& op) {
  check_hermitian(op.hermiticity_defect());
  const int n = op.sites;
  const Eigen::Index dim = op.dim();
  for (int k = 0; k < op.mat.outerSize(); ++k)
    for (spin::SparseC::InnerIterator it(op.mat, k); it; ++it)
      if (popcount(std::uint64_t(it.row())) != popcount(std::uint64_t(it.col())))
        throw ConfigError("diagonalize_sectors: operator couples different m sectors");

  const auto sectors = sector_decompose(n);
  std::vector<Eigen::Index> local(dim);
  const bool real = op.is_real();

  struct Entry {
    double energy;
    int sector;
    Eigen::Index col;
  };
  std::vector<Entry> order;
  order.reserve(dim);
  std::vector<Eigen::VectorXd> sec_values(sectors.size());
  std::vector<Eigen::MatrixXcd> sec_vectors(sectors.size());

  for (std::size_t k = 0; k < sectors.size(); ++k) {
    const auto& idx = sectors[k];
    const Eigen::Index m = static_cast<Eigen::Index>(idx.size());
    for (Eigen::Index a = 0; a < m; ++a) local[idx[a]] = a;
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(m, m);
    for (Eigen::Index a = 0; a < m; ++a)
      for (spin::SparseC::InnerIterator it(op.mat, Eigen::Index(idx[a])); it; ++it)
        block(local[std::uint64_t(it.row())], a) = it.value();
    Eigen::VectorXd values;
    if (real) {
      Eigen::MatrixXd vecs;
      lapack::eigh(Eigen::MatrixXd(block.real()), values, vecs);
      sec_vectors[k] = vecs.cast<std::complex<double>>();
    } else {
      Eigen::MatrixXcd vecs;
      lapack::eigh(std::move(block), values, vecs);
      sec_vectors[k] = std::move(vecs);
    }
    sec_values[k] = values;
    for (Eigen::Index c = 0; c < m; ++c) order.push_back({values[c], static_cast<int>(k), c});
  }

  std::sort(order.begin(), order.end(), [](const Entry& a, const Entry& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    if (a.sector != b.sector) return a.sector < b.sector;
    return a.col < b.col;
  });

  Eigen::VectorXd energies(dim);
  Eigen::MatrixXcd vectors = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const Entry& e = order[k];
    energies[k] = e.energy;
    const auto& idx = sectors[e.sector];
    for (std::size_t a = 0; a < idx.size(); ++a)
      vectors(Eigen::Index(idx[a]), k) = sec_vectors[e.sector](Eigen::Index(a), e.col);
  }
  fix_phases(vectors);
  return Spectrum{std::move(energies), std::move(vectors)};
}

std::int64_t tower_count(int sites, int k) {
  if (sites < 2 || sites % 2 != 0) throw ConfigError("tower_count: N must be even");
  if (k < 0 || k > sites / 2) throw ConfigError("tower_count: k out of range");
  auto binom = [](int n, int r) {
    std::int64_t out = 1;
    for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
  };
  if (k == 0) return 1;
  return binom(sites, k) - binom(sites, k - 1);
}

std::int64_t TowerTable::count_label(double l) const {
  return std::count_if(rows.begin(), rows.end(),
                       [&](const TowerRow& r) { return std::abs(r.l - l) < 0.25; });
}

namespace {

/// Rotates a set of (near-degenerate) eigenvector columns into eigenvectors
/// of the Hermitian operator `obs` restricted to their span; returns the
/// per-column expectation values after rotation.
Eigen::VectorXd resolve_block(Eigen::MatrixXcd& vectors, const std::vector<Eigen::Index>& cols,
                              const spin::SparseC& obs) {
  const Eigen::Index g = static_cast<Eigen::Index>(cols.size());
  Eigen::MatrixXcd sub(vectors.rows(), g);
  for (Eigen::Index k = 0; k < g; ++k) sub.col(k) = vectors.col(cols[k]);
  Eigen::MatrixXcd image = obs * sub;
  Eigen::MatrixXcd small = sub.adjoint() * image;
  double offdiag = 0.0;
  for (Eigen::Index a = 0; a < g; ++a)
    for (Eigen::Index b = 0; b < g; ++b)
      if (a != b) offdiag = std::max(offdiag, std::abs(small(a, b)));
  if (offdiag <= 1e-10) return small.diagonal().real();

  small = 0.5 * (small + small.adjoint().eval());  // clean roundoff
  Eigen::VectorXd values;
  Eigen::MatrixXcd rot;
  lapack::eigh(std::move(small), values, rot);
  sub *= rot;
  for (Eigen::Index k = 0; k < g; ++k) vectors.col(cols[k]) = sub.col(k);
  return values;
}

}  // namespace

TowerTable label_towers(Spectrum& h0_spec, const spin::OperatorMatrix& s2, double h) {
  if (!h0_spec.has_vectors()) throw ConfigError("label_towers: spectrum carries no vectors");
  const Eigen::Index dim = h0_spec.vectors.rows();
  if (dim != s2.dim()) throw ConfigError("label_towers: dimension mismatch");
  const int n = s2.sites;

  // diagonal magnetization operator in the computational basis
  spin::SparseC mz(dim, dim);
  {
    std::vector<Eigen::Triplet<spin::Complex>> trips;
    trips.reserve(dim);
    for (Eigen::Index b = 0; b < dim; ++b)
      trips.emplace_back(b, b, spin::Complex(spin::magnetization(std::uint64_t(b), n), 0.0));
    mz.setFromTriplets(trips.begin(), trips.end());
  }

  std::vector<int> m2(dim), l2(dim);
  const Eigen::VectorXd& energies = h0_spec.energies;

  Eigen::Index lo = 0;
  while (lo < dim) {
    Eigen::Index hi = lo + 1;
    while (hi < dim && energies[hi] - energies[hi - 1] <= kDegenerateTol) ++hi;
    std::vector<Eigen::Index> group(hi - lo);
    std::iota(group.begin(), group.end(), lo);

    // resolve s^z inside the degenerate block, then s^2 inside each m slice
    Eigen::VectorXd mvals = resolve_block(h0_spec.vectors, group, mz);
    std::vector<std::pair<int, Eigen::Index>> by_m;
    for (Eigen::Index k = 0; k < Eigen::Index(group.size()); ++k) {
      const double twice = 2.0 * mvals[k];
      const int rounded = static_cast<int>(std::lround(twice));
      if (std::abs(twice - rounded) > 2 * kRoundTol)
        throw SolverError("label_towers: magnetization fails to round near E=" +
                          std::to_string(energies[group[k]]));
      m2[group[k]] = rounded;
      by_m.emplace_back(rounded, group[k]);
    }
    std::sort(by_m.begin(), by_m.end());
    std::size_t a = 0;
    while (a < by_m.size()) {
      std::size_t b = a + 1;
      while (b < by_m.size() && by_m[b].first == by_m[a].first) ++b;
      std::vector<Eigen::Index> slice;
      for (std::size_t q = a; q < b; ++q) slice.push_back(by_m[q].second);
      Eigen::VectorXd s2vals = resolve_block(h0_spec.vectors, slice, s2.mat);
      for (std::size_t q = 0; q < slice.size(); ++q) {
        const double val = s2vals[Eigen::Index(q)];
        const double l = 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * std::max(0.0, val)));
        const int twice = static_cast<int>(std::lround(2.0 * l));
        const double back = 0.5 * twice * (0.5 * twice + 1.0);
        if (std::abs(val - back) > kRoundTol)
          throw SolverError("label_towers: s^2 expectation " + std::to_string(val) +
                            " fails to round");
        if (twice < std::abs(by_m[a].first))
          throw SolverError("label_towers: found l < |m|");
        l2[slice[q]] = twice;
      }
      a = b;
    }
    lo = hi;
  }
  fix_phases(h0_spec.vectors);

  // Thread towers: bucket states by (l, m), walk each tower down from its
  // highest-weight member matching energies at spacing h.
  struct Bucket {
    std::vector<Eigen::Index> states;  // sorted by (energy, index)
    std::vector<char> used;
  };
  std::map<std::pair<int, int>, Bucket> buckets;
  for (Eigen::Index k = 0; k < dim; ++k) buckets[{l2[k], m2[k]}].states.push_back(k);
  for (auto& [key, bucket] : buckets) {
    std::sort(bucket.states.begin(), bucket.states.end(), [&](Eigen::Index x, Eigen::Index y) {
      if (energies[x] != energies[y]) return energies[x] < energies[y];
      return x < y;
    });
    bucket.used.assign(bucket.states.size(), 0);
  }

  struct Tower {
    int l2;
    Eigen::Index head;
    double head_energy;
    double iso_energy;  // head energy minus the l*h Zeeman part; h-independent
    std::vector<Eigen::Index> members;  // m = l down to -l
  };
  std::vector<Tower> towers;
  for (auto& [key, bucket] : buckets) {
    const auto [tl2, tm2] = key;
    if (tm2 != tl2) continue;  // only highest-weight buckets seed towers
    for (Eigen::Index head : bucket.states) {
      Tower tower{tl2, head, energies[head], energies[head] - 0.5 * tl2 * h, {head}};
      for (int m = tl2 - 2; m >= -tl2; m -= 2) {
        const double target = tower.head_energy - 0.5 * (tl2 - m) * h;
        auto it = buckets.find({tl2, m});
        if (it == buckets.end())
          throw SolverError("label_towers: no states at l2=" + std::to_string(tl2) +
                            " m2=" + std::to_string(m));
        Bucket& down = it->second;
        bool found = false;
        for (std::size_t q = 0; q < down.states.size(); ++q) {
          if (down.used[q]) continue;
          if (std::abs(energies[down.states[q]] - target) <= kDegenerateTol) {
            down.used[q] = 1;
            tower.members.push_back(down.states[q]);
            found = true;
            break;
          }
        }
        if (!found)
          throw SolverError("label_towers: tower threading failure at l2=" +
                            std::to_string(tl2) + " m2=" + std::to_string(m) +
                            " (no partner at spacing h)");
      }
      towers.push_back(std::move(tower));
    }
  }

  // Tower ids follow the isotropic part of the head energy so that the
  // assignment does not depend on h; ties go to larger l first.
  std::sort(towers.begin(), towers.end(), [](const Tower& a, const Tower& b) {
    if (std::abs(a.iso_energy - b.iso_energy) > kDegenerateTol)
      return a.iso_energy < b.iso_energy;
    if (a.l2 != b.l2) return a.l2 > b.l2;
    return a.head < b.head;
  });

  TowerTable table;
  table.sites = n;
  table.h = h;
  table.rows.resize(dim);
  for (std::size_t t = 0; t < towers.size(); ++t)
    for (Eigen::Index s : towers[t].members)
      table.rows[s] = TowerRow{static_cast<int>(s), static_cast<int>(t) + 1, 0.5 * l2[s],
                               0.5 * m2[s], energies[s]};
  return table;
}

double first_tower_energy(const cluster::CouplingGraph& graph, double h, int p) {
  return 0.125 * cluster::coupling_sum(graph) + (p - 0.5 * graph.sites) * h;
}

FirstTower first_tower(const cluster::CouplingGraph& graph, double h) {
  const int n = graph.sites;
  const Eigen::Index dim = Eigen::Index(1) << n;
  const spin::OperatorMatrix raise = spin::tower_op(n);
  FirstTower tower;
  tower.states = Eigen::MatrixXcd::Zero(dim, n + 1);
  tower.energies.resize(n + 1);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v[0] = 1.0;  // all-down state
  tower.states.col(0) = v;
  tower.energies[0] = first_tower_energy(graph, h, 0);
  for (int p = 1; p <= n; ++p) {
    v = raise.mat * v;
    const double norm = v.norm();
    if (norm < 1e-12) throw SolverError("first_tower: ladder terminated early");
    v /= norm;
    tower.states.col(p) = v;
    tower.energies[p] = first_tower_energy(graph, h, p);
  }
  return tower;
}

void write_labeled_csv(const std::string& path, const TowerTable& table) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << "index,energy,m,l,n\n";
  char buf[128];
  for (const TowerRow& r : table.rows) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%d\n", r.state, r.energy, r.m, r.l,
                  r.tower);
    out << buf;
  }
}

void write_vector_archive(const std::string& path, const Eigen::MatrixXcd& vectors) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  const std::uint64_t dim = static_cast<std::uint64_t>(vectors.rows());
  out.write(reinterpret_cast<const char*>(&dim), sizeof dim);
  // column-major (re, im) pairs; little-endian host assumed
  out.write(reinterpret_cast<const char*>(vectors.data()),
            static_cast<std::streamsize>(sizeof(std::complex<double>) * vectors.size()));
}

Eigen::MatrixXcd read_vector_archive(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::uint64_t dim = 0;
  in.read(reinterpret_cast<char*>(&dim), sizeof dim);
  Eigen::MatrixXcd vectors(dim, dim);
  in.read(reinterpret_cast<char*>(vectors.data()),
          static_cast<std::streamsize>(sizeof(std::complex<double>) * vectors.size()));
  if (!in) throw ConfigError("vector archive truncated: '" + path + "'");
  return vectors;
}

}  // namespace scarlab::spectral
