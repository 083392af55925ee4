#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "scarlab/cluster.hpp"
#include "scarlab/spin_ops.hpp"

namespace scarlab::spectral {

/// Full eigensystem of a Hermitian operator: ascending energies with
/// orthonormal eigenvectors (column k belongs to energies[k]). Values-only
/// solves leave `vectors` empty.
struct Spectrum {
  Eigen::VectorXd energies;
  Eigen::MatrixXcd vectors;

  bool has_vectors() const { return vectors.size() > 0; }
  /// Real part of the eigenvector matrix; valid when the solve was real.
  Eigen::MatrixXd vectors_real() const { return vectors.real(); }
};

/// Dense Hermitian eigensolution with deterministic ordering: ascending
/// energies, eigenvector phases fixed (largest-magnitude entry real
/// positive), degenerate blocks sorted by a fixed entrywise tie-break.
/// Real-symmetric inputs are routed through the real solver.
Spectrum diagonalize(const spin::OperatorMatrix& op);
Spectrum diagonalize(const Eigen::MatrixXcd& dense);

/// Eigenvalues only (ascending); much lighter than diagonalize.
Eigen::VectorXd eigenvalues(const spin::OperatorMatrix& op);
Eigen::VectorXd eigenvalues(const Eigen::MatrixXcd& dense);

/// Solves a magnetization-conserving operator sector by sector and merges
/// the blocks into one deterministic full Spectrum. Errors if the operator
/// couples different m sectors.
Spectrum diagonalize_sectors(const spin::OperatorMatrix& op);

/// Basis-state indices per m sector, k = 0..N with m = N/2 - k, so entry k
/// holds the C(N,k) states with N-k bits set.
std::vector<std::vector<std::uint64_t>> sector_decompose(int sites);

/// Number of towers with total spin l = N/2 - k:
/// 1 for k = 0, C(N,k) - C(N,k-1) otherwise. Requires even N, 0 <= k <= N/2.
std::int64_t tower_count(int sites, int k);

struct TowerRow {
  int state = 0;    // index into the Spectrum
  int tower = 0;    // 1-based tower id
  double l = 0.0;   // total-spin quantum number
  double m = 0.0;   // magnetization
  double energy = 0.0;
};

struct TowerTable {
  int sites = 0;
  double h = 0.0;
  std::vector<TowerRow> rows;  // one per eigenstate, ordered by state index

  std::int64_t count_label(double l) const;
};

/// Labels every H0 eigenstate with (n, l, m, E). Rotates eigenvectors inside
/// degenerate blocks so that each column is a simultaneous eigenvector of
/// s^z and s^2 (allowed because both commute with an isotropic H0), then
/// threads towers by matching energies across adjacent m at spacing h.
/// Tower ids are assigned by ascending highest-weight energy, ties broken
/// by l descending.
TowerTable label_towers(Spectrum& h0_spec, const spin::OperatorMatrix& s2, double h);

/// The l = N/2 tower built explicitly: repeated Q^dag on the all-down state
/// with numerical renormalization at each rung. Energies follow the closed
/// form E1(p) = coupling_sum/8 + (p - N/2) h for p = 0..N.
struct FirstTower {
  Eigen::MatrixXcd states;   // dim x (N+1), column p
  Eigen::VectorXd energies;  // N+1 entries
};

FirstTower first_tower(const cluster::CouplingGraph& graph, double h);
double first_tower_energy(const cluster::CouplingGraph& graph, double h, int p);

/// CSV with columns (index, energy, m, l, n).
void write_labeled_csv(const std::string& path, const TowerTable& table);

/// Binary eigenvector archive: little-endian uint64 dimension header, then
/// column-major complex entries as (re, im) pairs of 64-bit floats.
void write_vector_archive(const std::string& path, const Eigen::MatrixXcd& vectors);
Eigen::MatrixXcd read_vector_archive(const std::string& path);

}  // namespace scarlab::spectral
