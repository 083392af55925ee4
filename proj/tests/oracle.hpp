#pragma once

// Straightforward dense reference implementation used only by the tests.
// Everything is built from the raw definitions with Kronecker products and
// solved with Eigen's SelfAdjointEigenSolver, independent of the library's
// sparse assembly and LAPACK path.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "scarlab/cluster.hpp"
#include "scarlab/fields.hpp"

namespace oracle {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

MatrixXcd site_operator(int sites, int site, const Eigen::Matrix2cd& local);
MatrixXcd spin_x(int sites, int site);
MatrixXcd spin_y(int sites, int site);
MatrixXcd spin_z(int sites, int site);

MatrixXcd h0(const scarlab::cluster::CouplingGraph& graph, double h);
MatrixXcd hran(const scarlab::spin::FieldRealization& real);
MatrixXcd total_s2(int sites);
MatrixXcd total_sz(int sites);

struct Eigensystem {
  VectorXd values;
  MatrixXcd vectors;
};

Eigensystem eigh(const MatrixXcd& m);

struct LabeledLevel {
  double energy;
  double l;
  double m;
};

/// Simultaneous (E, l, m) labels of an isotropic H0: diagonalizes
/// H0 + a s^2 + b s^z with generic small a, b to break the degeneracies,
/// then reads each quantum number off as an expectation value.
std::vector<LabeledLevel> labeled_levels(const scarlab::cluster::CouplingGraph& graph, double h);

/// Mean adjacent-gap ratio from the bare definition.
double mean_gap_ratio(std::vector<double> levels, double degeneracy_cut);

/// f(E) by the double loop over eigenstates and tower members.
std::vector<double> scar_profile(const Eigensystem& perturbed, const MatrixXcd& tower_states,
                                 const std::vector<double>& grid, double window);

/// F(t) built per time point from the full evolution operator.
std::vector<double> fidelity(const Eigensystem& eig, const VectorXcd& psi0,
                             const std::vector<double>& times);

}  // namespace oracle
