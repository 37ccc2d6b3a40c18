#pragma once

#include <utility>

#include "ekzero/region.hpp"

namespace ekzero {

// Independent root oracle used to verify every bound and region. Kept out of
// the bound computations themselves: the regions stay explicit functions of
// the coefficients.
struct RootSet {
  CVec roots;                // length = degree
  double max_residual = 0.0; // max_i |p(z_i)| / sum_j |a_j| |z_i|^j
};

// Simultaneous (Ehrlich/Aberth-style) iteration from a fixed initial circle,
// polished by Newton. Deterministic given the coefficients.
RootSet all_roots(const CVec& coeffs);
RootSet all_roots(const Vec& coeffs);
RootSet all_roots(const Polynomial& p);
RootSet all_roots(const SignedPolynomial& q);

std::pair<double, double> moduli_extremes(const RootSet& rs);

// Number of roots inside the disk: closed disks use |z - c| <= r + tol,
// open disks |z - c| < r - tol.
int count_in_disk(const RootSet& rs, const Disk& d, double tol = 1e-9);

}  // namespace ekzero
