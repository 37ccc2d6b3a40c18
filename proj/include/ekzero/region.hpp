#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ekzero/polynomial.hpp"

namespace ekzero {

enum class Openness { closed_inclusion, open_exclusion };

struct Disk {
  Complex center{0.0, 0.0};
  double radius = 0.0;
  Openness openness = Openness::closed_inclusion;
};

// Closed membership: |z - c| <= r + tol. Used for inclusion disks and counts.
bool contains(const Disk& d, Complex z, double tol = 1e-9);
// Strict interior: |z - c| < r - tol. A point numerically on the boundary of
// an open exclusion disk is not counted as inside.
bool strictly_inside(const Disk& d, Complex z, double tol = 1e-9);

// D(a, gamma) = { |z + a| <= a + gamma }: closed inclusion disk, center -a.
Disk disk_D(double a, double gamma);

// Open exclusion disk with center gamma^2/(a + 2 gamma) and radius
// gamma (a + gamma) / (a + 2 gamma).
Disk disk_Delta(double a, double gamma);

// For R > 1/|a|, the set { |z + a| <= |a| R |z| } is the closed exterior of a
// disk; returns that open disk (center a / (|a|^2 R^2 - 1), radius
// |a|^2 R / (|a|^2 R^2 - 1)).
Disk recip_exterior(Complex a, double R);

// One closed disk of radius R^(1/m) per center; covers the lemniscate
// { prod_j |z - c_j| <= R }.
std::vector<Disk> lemniscate_union(const std::vector<Complex>& centers, double R, int m);

// Entry (i, j) true iff |c_i - c_j| > r_i + r_j strictly (with an additive
// tolerance 1e-12 * scale, so tangent disks are not disjoint). Diagonal false.
std::vector<std::vector<bool>> pairwise_disjoint(const std::vector<Disk>& disks);

struct Annulus {
  double inner = 0.0;
  double outer = 0.0;
  Annulus(double inner_radius, double outer_radius);
};

// A zero-count certificate entry: the union of the listed inclusion-disk
// indices contains exactly `count` zeros.
struct CountGroup {
  std::vector<int> disks;
  int count = 0;
};

struct RegionReport {
  std::string theorem;
  std::map<std::string, double> parameters;
  std::vector<Disk> inclusion;
  std::vector<Disk> exclusion;
  std::vector<std::vector<bool>> disjoint;  // over inclusion disks
  std::optional<std::vector<CountGroup>> counts;
  // True when the origin-centered disk alone already contains all zeros
  // (its radius passes the substitution test against the Cauchy radius),
  // making the remaining disks redundant.
  bool others_redundant = false;
};

}  // namespace ekzero
