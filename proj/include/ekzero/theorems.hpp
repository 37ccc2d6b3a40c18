#pragma once

#include "ekzero/cauchy.hpp"
#include "ekzero/region.hpp"

namespace ekzero {

// All zero moduli of p lie in [lower, upper].
struct BoundInterval {
  double lower = 0.0;
  double upper = 0.0;
  std::string theorem;
};

Annulus as_annulus(const BoundInterval& b);

// Multiplier selections. Each factory computes the parameter set that makes
// every nonleading coefficient of m(z) * p(z) nonpositive, except for the
// protected top coefficients the corresponding construction allows.
MultiplierSpec ek_multiplier(const Polynomial& p);                     // z - g
MultiplierSpec thm32_multiplier(const Polynomial& p);                  // z^2 - g1 z - g0
MultiplierSpec thm33_multiplier(const Polynomial& p, int choice);      // cubic, choice 1 or 2
MultiplierSpec gap2_multiplier(const Polynomial& p);                   // z^2 - max_j a_j/a_{j+2}
MultiplierSpec thm42_multiplier(const Polynomial& p, double eps);      // cubic, also thm52
MultiplierSpec cor41_multiplier(const Polynomial& p);                  // cubic, g2 = 0; also cor51
MultiplierSpec thm43_multiplier(const Polynomial& p);                  // z^4 - alpha z^2 - beta
MultiplierSpec gap3_multiplier(const Polynomial& p);                   // z^3 - max_j a_j/a_{j+3}
MultiplierSpec thm61_multiplier(const Polynomial& p, double eps);      // z^3 - g1 z - g0
MultiplierSpec cor61_multiplier(const Polynomial& p);                  // z^3 - g0

// Interval bounds (lower bounds come from the reversed polynomial).
BoundInterval cauchy_interval(const Polynomial& p);        // [1/s1(reverse), s1]
BoundInterval ek_bounds(const Polynomial& p);
BoundInterval thm32_bounds(const Polynomial& p);
BoundInterval thm33_bounds(const Polynomial& p, int choice);

// Single inclusion disk centered at -a_{n-1}/a_n (or its eps-scaled variant)
// plus one open exclusion disk derived from the reversed polynomial.
RegionReport thm41_disks(const Polynomial& p);
RegionReport thm42_disks(const Polynomial& p, double eps);
RegionReport cor41_disks(const Polynomial& p);
RegionReport thm43_disks(const Polynomial& p);

// Unions of two or three inclusion disks of equal radius, with zero-count
// certificates when the disjointness hypotheses hold.
RegionReport thm51_region(const Polynomial& p);
RegionReport thm52_region(const Polynomial& p, double eps);
RegionReport cor51_region(const Polynomial& p);
RegionReport thm53_region(const Polynomial& p);
RegionReport thm61_region(const Polynomial& p, double eps);
RegionReport cor61_region(const Polynomial& p);

}  // namespace ekzero
