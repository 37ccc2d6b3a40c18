#pragma once

#include <cmath>
#include <random>

#include "ekzero/polynomial.hpp"

namespace testutil {

inline bool approx(double a, double b, double rtol = 1e-12) {
  return std::abs(a - b) <= rtol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool near(double a, double b, double atol) { return std::abs(a - b) <= atol; }

// Strictly inside (lo, hi), like the bench ensembles.
inline ekzero::Polynomial random_poly(std::mt19937_64& rng, int degree, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  ekzero::Vec c(degree + 1);
  for (Eigen::Index j = 0; j <= degree; ++j) {
    double v = dist(rng);
    if (v <= lo) v = std::nextafter(lo, hi);
    c(j) = v;
  }
  return ekzero::Polynomial(std::move(c));
}

inline ekzero::Polynomial p1() { return ekzero::make_polynomial({3, 2, 1, 4, 1, 2}); }
inline ekzero::Polynomial p2() { return ekzero::make_polynomial({1, 2, 3, 2, 1, 1}); }
inline ekzero::Polynomial p3() { return ekzero::make_polynomial({7, 6, 3, 2, 2, 4, 1}); }
inline ekzero::Polynomial p4() { return ekzero::make_polynomial({1, 8, 4, 6, 5, 9, 1}); }

}  // namespace testutil

#include "ekzero/region.hpp"
#include "ekzero/roots.hpp"
#include "ekzero/theorems.hpp"

namespace testutil {

// Oracle-side verification of a region report: every root inside the
// inclusion union, none strictly inside an exclusion disk, and any count
// certificate exact.
inline bool region_sound(const ekzero::RegionReport& r, const ekzero::RootSet& rs) {
  using namespace ekzero;
  for (Eigen::Index i = 0; i < rs.roots.size(); ++i) {
    const Complex z = rs.roots(i);
    bool inside = false;
    for (const Disk& d : r.inclusion) {
      inside = inside || contains(d, z, 1e-8 * std::max(1.0, d.radius));
    }
    if (!inside) return false;
    for (const Disk& d : r.exclusion) {
      if (strictly_inside(d, z, 1e-9)) return false;
    }
  }
  if (r.counts) {
    int total = 0;
    for (const CountGroup& g : *r.counts) {
      int in_group = 0;
      for (Eigen::Index i = 0; i < rs.roots.size(); ++i) {
        for (int disk_idx : g.disks) {
          if (contains(r.inclusion[disk_idx], rs.roots(i), 1e-9)) {
            ++in_group;
            break;
          }
        }
      }
      if (in_group != g.count) return false;
      total += g.count;
    }
    if (total != static_cast<int>(rs.roots.size())) return false;
  }
  return true;
}

inline bool interval_sound(const ekzero::BoundInterval& b, const ekzero::RootSet& rs) {
  const auto [lo, hi] = ekzero::moduli_extremes(rs);
  const double tol = 1e-8 * (1.0 + b.upper);
  return lo >= b.lower - tol && hi <= b.upper + tol;
}

}  // namespace testutil
