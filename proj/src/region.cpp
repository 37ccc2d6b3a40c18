#include "ekzero/region.hpp"

#include <cmath>

namespace ekzero {

bool contains(const Disk& d, Complex z, double tol) {
  return std::abs(z - d.center) <= d.radius + tol;
}

bool strictly_inside(const Disk& d, Complex z, double tol) {
  return std::abs(z - d.center) < d.radius - tol;
}

Disk disk_D(double a, double gamma) {
  if (!(a >= 0.0) || !(gamma > 0.0) || !std::isfinite(a) || !std::isfinite(gamma)) {
    throw validation_error(errc::hypothesis_violated, "disk_D requires a >= 0 and gamma > 0");
  }
  return Disk{Complex(-a, 0.0), a + gamma, Openness::closed_inclusion};
}

Disk disk_Delta(double a, double gamma) {
  if (!(a > 0.0) || !(gamma > 0.0) || !std::isfinite(a) || !std::isfinite(gamma)) {
    throw validation_error(errc::hypothesis_violated, "disk_Delta requires a > 0 and gamma > 0");
  }
  const double denom = a + 2.0 * gamma;
  return Disk{Complex(gamma * gamma / denom, 0.0), gamma * (a + gamma) / denom,
              Openness::open_exclusion};
}

Disk recip_exterior(Complex a, double R) {
  const double mod_a = std::abs(a);
  if (!(R > 0.0) || mod_a == 0.0 || !(R > 1.0 / mod_a)) {
    throw validation_error(errc::hypothesis_violated, "recip_exterior requires R > 1/|a|");
  }
  const double denom = mod_a * mod_a * R * R - 1.0;
  return Disk{a / denom, mod_a * mod_a * R / denom, Openness::open_exclusion};
}

std::vector<Disk> lemniscate_union(const std::vector<Complex>& centers, double R, int m) {
  if (centers.empty() || m != static_cast<int>(centers.size())) {
    throw validation_error(errc::hypothesis_violated,
                           "lemniscate_union: m must equal the number of centers (>= 1)");
  }
  if (!(R >= 0.0)) {
    throw validation_error(errc::hypothesis_violated, "lemniscate_union requires R >= 0");
  }
  double radius;
  switch (m) {
    case 1: radius = R; break;
    case 2: radius = std::sqrt(R); break;
    case 3: radius = std::cbrt(R); break;
    default: radius = std::pow(R, 1.0 / m); break;
  }
  std::vector<Disk> disks;
  disks.reserve(centers.size());
  for (const Complex& c : centers) disks.push_back(Disk{c, radius, Openness::closed_inclusion});
  return disks;
}

std::vector<std::vector<bool>> pairwise_disjoint(const std::vector<Disk>& disks) {
  const std::size_t n = disks.size();
  std::vector<std::vector<bool>> out(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dist = std::abs(disks[i].center - disks[j].center);
      const double sum = disks[i].radius + disks[j].radius;
      const bool disjoint = dist > sum + 1e-12 * (dist + sum);
      out[i][j] = out[j][i] = disjoint;
    }
  }
  return out;
}

Annulus::Annulus(double inner_radius, double outer_radius)
    : inner(inner_radius), outer(outer_radius) {
  if (!(0.0 <= inner) || !(inner <= outer)) {
    throw validation_error(errc::hypothesis_violated, "annulus requires 0 <= inner <= outer");
  }
}

}  // namespace ekzero
