#include "ekzero/theorems.hpp"

#include <cassert>
#include <cmath>

namespace ekzero {

namespace {

double max_gap_ratio(const Vec& a, Eigen::Index gap) {
  const Eigen::Index m = a.size() - gap;
  return (a.head(m).array() / a.tail(m).array()).maxCoeff();
}

double min_gap_ratio(const Vec& a, Eigen::Index gap) {
  const Eigen::Index m = a.size() - gap;
  return (a.head(m).array() / a.tail(m).array()).minCoeff();
}

void require_degree(const Polynomial& p, Eigen::Index min_degree, const char* who) {
  if (p.degree() < min_degree) {
    throw validation_error(errc::too_short, std::string(who) + " requires a higher degree");
  }
}

void require_eps(double eps) {
  if (!(eps > 0.0) || !(eps <= 1.0) || !std::isfinite(eps)) {
    throw validation_error(errc::epsilon_out_of_range, "eps must lie in (0, 1]");
  }
}

// Debug-mode check of the central sign condition: every nonleading coefficient
// of m(z) * p(z) below the protected top block must be nonpositive.
void check_sign_condition(const Polynomial& p, const MultiplierSpec& m, int protected_top) {
#ifndef NDEBUG
  assert(nonleading_sign_report(multiply(p, m), protected_top).all_nonpositive);
#else
  (void)p;
  (void)m;
  (void)protected_top;
#endif
}

// Open exclusion disk for p from the inclusion disk of the reversed
// polynomial: the reciprocals of the zeros lie in |zeta + a_rev| <= a_rev +
// rho_rev, which transforms into |z + 1/a_rev| <= (1/a_rev)(a_rev + rho_rev)|z|.
Disk exclusion_from_reverse(double a_rev, double rho_rev) {
  return recip_exterior(Complex(1.0 / a_rev, 0.0), a_rev + rho_rev);
}

// Stable roots of z^2 + b z + c (b > 0); first root has the larger real part.
std::pair<Complex, Complex> quadratic_pair(double b, double c) {
  const double disc = b * b - 4.0 * c;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    const double low = -0.5 * (b + s);
    const double high = (low != 0.0) ? c / low : -0.5 * (b - s);
    return {Complex(high, 0.0), Complex(low, 0.0)};
  }
  const double im = 0.5 * std::sqrt(-disc);
  return {Complex(-0.5 * b, im), Complex(-0.5 * b, -im)};
}

bool is_real(Complex z) { return z.imag() == 0.0; }

}  // namespace

Annulus as_annulus(const BoundInterval& b) { return Annulus(b.lower, b.upper); }

MultiplierSpec ek_multiplier(const Polynomial& p) {
  require_degree(p, 1, "ek");
  return MultiplierSpec::linear(max_gap_ratio(p.coeffs(), 1));
}

MultiplierSpec thm32_multiplier(const Polynomial& p) {
  require_degree(p, 2, "thm32");
  const Vec& a = p.coeffs();
  const Eigen::Index n = p.degree();
  const double g1 = a(n - 1) / a(n);
  double g0 = 0.0;
  for (Eigen::Index j = 0; j <= n - 2; ++j) {
    g0 = std::max(g0, (a(j) - g1 * a(j + 1)) / a(j + 2));
  }
  return MultiplierSpec::quadratic(g0, g1);
}

MultiplierSpec thm33_multiplier(const Polynomial& p, int choice) {
  require_degree(p, 3, "thm33");
  const Vec& a = p.coeffs();
  const Eigen::Index n = p.degree();
  if (choice == 1) {
    const double g2 = std::max(a(n - 1) / a(n), a(n - 2) / a(n - 1));
    double g0 = 0.0;
    for (Eigen::Index j = 0; j <= n - 3; ++j) {
      g0 = std::max(g0, (a(j) - g2 * a(j + 1)) / a(j + 3));
    }
    return MultiplierSpec::cubic(g0, 0.0, g2);
  }
  if (choice == 2) {
    const double g2 = a(n - 1) / a(n);
    const double g1 = (a(n - 2) - g2 * a(n - 1)) / a(n);
    double g0 = std::max({0.0, g1 * a(0) / (-a(1)), (g2 * a(0) + g1 * a(1)) / (-a(2))});
    for (Eigen::Index j = 0; j <= n - 3; ++j) {
      g0 = std::max(g0, (a(j) - g2 * a(j + 1) - g1 * a(j + 2)) / a(j + 3));
    }
    return MultiplierSpec::cubic(g0, g1, g2);
  }
  throw validation_error(errc::hypothesis_violated, "thm33 choice must be 1 or 2");
}

MultiplierSpec gap2_multiplier(const Polynomial& p) {
  require_degree(p, 2, "gap2");
  return MultiplierSpec::quadratic(max_gap_ratio(p.coeffs(), 2), 0.0);
}

MultiplierSpec thm42_multiplier(const Polynomial& p, double eps) {
  require_degree(p, 3, "thm42");
  require_eps(eps);
  const Vec& a = p.coeffs();
  const Eigen::Index n = p.degree();
  const double g2 = (1.0 - eps) * a(n - 1) / a(n);
  const double g1 = (a(n - 2) - g2 * a(n - 1)) / a(n);
  double g0 = std::max({0.0, g1 * a(0) / (-a(1)), (g2 * a(0) + g1 * a(1)) / (-a(2))});
  for (Eigen::Index j = 0; j <= n - 3; ++j) {
    g0 = std::max(g0, (a(j) - g2 * a(j + 1) - g1 * a(j + 2)) / a(j + 3));
  }
  return MultiplierSpec::cubic(g0, g1, g2);
}

MultiplierSpec cor41_multiplier(const Polynomial& p) {
  require_degree(p, 3, "cor41");
  const Vec& a = p.coeffs();
  const Eigen::Index n = p.degree();
  const double g1 = a(n - 2) / a(n);
  double g0 = 0.0;
  for (Eigen::Index j = 0; j <= n - 3; ++j) {
    g0 = std::max(g0, (a(j) - g1 * a(j + 2)) / a(j + 3));
  }
  return MultiplierSpec::cubic(g0, g1, 0.0);
}

MultiplierSpec thm43_multiplier(const Polynomial& p) {
  require_degree(p, 4, "thm43");
  const Vec& a = p.coeffs();
  const Eigen::Index n = p.degree();
  const double alpha = std::max(a(n - 2) / a(n), a(n - 3) / a(n - 1));
  double beta = 0.0;
  for (Eigen::Index j = 0; j <= n - 4; ++j) {
    beta = std::max(beta, (a(j) - alpha * a(j + 2)) / a(j + 4));
  }
  return MultiplierSpec::even_quartic(alpha, beta);
}

MultiplierSpec gap3_multiplier(const Polynomial& p) {
  require_degree(p, 3, "gap3");
  return MultiplierSpec::cubic(max_gap_ratio(p.coeffs(), 3), 0.0, 0.0);
}

MultiplierSpec thm61_multiplier(const Polynomial& p, double eps) {
  require_degree(p, 3, "thm61");
  require_eps(eps);
  const Vec& a = p.coeffs();
  const Eigen::Index n = p.degree();
  const double g1 = (1.0 - eps) * a(n - 2) / a(n);
  double g0 = 0.0;
  for (Eigen::Index j = 0; j <= n - 3; ++j) {
    g0 = std::max(g0, (a(j) - g1 * a(j + 2)) / a(j + 3));
  }
  return MultiplierSpec::cubic(g0, g1, 0.0);
}

MultiplierSpec cor61_multiplier(const Polynomial& p) {
  require_degree(p, 3, "cor61");
  return MultiplierSpec::cubic(max_gap_ratio(p.coeffs(), 3), 0.0, 0.0);
}

// --- interval bounds ------------------------------------------------------

namespace {

double ek_upper(const Polynomial& p) {
  const MultiplierSpec m = ek_multiplier(p);
  check_sign_condition(p, m, 1);
  return unique_positive_root(m);
}

double thm32_upper(const Polynomial& p) {
  const MultiplierSpec m = thm32_multiplier(p);
  check_sign_condition(p, m, 1);
  return unique_positive_root(m);
}

double thm33_upper(const Polynomial& p, int choice) {
  const MultiplierSpec m = thm33_multiplier(p, choice);
  check_sign_condition(p, m, 1);
  return unique_positive_root(m);
}

}  // namespace

BoundInterval cauchy_interval(const Polynomial& p) {
  return BoundInterval{1.0 / cauchy_radius(reverse(p), 1).value, cauchy_radius(p, 1).value,
                       "cauchy"};
}

BoundInterval ek_bounds(const Polynomial& p) {
  return BoundInterval{1.0 / ek_upper(reverse(p)), ek_upper(p), "ek"};
}

BoundInterval thm32_bounds(const Polynomial& p) {
  return BoundInterval{1.0 / thm32_upper(reverse(p)), thm32_upper(p), "thm32"};
}

BoundInterval thm33_bounds(const Polynomial& p, int choice) {
  return BoundInterval{1.0 / thm33_upper(reverse(p), choice), thm33_upper(p, choice),
                       choice == 1 ? "thm33-1" : "thm33-2"};
}

// --- single-disk regions ---------------------------------------------------

namespace {

// Shared layout of thm41/thm42/cor41/thm43: one inclusion disk from p, one
// exclusion disk from the same machinery applied to reverse(p).
RegionReport single_disk_report(std::string tag, const Polynomial& p, double eps,
                                const MultiplierSpec& m, const MultiplierSpec& m_rev,
                                int protected_top) {
  const Vec& a = p.coeffs();
  const Eigen::Index n = p.degree();
  check_sign_condition(p, m, protected_top);
  check_sign_condition(reverse(p), m_rev, protected_top);

  const double mu1 = unique_positive_root(m);
  const double rho_rev = unique_positive_root(m_rev);
  const double a_fwd = eps * (a(n - 1) / a(n));
  const double a_rev = eps * (a(1) / a(0));

  RegionReport r;
  r.theorem = std::move(tag);
  r.parameters["mu1"] = mu1;
  r.parameters["mu2"] = 1.0 / rho_rev;
  r.inclusion = {disk_D(a_fwd, mu1)};
  r.exclusion = {exclusion_from_reverse(a_rev, rho_rev)};
  r.disjoint = pairwise_disjoint(r.inclusion);
  return r;
}

}  // namespace

RegionReport thm41_disks(const Polynomial& p) {
  require_degree(p, 2, "thm41");
  RegionReport r = single_disk_report("thm41", p, 1.0, gap2_multiplier(p),
                                      gap2_multiplier(reverse(p)), 2);
  r.parameters["mu1"] = std::sqrt(max_gap_ratio(p.coeffs(), 2));
  r.parameters["mu2"] = std::sqrt(min_gap_ratio(p.coeffs(), 2));
  return r;
}

RegionReport thm42_disks(const Polynomial& p, double eps) {
  const MultiplierSpec m = thm42_multiplier(p, eps);
  const MultiplierSpec m_rev = thm42_multiplier(reverse(p), eps);
  RegionReport r = single_disk_report("thm42", p, eps, m, m_rev, 2);
  r.parameters["eps"] = eps;
  r.parameters["gamma0"] = m.monic_coeffs()(0);
  r.parameters["gamma1"] = m.monic_coeffs()(1);
  r.parameters["gamma2"] = m.monic_coeffs()(2);
  return r;
}

RegionReport cor41_disks(const Polynomial& p) {
  const MultiplierSpec m = cor41_multiplier(p);
  RegionReport r = single_disk_report("cor41", p, 1.0, m, cor41_multiplier(reverse(p)), 2);
  r.parameters["gamma0"] = m.monic_coeffs()(0);
  r.parameters["gamma1"] = m.monic_coeffs()(1);
  return r;
}

RegionReport thm43_disks(const Polynomial& p) {
  const MultiplierSpec m = thm43_multiplier(p);
  RegionReport r = single_disk_report("thm43", p, 1.0, m, thm43_multiplier(reverse(p)), 2);
  r.parameters["alpha"] = m.monic_coeffs()(2);
  r.parameters["beta"] = m.monic_coeffs()(0);
  return r;
}

// --- multi-disk regions ----------------------------------------------------

namespace {

void attach_two_disk_counts(RegionReport& r, Eigen::Index n) {
  r.disjoint = pairwise_disjoint(r.inclusion);
  if (r.disjoint[0][1]) {
    r.counts = std::vector<CountGroup>{{{0}, static_cast<int>(n) - 1}, {{1}, 1}};
  }
}

void flag_redundant_others(RegionReport& r, const Polynomial& p) {
  // Substitution test: a nonnegative left-side value at the origin-disk
  // radius certifies radius >= s1, so that disk already holds all zeros.
  r.others_redundant = cauchy_lhs(p.coeffs(), 1, r.inclusion[0].radius) >= 0.0;
}

}  // namespace

RegionReport thm51_region(const Polynomial& p) {
  require_degree(p, 2, "thm51");
  const Vec& a = p.coeffs();
  const Eigen::Index n = p.degree();
  const MultiplierSpec m = gap2_multiplier(p);
  check_sign_condition(p, m, 2);
  const double mu = unique_positive_root(m);
  const double ratio = a(n - 1) / a(n);
  const double R = mu * mu + ratio * mu;

  RegionReport r;
  r.theorem = "thm51";
  r.parameters["mu"] = mu;
  r.parameters["R"] = R;
  r.inclusion = lemniscate_union({Complex(0.0), Complex(-ratio)}, R, 2);
  attach_two_disk_counts(r, n);
  flag_redundant_others(r, p);
  return r;
}

namespace {

RegionReport two_disk_cubic_region(std::string tag, const Polynomial& p, double eps,
                                   const MultiplierSpec& m) {
  const Vec& a = p.coeffs();
  const Eigen::Index n = p.degree();
  check_sign_condition(p, m, 3);
  const double mu = unique_positive_root(m);
  const double ratio = eps * (a(n - 1) / a(n));
  const double R = mu * mu * mu + ratio * mu * mu;

  RegionReport r;
  r.theorem = std::move(tag);
  r.parameters["mu"] = mu;
  r.parameters["R"] = R;
  // Lemniscate foci with multiplicity {0, 0, -ratio}; the duplicate origin
  // focus collapses to a single reported disk.
  const auto disks = lemniscate_union({Complex(0.0), Complex(0.0), Complex(-ratio)}, R, 3);
  r.inclusion = {disks[0], disks[2]};
  attach_two_disk_counts(r, n);
  flag_redundant_others(r, p);
  return r;
}

}  // namespace

RegionReport thm52_region(const Polynomial& p, double eps) {
  RegionReport r = two_disk_cubic_region("thm52", p, eps, thm42_multiplier(p, eps));
  r.parameters["eps"] = eps;
  return r;
}

RegionReport cor51_region(const Polynomial& p) {
  return two_disk_cubic_region("cor51", p, 1.0, cor41_multiplier(p));
}

RegionReport thm53_region(const Polynomial& p) {
  require_degree(p, 3, "thm53");
  const Vec& a = p.coeffs();
  const Eigen::Index n = p.degree();
  const MultiplierSpec m = gap3_multiplier(p);
  check_sign_condition(p, m, 3);
  const double mu = unique_positive_root(m);
  const double ratio1 = a(n - 1) / a(n);
  const double ratio2 = a(n - 2) / a(n);
  const double R = mu * mu + ratio1 * mu + ratio2;
  const auto [c1, c2] = quadratic_pair(ratio1, ratio2);

  RegionReport r;
  r.theorem = "thm53";
  r.parameters["mu"] = mu;
  r.parameters["R"] = R;
  r.inclusion = lemniscate_union({c1, c2}, R, 2);
  r.disjoint = pairwise_disjoint(r.inclusion);
  if (r.disjoint[0][1]) {
    // Disjointness forces real centers c2 < c1 < 0 with the origin inside the
    // c1 disk, which then holds n-1 zeros and the c2 disk exactly one.
    assert(is_real(c1) && is_real(c2) && c2.real() < c1.real() && c1.real() < 0.0);
    assert(contains(r.inclusion[0], Complex(0.0)));
    if (is_real(c1) && c2.real() < c1.real() && c1.real() < 0.0 &&
        contains(r.inclusion[0], Complex(0.0))) {
      r.counts = std::vector<CountGroup>{{{0}, static_cast<int>(n) - 1}, {{1}, 1}};
    }
  }
  return r;
}

namespace {

RegionReport three_disk_region(std::string tag, const Polynomial& p, double eps,
                               const MultiplierSpec& m) {
  const Vec& a = p.coeffs();
  const Eigen::Index n = p.degree();
  check_sign_condition(p, m, 3);
  const double mu = unique_positive_root(m);
  const double ratio1 = a(n - 1) / a(n);
  const double ratio2 = a(n - 2) / a(n);
  const double R = mu * mu * mu + ratio1 * mu * mu + (eps * ratio2) * mu;
  const auto [c1, c2] = quadratic_pair(ratio1, eps * ratio2);

  RegionReport r;
  r.theorem = std::move(tag);
  r.parameters["mu"] = mu;
  r.parameters["R"] = R;
  r.inclusion = lemniscate_union({Complex(0.0), c1, c2}, R, 3);
  r.disjoint = pairwise_disjoint(r.inclusion);

  const bool d01 = r.disjoint[0][1], d02 = r.disjoint[0][2], d12 = r.disjoint[1][2];
  const int nn = static_cast<int>(n);
  if (d01 && d02) {
    // Origin disk isolated: it keeps n-2 zeros, the other two hold the rest.
    if (d12) {
      r.counts = std::vector<CountGroup>{{{0}, nn - 2}, {{1}, 1}, {{2}, 1}};
    } else {
      r.counts = std::vector<CountGroup>{{{0}, nn - 2}, {{1, 2}, 2}};
    }
  } else if (d12 && (d01 != d02)) {
    // Exactly one non-origin disk split off; possible only for real negative
    // centers.
    if (is_real(c1) && c2.real() < c1.real() && c1.real() < 0.0) {
      const int isolated = d01 ? 1 : 2;
      const int merged = d01 ? 2 : 1;
      r.counts = std::vector<CountGroup>{{{isolated}, 1}, {{0, merged}, nn - 1}};
    }
  }
  flag_redundant_others(r, p);
  return r;
}

}  // namespace

RegionReport thm61_region(const Polynomial& p, double eps) {
  const MultiplierSpec m = thm61_multiplier(p, eps);
  RegionReport r = three_disk_region("thm61", p, eps, m);
  r.parameters["eps"] = eps;
  r.parameters["gamma0"] = m.monic_coeffs()(0);
  r.parameters["gamma1"] = m.monic_coeffs()(1);
  return r;
}

RegionReport cor61_region(const Polynomial& p) {
  return three_disk_region("cor61", p, 1.0, cor61_multiplier(p));
}

}  // namespace ekzero
