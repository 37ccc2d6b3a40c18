#include "ekzero/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ekzero/cauchy.hpp"

namespace ekzero {

namespace {

CVec derivative(const CVec& c) {
  CVec d(c.size() - 1);
  for (Eigen::Index j = 0; j + 1 < c.size(); ++j) d(j) = c(j + 1) * static_cast<double>(j + 1);
  return d;
}

double modulus_scale(const CVec& c, Complex z) {
  const double az = std::abs(z);
  double acc = 0.0;
  for (Eigen::Index j = c.size() - 1; j >= 0; --j) acc = acc * az + std::abs(c(j));
  return acc;
}

double residual_at(const CVec& c, Complex z) {
  const double den = modulus_scale(c, z);
  const double num = std::abs(evaluate(c, z));
  return den > 0.0 ? num / den : num;
}

}  // namespace

RootSet all_roots(const CVec& coeffs) {
  const Eigen::Index n = coeffs.size() - 1;
  if (n < 1) throw validation_error(errc::too_short, "all_roots needs degree >= 1");
  if (!coeffs.allFinite()) {
    throw validation_error(errc::hypothesis_violated, "all_roots: coefficients must be finite");
  }
  if (coeffs(n) == Complex(0.0)) {
    throw validation_error(errc::hypothesis_violated, "all_roots: leading coefficient must be nonzero");
  }

  RootSet rs;
  if (n == 1) {
    rs.roots = CVec::Constant(1, -coeffs(0) / coeffs(1));
    rs.max_residual = residual_at(coeffs, rs.roots(0));
    return rs;
  }

  const Vec moduli = coeffs.cwiseAbs();
  if (moduli.head(n).maxCoeff() == 0.0) {  // pure z^n: an n-fold zero root
    rs.roots = CVec::Zero(n);
    rs.max_residual = 0.0;
    return rs;
  }

  // Deterministic start: equiangular points on a circle just inside the
  // Cauchy radius, phase-shifted to avoid real-axis symmetry traps.
  const double r0 = 0.9 * cauchy_radius(moduli, 1).value;
  CVec z(n);
  constexpr double phase = 0.4;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n) + phase;
    z(i) = Complex(r0 * std::cos(ang), r0 * std::sin(ang));
  }

  const CVec dcoeffs = derivative(coeffs);
  bool converged = false;
  for (int sweep = 0; sweep < 500 && !converged; ++sweep) {
    double max_step = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const Complex p = evaluate(coeffs, z(i));
      if (p == Complex(0.0)) continue;
      const Complex dp = evaluate(dcoeffs, z(i));
      if (dp == Complex(0.0)) {
        // Stationary point: nudge deterministically and keep iterating.
        z(i) += Complex(0.01 * (1.0 + std::abs(z(i))), 0.0);
        max_step = std::numeric_limits<double>::max();
        continue;
      }
      const Complex ratio = p / dp;
      Complex repulsion(0.0, 0.0);
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        const Complex diff = z(i) - z(j);
        if (diff == Complex(0.0)) continue;
        repulsion += 1.0 / diff;
      }
      const Complex denom = Complex(1.0) - ratio * repulsion;
      const Complex w = (denom == Complex(0.0)) ? ratio : ratio / denom;
      z(i) -= w;
      max_step = std::max(max_step, std::abs(w));
    }
    double scale = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) scale = std::max(scale, std::abs(z(i)));
    scale = std::max(scale, std::numeric_limits<double>::min());
    converged = max_step <= 1e-13 * scale;
  }
  if (!converged) {
    throw numeric_error(errc::non_convergence, "all_roots: simultaneous iteration did not settle");
  }

  for (Eigen::Index i = 0; i < n; ++i) {  // Newton polish
    for (int it = 0; it < 3; ++it) {
      const Complex p = evaluate(coeffs, z(i));
      const Complex dp = evaluate(dcoeffs, z(i));
      if (dp == Complex(0.0)) break;
      const Complex next = z(i) - p / dp;
      if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
      z(i) = next;
    }
  }

  rs.roots = std::move(z);
  rs.max_residual = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    rs.max_residual = std::max(rs.max_residual, residual_at(coeffs, rs.roots(i)));
  }
  return rs;
}

RootSet all_roots(const Vec& coeffs) { return all_roots(coeffs.cast<Complex>().eval()); }
RootSet all_roots(const Polynomial& p) { return all_roots(p.coeffs()); }
RootSet all_roots(const SignedPolynomial& q) { return all_roots(q.coeffs()); }

std::pair<double, double> moduli_extremes(const RootSet& rs) {
  if (rs.roots.size() == 0) {
    throw validation_error(errc::too_short, "moduli_extremes: empty root set");
  }
  const Vec mags = rs.roots.cwiseAbs();
  return {mags.minCoeff(), mags.maxCoeff()};
}

int count_in_disk(const RootSet& rs, const Disk& d, double tol) {
  int count = 0;
  for (Eigen::Index i = 0; i < rs.roots.size(); ++i) {
    const bool in = (d.openness == Openness::closed_inclusion)
                        ? contains(d, rs.roots(i), tol)
                        : strictly_inside(d, rs.roots(i), tol);
    if (in) ++count;
  }
  return count;
}

}  // namespace ekzero
