#include "ekzero/cauchy.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace ekzero {

namespace {

double horner(const Vec& c, double t) {
  double acc = 0.0;
  for (Eigen::Index j = c.size() - 1; j >= 0; --j) acc = acc * t + c(j);
  return acc;
}

double horner_deriv(const Vec& c, double t) {
  double acc = 0.0;
  for (Eigen::Index j = c.size() - 1; j >= 1; --j) acc = acc * t + c(j) * static_cast<double>(j);
  return acc;
}

// Sign-adjusted modulus coefficients of the k-th kind equation:
// +|a_j| for j > n-k, -|a_j| otherwise.
Vec modulus_coeffs(const Vec& coeffs, int k) {
  const Eigen::Index n = coeffs.size() - 1;
  if (n < 1) throw validation_error(errc::too_short, "cauchy_radius needs degree >= 1");
  if (k < 1 || k > n) {
    throw validation_error(errc::hypothesis_violated, "cauchy_radius: k must satisfy 1 <= k <= degree");
  }
  if (!coeffs.allFinite() || coeffs(n) == 0.0) {
    throw validation_error(errc::hypothesis_violated, "cauchy_radius: leading coefficient must be nonzero");
  }
  Vec b = -coeffs.cwiseAbs();
  b.tail(k) = coeffs.tail(k).cwiseAbs();
  return b;
}

}  // namespace

double cauchy_lhs(const Vec& coeffs, int k, double t) { return horner(modulus_coeffs(coeffs, k), t); }

CauchyRadius cauchy_radius(const Vec& coeffs, int k) {
  const Eigen::Index n = coeffs.size() - 1;
  const Vec b = modulus_coeffs(coeffs, k);
  if (b.head(n - k + 1).cwiseAbs().maxCoeff() == 0.0) {
    throw validation_error(errc::degenerate_tail,
                           "cauchy_radius: all trailing moduli are zero, no positive root");
  }

  // Bracket: the classical bound 1 + max_j |a_j / a_n| exceeds every root of
  // the modulus polynomial, so the single sign change lies in [0, hi].
  double lo = 0.0;
  double hi = 1.0 + coeffs.head(n).cwiseAbs().maxCoeff() / std::abs(coeffs(n));
  const int cap = 200;
  int iter = 0;

  while (hi - lo > 1e-2 && iter < cap) {
    const double mid = 0.5 * (lo + hi);
    (horner(b, mid) < 0.0 ? lo : hi) = mid;
    ++iter;
  }

  double t = 0.5 * (lo + hi);
  bool converged = false;
  for (; iter < cap; ++iter) {
    const double ft = horner(b, t);
    if (ft == 0.0) {
      converged = true;
      break;
    }
    (ft < 0.0 ? lo : hi) = t;
    const double dft = horner_deriv(b, t);
    double next = (dft != 0.0) ? t - ft / dft : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - t);
    t = next;
    if (step <= 1e-13 * std::max(t, std::numeric_limits<double>::min())) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw numeric_error(errc::non_convergence, "cauchy_radius: iteration cap reached");
  }
  return CauchyRadius{t, k, horner(b, t)};
}

CauchyRadius cauchy_radius(const Polynomial& p, int k) { return cauchy_radius(p.coeffs(), k); }
CauchyRadius cauchy_radius(const SignedPolynomial& q, int k) { return cauchy_radius(q.coeffs(), k); }

namespace {

// Roots of z^3 - g2 z^2 - g1 z - g0 by Cardano / trigonometric form.
// Returns false when the discriminant is too close to zero for the closed
// form to be trustworthy (near-multiple roots lose digits).
bool cubic_roots_closed(double g0, double g1, double g2, std::array<Complex, 3>& out) {
  const double a = -g2, b = -g1, c = -g0;  // z^3 + a z^2 + b z + c
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const double shift = -a / 3.0;
  const double halfq = 0.5 * q;
  const double thirdp = p / 3.0;
  const double disc = halfq * halfq + thirdp * thirdp * thirdp;
  const double scale = halfq * halfq + std::abs(thirdp * thirdp * thirdp);

  if (scale == 0.0) {  // triple root
    out = {Complex(shift), Complex(shift), Complex(shift)};
    return true;
  }
  if (std::abs(disc) < 1e-14 * scale) return false;

  if (disc > 0.0) {
    const double s = std::sqrt(disc);
    const double u = std::cbrt(-halfq + s);
    const double v = std::cbrt(-halfq - s);
    const double re = -0.5 * (u + v);
    const double im = 0.5 * std::sqrt(3.0) * (u - v);
    out = {Complex(u + v + shift), Complex(re + shift, im), Complex(re + shift, -im)};
  } else {
    const double r = std::sqrt(-thirdp);
    const double arg = std::clamp(-halfq / (r * r * r), -1.0, 1.0);
    const double theta = std::acos(arg);
    constexpr double two_pi_third = 2.0943951023931953;
    for (int j = 0; j < 3; ++j) {
      out[j] = Complex(2.0 * r * std::cos(theta / 3.0 - two_pi_third * j) + shift);
    }
  }
  return true;
}

std::vector<Complex> companion_roots(const Vec& monic_g) {
  const Eigen::Index d = monic_g.size();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  comp.col(d - 1) = monic_g;
  const Eigen::VectorXcd ev = comp.eigenvalues();
  return std::vector<Complex>(ev.data(), ev.data() + ev.size());
}

double polish_real_root(const Vec& full, double t) {
  for (int it = 0; it < 8; ++it) {
    const double f = horner(full, t);
    const double df = horner_deriv(full, t);
    if (df == 0.0) break;
    const double next = t - f / df;
    if (!std::isfinite(next)) break;
    if (std::abs(next - t) <= 1e-15 * std::max(1.0, std::abs(next))) return next;
    t = next;
  }
  return t;
}

double select_unique_positive(const std::vector<Complex>& candidates, const MultiplierSpec& m) {
  const Vec full = m.full_coeffs();
  // A root that is zero up to rounding is not a positive root; measure
  // "zero" against the root magnitudes themselves.
  double cand_scale = 0.0;
  for (const Complex& z : candidates) cand_scale = std::max(cand_scale, std::abs(z));
  const double zero_tol = 1e-12 * cand_scale;

  std::vector<double> positives;
  for (const Complex& z : candidates) {
    if (std::abs(z.imag()) > 1e-8 * (1.0 + std::abs(z))) continue;
    if (z.real() <= zero_tol) continue;
    positives.push_back(polish_real_root(full, z.real()));
  }
  std::sort(positives.begin(), positives.end());
  // Positive real roots closer than 1e-8 apart count as one.
  std::vector<double> distinct;
  for (double r : positives) {
    if (r <= zero_tol) continue;
    if (distinct.empty() || r - distinct.back() > 1e-8 * std::max(1.0, r)) distinct.push_back(r);
  }
  if (distinct.empty()) {
    throw numeric_error(errc::no_positive_root, "multiplier has no positive root");
  }
  if (distinct.size() > 1) {
    throw numeric_error(errc::multiple_positive_roots, "multiplier has several positive roots");
  }
  return distinct.front();
}

}  // namespace

double unique_positive_root(const MultiplierSpec& m) {
  const Vec& g = m.monic_coeffs();
  if (g.cwiseAbs().maxCoeff() == 0.0) {
    throw numeric_error(errc::no_positive_root, "zero multiplier z^d has no positive root");
  }
  switch (m.degree()) {
    case 1: {
      if (g(0) <= 0.0) throw numeric_error(errc::no_positive_root, "z - g0 with g0 <= 0");
      return g(0);
    }
    case 2: {
      const double disc = g(1) * g(1) + 4.0 * g(0);
      if (disc < 0.0) throw numeric_error(errc::no_positive_root, "quadratic has no real root");
      const double s = std::sqrt(disc);
      const double r_plus = 0.5 * (g(1) + s);
      const double r_minus = 0.5 * (g(1) - s);
      std::vector<Complex> cand{Complex(r_plus), Complex(r_minus)};
      return select_unique_positive(cand, m);
    }
    case 3: {
      if (g(1) == 0.0 && g(2) == 0.0) {
        if (g(0) <= 0.0) throw numeric_error(errc::no_positive_root, "z^3 - g0 with g0 <= 0");
        return std::cbrt(g(0));
      }
      if (g(0) == 0.0 && g(1) == 0.0) {
        // z^2 (z - g2)
        if (g(2) <= 0.0) throw numeric_error(errc::no_positive_root, "z^2(z - g2) with g2 <= 0");
        return g(2);
      }
      if (g(0) == 0.0) {
        // z (z^2 - g2 z - g1): the zero root never counts as positive.
        return unique_positive_root(MultiplierSpec::quadratic(g(1), g(2)));
      }
      std::array<Complex, 3> roots;
      if (cubic_roots_closed(g(0), g(1), g(2), roots)) {
        return select_unique_positive({roots.begin(), roots.end()}, m);
      }
      return select_unique_positive(companion_roots(g), m);
    }
    case 4: {
      if (m.pattern() == MultiplierSpec::Pattern::even_only) {
        const double alpha = g(2), beta = g(0);
        const double disc = alpha * alpha + 4.0 * beta;
        if (disc < 0.0) throw numeric_error(errc::no_positive_root, "even quartic has no real square");
        const double s = std::sqrt(disc);
        std::vector<Complex> cand;
        const double y_plus = 0.5 * (alpha + s);
        const double y_minus = 0.5 * (alpha - s);
        if (y_plus > 0.0) cand.emplace_back(std::sqrt(y_plus));
        if (y_minus > 0.0) cand.emplace_back(std::sqrt(y_minus));
        return select_unique_positive(cand, m);
      }
      return select_unique_positive(companion_roots(g), m);
    }
    default:
      throw validation_error(errc::hypothesis_violated, "unsupported multiplier degree");
  }
}

}  // namespace ekzero
