#include "ekzero/polynomial.hpp"

#include <cmath>
#include <utility>

namespace ekzero {

Polynomial::Polynomial(Vec coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) {
    throw validation_error(errc::too_short, "polynomial needs degree >= 1 (at least two coefficients)");
  }
  if (!coeffs_.allFinite()) {
    throw validation_error(errc::non_positive_coefficient, "coefficients must be finite");
  }
  if (!(coeffs_.array() > 0.0).all()) {
    throw validation_error(errc::non_positive_coefficient,
                           "all coefficients must be strictly positive");
  }
}

Polynomial make_polynomial(Vec coeffs) { return Polynomial(std::move(coeffs)); }

Polynomial make_polynomial(std::initializer_list<double> coeffs) {
  Vec v(static_cast<Eigen::Index>(coeffs.size()));
  Eigen::Index i = 0;
  for (double c : coeffs) v(i++) = c;
  return Polynomial(std::move(v));
}

Polynomial reverse(const Polynomial& p) { return Polynomial(p.coeffs().reverse().eval()); }

SignedPolynomial::SignedPolynomial(Vec coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 1) {
    throw validation_error(errc::too_short, "signed polynomial needs at least one coefficient");
  }
  if (!coeffs_.allFinite()) {
    throw validation_error(errc::non_positive_coefficient, "coefficients must be finite");
  }
  if (coeffs_(coeffs_.size() - 1) == 0.0) {
    throw validation_error(errc::hypothesis_violated, "leading coefficient must be nonzero");
  }
}

MultiplierSpec::MultiplierSpec(Vec monic_coeffs, Pattern pattern)
    : coeffs_(std::move(monic_coeffs)), pattern_(pattern) {
  const auto d = coeffs_.size();
  if (d < 1 || d > 4) {
    throw validation_error(errc::hypothesis_violated, "multiplier degree must be in {1,2,3,4}");
  }
  if (!coeffs_.allFinite()) {
    throw validation_error(errc::hypothesis_violated, "multiplier coefficients must be finite");
  }
  if (pattern_ == Pattern::even_only && (d != 4 || coeffs_(1) != 0.0 || coeffs_(3) != 0.0)) {
    throw validation_error(errc::hypothesis_violated,
                           "even-only pattern requires degree 4 with zero odd entries");
  }
}

MultiplierSpec MultiplierSpec::linear(double g0) {
  Vec v(1);
  v << g0;
  return MultiplierSpec(std::move(v));
}

MultiplierSpec MultiplierSpec::quadratic(double g0, double g1) {
  Vec v(2);
  v << g0, g1;
  return MultiplierSpec(std::move(v));
}

MultiplierSpec MultiplierSpec::cubic(double g0, double g1, double g2) {
  Vec v(3);
  v << g0, g1, g2;
  return MultiplierSpec(std::move(v));
}

MultiplierSpec MultiplierSpec::even_quartic(double alpha, double beta) {
  Vec v(4);
  v << beta, 0.0, alpha, 0.0;
  return MultiplierSpec(std::move(v), Pattern::even_only);
}

Vec MultiplierSpec::full_coeffs() const {
  Vec v(coeffs_.size() + 1);
  v.head(coeffs_.size()) = -coeffs_;
  v(coeffs_.size()) = 1.0;
  return v;
}

SignedPolynomial multiply(const Polynomial& p, const MultiplierSpec& m) {
  const Vec& a = p.coeffs();
  const Eigen::Index n = p.degree();
  const Eigen::Index d = m.degree();
  Vec q = Vec::Zero(n + d + 1);
  q.tail(n + 1) = a;  // z^d * p
  for (Eigen::Index j = 0; j < d; ++j) {
    q.segment(j, n + 1) -= m.monic_coeffs()(j) * a;
  }
  return SignedPolynomial(std::move(q));
}

SignReport nonleading_sign_report(const SignedPolynomial& q, int protected_top_count) {
  if (protected_top_count < 1) {
    throw validation_error(errc::hypothesis_violated, "protected_top_count must be >= 1");
  }
  const Vec& c = q.coeffs();
  const double tol = 1e-12 * c.cwiseAbs().maxCoeff();
  SignReport report;
  const Eigen::Index checked = std::max<Eigen::Index>(c.size() - protected_top_count, 0);
  for (Eigen::Index j = 0; j < checked; ++j) {
    if (c(j) > tol) report.violations.push_back(j);
  }
  report.all_nonpositive = report.violations.empty();
  return report;
}

double evaluate(const Vec& coeffs, double t) {
  double acc = 0.0;
  for (Eigen::Index j = coeffs.size() - 1; j >= 0; --j) acc = acc * t + coeffs(j);
  return acc;
}

Complex evaluate(const Vec& coeffs, Complex t) {
  Complex acc{0.0, 0.0};
  for (Eigen::Index j = coeffs.size() - 1; j >= 0; --j) acc = acc * t + coeffs(j);
  return acc;
}

Complex evaluate(const CVec& coeffs, Complex t) {
  Complex acc{0.0, 0.0};
  for (Eigen::Index j = coeffs.size() - 1; j >= 0; --j) acc = acc * t + coeffs(j);
  return acc;
}

}  // namespace ekzero
