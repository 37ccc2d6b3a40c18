#pragma once

#include <Eigen/Core>
#include <complex>
#include <initializer_list>
#include <vector>

#include "ekzero/errors.hpp"

namespace ekzero {

using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Complex = std::complex<double>;

// Coefficients are stored ascending everywhere in this library:
// coeffs[j] multiplies z^j, so coeffs[0] is the constant term and
// coeffs[degree] the leading coefficient.

// Real polynomial with strictly positive coefficients and degree >= 1.
class Polynomial {
 public:
  explicit Polynomial(Vec coeffs);
  const Vec& coeffs() const noexcept { return coeffs_; }
  Eigen::Index degree() const noexcept { return coeffs_.size() - 1; }
  double operator[](Eigen::Index j) const { return coeffs_(j); }

 private:
  Vec coeffs_;
};

Polynomial make_polynomial(Vec coeffs);
Polynomial make_polynomial(std::initializer_list<double> coeffs);

// Coefficients reversed; zeros become reciprocals of the original's.
Polynomial reverse(const Polynomial& p);

// Real polynomial with coefficients of any sign and nonzero leading term.
// Holds multiplier products, whose nonleading coefficients may be nonpositive.
class SignedPolynomial {
 public:
  explicit SignedPolynomial(Vec coeffs);
  const Vec& coeffs() const noexcept { return coeffs_; }
  Eigen::Index degree() const noexcept { return coeffs_.size() - 1; }
  double operator[](Eigen::Index j) const { return coeffs_(j); }

 private:
  Vec coeffs_;
};

// Monic multiplier z^d - g_{d-1} z^{d-1} - ... - g_1 z - g_0 with d in {1..4}.
// The even_only pattern is the quartic z^4 - alpha z^2 - beta (odd entries zero).
class MultiplierSpec {
 public:
  enum class Pattern { full, even_only };

  MultiplierSpec(Vec monic_coeffs, Pattern pattern = Pattern::full);

  static MultiplierSpec linear(double g0);
  static MultiplierSpec quadratic(double g0, double g1);
  static MultiplierSpec cubic(double g0, double g1, double g2);
  static MultiplierSpec even_quartic(double alpha, double beta);

  // g_0 ... g_{d-1}, ascending.
  const Vec& monic_coeffs() const noexcept { return coeffs_; }
  Eigen::Index degree() const noexcept { return coeffs_.size(); }
  Pattern pattern() const noexcept { return pattern_; }

  // Full ascending coefficient vector (-g_0, ..., -g_{d-1}, 1).
  Vec full_coeffs() const;

 private:
  Vec coeffs_;
  Pattern pattern_;
};

// Exact convolution of (z^d - sum_j g_j z^j) with p; degree n + d.
SignedPolynomial multiply(const Polynomial& p, const MultiplierSpec& m);

struct SignReport {
  bool all_nonpositive = false;
  std::vector<Eigen::Index> violations;  // offending coefficient indices
};

// True iff every coefficient below the top protected_top_count powers is <= 0.
// Values in (0, 1e-12 * ||q||_inf] are treated as rounded zeros.
SignReport nonleading_sign_report(const SignedPolynomial& q, int protected_top_count);

double evaluate(const Vec& coeffs, double t);
Complex evaluate(const Vec& coeffs, Complex t);
Complex evaluate(const CVec& coeffs, Complex t);

}  // namespace ekzero
