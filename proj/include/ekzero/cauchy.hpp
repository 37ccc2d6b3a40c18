#pragma once

#include "ekzero/polynomial.hpp"

namespace ekzero {

// Cauchy radius of the k-th kind: the unique positive solution s_k of
//   |a_n| t^n + ... + |a_{n-k+1}| t^{n-k+1} - |a_{n-k}| t^{n-k} - ... - |a_0| = 0.
// The left side is negative on (0, s_k) and positive beyond.
struct CauchyRadius {
  double value = 0.0;
  int kind = 1;
  double residual = 0.0;  // left side evaluated at the computed root
};

CauchyRadius cauchy_radius(const Vec& coeffs, int k = 1);
CauchyRadius cauchy_radius(const Polynomial& p, int k = 1);
CauchyRadius cauchy_radius(const SignedPolynomial& q, int k = 1);

// Left side of the k-th kind equation at t. Useful as a substitution test:
// a nonnegative value at t certifies t >= s_k without solving.
double cauchy_lhs(const Vec& coeffs, int k, double t);

// The positive root of a multiplier arising from a theorem's parameter
// formulas (which guarantee exactly one). Closed forms for degrees 1, 2 and
// the even quartic; Cardano/trigonometric cubic with a companion-matrix
// fallback near a vanishing discriminant.
double unique_positive_root(const MultiplierSpec& m);

}  // namespace ekzero
