#pragma once

// Shared helpers for the test suites: random isometries and hand-written
// closed forms used as oracles.

#include "cohom1/cohom1.hpp"

#include <cmath>

namespace cohom1::testing {

/// k_{θ1} a_t k_{θ2} followed by a translation of norm at most `tmax`.
inline IsoElement random_isometry(Sampler& rng, double tmax_boost = 2.0, double tmax_trans = 5.0)
{
  const auto rot = [](double th) { return exp_iso(LieElement::linear_only(y_k()), th).linear; };
  const Matrix x = rot(rng.centered(M_PI)) * exp_iso(LieElement::linear_only(y_a()), rng.centered(tmax_boost)).linear *
                   rot(rng.centered(M_PI));
  Vector u = rng.gaussian_vector(3);
  u *= rng.unit() * tmax_trans / u.norm();
  return {x, u};
}

inline Matrix mat3(double a, double b, double c, double d, double e, double f, double g, double h, double i)
{
  Matrix m(3, 3);
  m << a, b, c, d, e, f, g, h, i;
  return m;
}

inline Vector vec(std::initializer_list<double> xs)
{
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

// Closed forms written out entry by entry (see the README for the formulas).
inline Matrix oracle_k(double t) { return mat3(std::cos(t), -std::sin(t), 0, std::sin(t), std::cos(t), 0, 0, 0, 1); }
inline Matrix oracle_a(double t)
{
  return mat3(1, 0, 0, 0, std::cosh(t), -std::sinh(t), 0, -std::sinh(t), std::cosh(t));
}
inline Matrix oracle_n(double t)
{
  return mat3(1, t, t, -t, 1 - t * t / 2, -t * t / 2, t, t * t / 2, 1 + t * t / 2);
}
/// Translation part of Exp(t(Y_a + λe1)).
inline Vector oracle_a_lambda_trans(double lambda, double t) { return vec({lambda * t, 0, 0}); }
/// Translation part of Exp(t(Y_n + λe3)).
inline Vector oracle_n_lambda_trans(double lambda, double t)
{
  return vec({lambda * t * t / 2, -lambda * t * t * t / 6, lambda * t + lambda * t * t * t / 6});
}

inline double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace cohom1::testing
