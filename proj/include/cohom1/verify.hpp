#pragma once

// Numerical checks of identities and (non-)equivalence statements about the
// canonical actions. Every check returns a report whose status is Pass exactly
// when its max residual is within the declared tolerance.

#include "cohom1/catalog.hpp"
#include "cohom1/lie.hpp"
#include "cohom1/random.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohom1 {

enum class Status { Pass, Fail };

inline std::string to_string(Status s) { return s == Status::Pass ? "Pass" : "Fail"; }

struct Witness {
  Vector point;
  std::vector<double> params;
  std::vector<std::string> labels;
};

struct VerificationReport {
  std::string name;
  Status status = Status::Fail;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::optional<double> statistic;  // check-specific summary value (e.g. a spread)
  std::optional<Witness> witness;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string note;

  void decide() { status = (max_residual <= tolerance) ? Status::Pass : Status::Fail; }
};

// ---------------------------------------------------------------------------
// Closed-form group elements on M^3

/// a_u = exp(u Y_a).
inline Matrix boost_a(double u)
{
  Matrix a = Matrix::Identity(3, 3);
  a(1, 1) = std::cosh(u);
  a(1, 2) = -std::sinh(u);
  a(2, 1) = -std::sinh(u);
  a(2, 2) = std::cosh(u);
  return a;
}

/// k_t = exp(t Y_k).
inline Matrix rotation_k(double t)
{
  Matrix k = Matrix::Identity(3, 3);
  k(0, 0) = std::cos(t);
  k(0, 1) = -std::sin(t);
  k(1, 0) = std::sin(t);
  k(1, 1) = std::cos(t);
  return k;
}

/// n_t = exp(t Y_n).
inline Matrix null_rotation_n(double t)
{
  Matrix n(3, 3);
  const double h = 0.5 * t * t;
  n << 1, t, t, -t, 1 - h, -h, t, h, 1 + h;
  return n;
}

/// g^λ_{t,s} = (a_t, (λt, s, -s)): the element exp(sℓ)∘exp(t(Y_a + λe1)) of A_λ ⋉ ℓ.
inline IsoElement g_lambda(double lambda, double t, double s)
{
  Vector u(3);
  u << lambda * t, s, -s;
  return {boost_a(t), u};
}

/// h^λ_{t,s} = exp(sℓ)∘exp(t(Y_n + λe3)).
inline IsoElement h_lambda(double lambda, double t, double s)
{
  const double t2 = t * t, t3 = t2 * t;
  Vector u(3);
  u << lambda * t2 / 2, s - lambda * t3 / 6, lambda * t + lambda * t3 / 6 - s;
  return {null_rotation_n(t), u};
}

/// Orbit invariant of A_λ ⋉ ℓ off W^2: z e^{x/λ} with x = p1, z = (p2 + p3)/2.
inline double invariant_a_lambda(double lambda, const Vector& p)
{
  return 0.5 * (p(1) + p(2)) * std::exp(p(0) / lambda);
}

/// Orbit invariant of N_λ ⋉ ℓ: p1 - (p2 + p3)^2 / (2λ); P_λ is its zero set.
inline double invariant_n_lambda(double lambda, const Vector& p)
{
  const double w = p(1) + p(2);
  return p(0) - w * w / (2.0 * lambda);
}

// ---------------------------------------------------------------------------

/// Interval preservation ⟨g p - g q, g p - g q⟩ = ⟨p - q, p - q⟩ on random pairs.
inline VerificationReport check_isometry(const IsoElement& g, int trials, std::uint64_t seed)
{
  if (trials < 1) throw std::invalid_argument("check_isometry: trials must be >= 1");
  VerificationReport rep{.name = "isometry", .tolerance = 1e-10, .trials = trials, .seed = seed};
  const int d = g.dim();
  for (int i = 0; i < trials; ++i) {
    Sampler rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
    const Vector p = rng.gaussian_vector(d) * 2.0;
    const Vector q = rng.gaussian_vector(d) * 2.0;
    const Vector dv = p - q;
    const Vector gd = iso_apply(g, p) - iso_apply(g, q);
    const double res =
        std::abs(lorentz_norm2(gd) - lorentz_norm2(dv)) / (dv.squaredNorm() + gd.squaredNorm() + 1e-300);
    if (res > rep.max_residual) {
      rep.max_residual = res;
      rep.witness = Witness{p, {}, {}};
    }
  }
  rep.decide();
  return rep;
}

/// |a_u(g^λ_{t,s}(p)) - g^λ_{t,e^{±u}s}(a_u(p))| relative to the left side.
/// `swapped_scaling` uses e^{-u} and is the deliberately wrong variant.
inline double commuting_identity_residual(double lambda, double u, double t, double s, const Vector& p,
                                          bool swapped_scaling = false)
{
  const IsoElement au = IsoElement::linear_only(boost_a(u));
  const Vector lhs = iso_apply(au, iso_apply(g_lambda(lambda, t, s), p));
  const double s2 = swapped_scaling ? std::exp(-u) * s : std::exp(u) * s;
  const Vector rhs = iso_apply(g_lambda(lambda, t, s2), iso_apply(au, p));
  return (lhs - rhs).norm() / (1.0 + lhs.norm());
}

inline VerificationReport commuting_identity_check(double lambda, int trials, std::uint64_t seed,
                                                   bool swapped_scaling = false)
{
  if (!(lambda > 0)) throw std::invalid_argument("commuting_identity_check: lambda must be positive");
  if (trials < 1) throw std::invalid_argument("commuting_identity_check: trials must be >= 1");
  VerificationReport rep{.name = "commuting-identity", .tolerance = 1e-12, .trials = trials, .seed = seed};
  for (int i = 0; i < trials; ++i) {
    Sampler rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
    const double u = rng.centered(2.0), t = rng.centered(2.0), s = rng.centered(2.0);
    Vector p(3);
    for (int k = 0; k < 3; ++k) p(k) = rng.centered(2.0);
    const double res = commuting_identity_residual(lambda, u, t, s, p, swapped_scaling);
    if (res > rep.max_residual) {
      rep.max_residual = res;
      rep.witness = Witness{p, {u, t, s}, {}};
    }
  }
  rep.decide();
  return rep;
}

/// Maps samples of P_λ through a_u and measures |J_μ| there. The boost is
/// u = ln(λ/μ)/2 unless `boost_override` is given.
inline VerificationReport p_lambda_congruence_check(double lambda, double mu, int samples, std::uint64_t seed,
                                                    std::optional<double> boost_override = std::nullopt)
{
  if (!(lambda > 0) || !(mu > 0)) throw std::invalid_argument("p_lambda_congruence_check: lambda, mu must be positive");
  if (samples < 1) throw std::invalid_argument("p_lambda_congruence_check: samples must be >= 1");
  VerificationReport rep{.name = "p-lambda-congruence", .tolerance = 1e-9, .trials = samples, .seed = seed};
  const double u = boost_override.value_or(0.5 * std::log(lambda / mu));
  const Matrix au = boost_a(u);
  for (int i = 0; i < samples; ++i) {
    Sampler rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
    const double t = rng.centered(2.0), s = rng.centered(2.0);
    const Vector p = h_lambda(lambda, t, s).trans;  // h^λ_{t,s}(0)
    const Vector q = au * p;
    const double res = std::abs(invariant_n_lambda(mu, q)) / (1.0 + q.squaredNorm());
    if (res > rep.max_residual) {
      rep.max_residual = res;
      rep.witness = Witness{q, {t, s, u}, {}};
    }
  }
  rep.decide();
  return rep;
}

/// Spread of I_μ along the A_λ ⋉ ℓ orbit through e2 + e3 over t ∈ [-1, 1].
/// The witness counts when the spread exceeds 0.1; the residual is
/// 0.1 / spread against tolerance 1. Also requires W^2 to carry identical
/// labels for both actions.
inline VerificationReport nonequivalence_witness(double lambda, double mu, int grid)
{
  if (!(lambda > 0) || !(mu > 0)) throw std::invalid_argument("nonequivalence_witness: lambda, mu must be positive");
  if (lambda == mu) throw std::invalid_argument("nonequivalence_witness: lambda and mu must differ");
  if (grid < 2) throw std::invalid_argument("nonequivalence_witness: grid must be >= 2");
  VerificationReport rep{.name = "nonequivalence", .tolerance = 1.0, .trials = grid};
  Vector base(3);
  base << 0, 1, 1;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  double t_lo = 0, t_hi = 0;
  for (int i = 0; i < grid; ++i) {
    const double t = -1.0 + 2.0 * i / (grid - 1);
    for (double s : {-1.0, 0.0, 1.0}) {
      const double v = invariant_a_lambda(mu, iso_apply(g_lambda(lambda, t, s), base));
      if (v < lo) lo = v, t_lo = t;
      if (v > hi) hi = v, t_hi = t;
    }
  }
  const double spread = hi - lo;
  rep.statistic = spread;
  rep.max_residual = spread > 0 ? 0.1 / spread : std::numeric_limits<double>::infinity();

  const ActionSpec a = make_action(ActionClass::ALambdaEll, lambda);
  const ActionSpec b = make_action(ActionClass::ALambdaEll, mu);
  bool w_equal = true;
  std::vector<std::string> labels;
  for (const auto& p : {basis_vector(3, 1), null_w0(3), Vector(basis_vector(3, 1) * -2.0 + null_w0(3) * 3.0)}) {
    const OrbitLabel la = orbit_label(a, p), lb = orbit_label(b, p);
    w_equal = w_equal && stratum_kind(la) == stratum_kind(lb) && la.invariants == lb.invariants;
    labels.push_back(to_string(stratum_kind(la)) + "|" + to_string(stratum_kind(lb)));
  }
  if (!w_equal) {
    rep.max_residual = std::numeric_limits<double>::infinity();
    rep.note = "W2 labels differ between the two actions";
  }
  rep.witness = Witness{base, {t_lo, t_hi}, labels};
  rep.decide();
  return rep;
}

/// On M^4: KprimeAN with trivial and full K' agree off W^3 on dS^3(r) and
/// differ in orbit dimension (1 vs 2) on the cylinder Z^2(r).
inline VerificationReport dense_open_experiment(double r, int trials, std::uint64_t seed)
{
  if (!(r > 0)) throw std::invalid_argument("dense_open_experiment: r must be positive");
  if (trials < 1) throw std::invalid_argument("dense_open_experiment: trials must be >= 1");
  VerificationReport rep{.name = "dense-open", .tolerance = 0.0, .trials = trials, .seed = seed};
  const ActionSpec triv = make_action(ActionClass::KprimeAN, -1, 4, KPrime::trivial());
  const ActionSpec full = make_action(ActionClass::KprimeAN, -1, 4, KPrime::full());
  int failures = 0;
  auto record = [&](const Vector& p, const std::string& what) {
    ++failures;
    if (!rep.witness) rep.witness = Witness{p, {}, {what}};
  };

  for (int i = 0; i < trials; ++i) {
    Sampler rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
    Vector p(4);
    do {
      const double tau = rng.centered(2.0 * r);
      Vector x = rng.gaussian_vector(3);
      x *= std::sqrt(r * r + tau * tau) / x.norm();
      p << x, tau;
    } while (std::abs(p(2) + p(3)) <= 1e-6 * (1.0 + p.lpNorm<Eigen::Infinity>()));
    const int da = orbit_dimension(triv, p), db = orbit_dimension(full, p);
    const OrbitLabel la = orbit_label(triv, p), lb = orbit_label(full, p);
    if (da != db || da != 3 || !same_orbit_label(la, lb)) record(p, "off-W mismatch");
  }
  const int on_z = std::max(1, trials / 10);
  for (int i = 0; i < on_z; ++i) {
    Sampler rng(trial_seed(seed ^ 0x5A5A5A5Aull, static_cast<std::uint64_t>(i)));
    const double th = rng.centered(std::numbers::pi), s = rng.centered(3.0);
    Vector p(4);
    p << r * std::cos(th), r * std::sin(th), 0, 0;
    p += s * null_w0(4);
    if (orbit_dimension(triv, p) != 1 || orbit_dimension(full, p) != 2) record(p, "cylinder dimensions not 1 vs 2");
  }
  rep.max_residual = failures;
  rep.note = std::to_string(trials) + " points off W, " + std::to_string(on_z) + " on the cylinder";
  rep.decide();
  return rep;
}

namespace detail {

/// Points that hit lower-dimensional strata with positive probability: sparse
/// integer combinations over the standard and light-like bases, random null
/// vectors, and generic Gaussian points.
inline Vector special_point(int d, Sampler& rng)
{
  std::vector<Vector> light;
  for (int i = 1; i < d - 1; ++i) light.push_back(basis_vector(d, i));
  light.push_back(null_w0(d));
  light.push_back(basis_vector(d, d - 1) + basis_vector(d, d));
  auto coef = [&] {
    static constexpr double c[] = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
    return c[rng.bits() % 6];
  };
  Vector p = Vector::Zero(d);
  switch (rng.bits() % 6) {
    case 0:
      break;  // origin
    case 1:
      for (int i = 0; i < d; ++i)
        if (rng.coin()) p(i) = coef();
      break;
    case 2:
    case 3:
      for (const auto& v : light)
        if (rng.coin()) p += coef() * v;
      break;
    case 4: {
      const Vector x = rng.gaussian_vector(d - 1);
      p.head(d - 1) = x;
      p(d - 1) = (rng.coin() ? 1.0 : -1.0) * x.norm();
      break;
    }
    default: p = rng.gaussian_vector(d) * 2.0; break;
  }
  return p;
}

}  // namespace detail

/// Observed stratum kinds must equal the expected inventory. The residual is
/// the size of the symmetric difference.
inline VerificationReport orbit_count_experiment(const ActionSpec& spec, int trials, std::uint64_t seed)
{
  if (trials < 1) throw std::invalid_argument("orbit_count_experiment: trials must be >= 1");
  VerificationReport rep{.name = "orbit-count " + display_name(spec), .tolerance = 0.0, .trials = trials, .seed = seed};
  std::set<StratumKind> seen;
  const int d = spec.ambient_dim;
  for (int i = 0; i < trials; ++i) {
    Sampler rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
    seen.insert(stratum_kind(orbit_label(spec, detail::special_point(d, rng))));
  }
  const auto expected = expected_inventory(spec);
  Witness w;
  int diff = 0;
  for (const auto& k : seen)
    if (!expected.count(k)) ++diff, w.labels.push_back("unexpected " + to_string(k));
  for (const auto& k : expected)
    if (!seen.count(k)) ++diff, w.labels.push_back("missing " + to_string(k));
  rep.statistic = static_cast<double>(seen.size());
  rep.max_residual = diff;
  if (diff) rep.witness = w;
  rep.note = std::to_string(seen.size()) + " kinds observed, " + std::to_string(expected.size()) + " expected";
  rep.decide();
  return rep;
}

}  // namespace cohom1
