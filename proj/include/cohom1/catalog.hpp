#pragma once

// Canonical cohomogeneity-one actions on M^2, M^3 and the parabolic family
// K'AN on M^{n+1}, with closed-form orbit labels.
//
// Coordinates adapted to the light-like line ℓ = R(e2 - e3) in M^3:
//   p = x e1 + y (e2 - e3) + z (e2 + e3),  x = p1, y = (p2 - p3)/2, z = (p2 + p3)/2.

#include "cohom1/geometry.hpp"
#include "cohom1/lie.hpp"
#include "cohom1/random.hpp"
#include "cohom1/subalgebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cohom1 {

enum class ActionClass {
  // M^2
  R1, M1, W1, SO11,
  // M^3
  R2, M2, W2, KxRe3, AxRe1, NxEll, N1xEll, ALambdaEll, SO21, AN,
  // M^{n+1}, n >= 3
  SOn1, KprimeAN,
};

inline const std::vector<std::pair<ActionClass, std::string>>& action_class_names()
{
  static const std::vector<std::pair<ActionClass, std::string>> names = {
      {ActionClass::R1, "R1"},         {ActionClass::M1, "M1"},       {ActionClass::W1, "W1"},
      {ActionClass::SO11, "SO11"},     {ActionClass::R2, "R2"},       {ActionClass::M2, "M2"},
      {ActionClass::W2, "W2"},         {ActionClass::KxRe3, "KxRe3"}, {ActionClass::AxRe1, "AxRe1"},
      {ActionClass::NxEll, "NxEll"},   {ActionClass::N1xEll, "N1xEll"},
      {ActionClass::ALambdaEll, "ALambdaEll"},                      {ActionClass::SO21, "SO21"},
      {ActionClass::AN, "AN"},         {ActionClass::SOn1, "SOn1"},   {ActionClass::KprimeAN, "KprimeAN"},
  };
  return names;
}

inline std::string to_string(ActionClass c)
{
  for (const auto& [k, n] : action_class_names())
    if (k == c) return n;
  return "?";
}

inline std::optional<ActionClass> parse_action_class(const std::string& s)
{
  for (const auto& [k, n] : action_class_names())
    if (n == s) return k;
  return std::nullopt;
}

/// Subgroup K' of K0 ≅ SO(n-1) in the parabolic family.
struct KPrime {
  enum class Kind { Trivial, Full, Block };
  Kind kind = Kind::Trivial;
  int block = 0;  // m for Block(m): SO(m) rotating the first m coordinates

  static KPrime trivial() { return {Kind::Trivial, 0}; }
  static KPrime full() { return {Kind::Full, 0}; }
  static KPrime block_of(int m) { return {Kind::Block, m}; }

  bool operator==(const KPrime&) const = default;
};

inline std::string to_string(const KPrime& k)
{
  switch (k.kind) {
    case KPrime::Kind::Trivial: return "trivial";
    case KPrime::Kind::Full: return "full";
    case KPrime::Kind::Block: return "block(" + std::to_string(k.block) + ")";
  }
  return "?";
}

struct ActionSpec {
  ActionClass cls = ActionClass::SO21;
  double lambda = 0.0;  // ALambdaEll and N1xEll
  KPrime kprime;        // KprimeAN
  int ambient_dim = 3;
  Subalgebra generators;

  int group_dim() const { return generators.size(); }
  int n() const { return ambient_dim - 1; }
};

inline std::string display_name(const ActionSpec& spec)
{
  auto num = [](double v) {
    std::string s = std::to_string(v);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  };
  switch (spec.cls) {
    case ActionClass::ALambdaEll: return "ALambdaEll(" + num(spec.lambda) + ")";
    case ActionClass::N1xEll:
      return spec.lambda == 1.0 ? std::string("N1xEll") : "N1xEll(" + num(spec.lambda) + ")";
    case ActionClass::SOn1: return "SOn1(" + std::to_string(spec.n()) + ")";
    case ActionClass::KprimeAN: return "KprimeAN(" + std::to_string(spec.n()) + "," + to_string(spec.kprime) + ")";
    default: return to_string(spec.cls);
  }
}

inline int native_dimension(ActionClass c)
{
  switch (c) {
    case ActionClass::R1:
    case ActionClass::M1:
    case ActionClass::W1:
    case ActionClass::SO11: return 2;
    case ActionClass::SOn1:
    case ActionClass::KprimeAN: return 0;  // any ambient dim >= 4
    default: return 3;
  }
}

namespace detail {
inline LieElement trans3(double a, double b, double c)
{
  Vector v(3);
  v << a, b, c;
  return LieElement::translation(v);
}

inline LieElement with_trans(const Matrix& x, double a, double b, double c)
{
  Vector v(3);
  v << a, b, c;
  return {x, v};
}
}  // namespace detail

/// Canonical representative of a fixed-dimension class. `lambda` is used by
/// ALambdaEll (λ >= 0) and N1xEll (λ > 0, default 1); `ambient_dim` and
/// `kprime` by the M^{n+1} families.
inline ActionSpec make_action(ActionClass cls, double lambda = -1.0, int ambient_dim = 0,
                              KPrime kprime = KPrime::trivial())
{
  ActionSpec s;
  s.cls = cls;
  const int native = native_dimension(cls);
  if (native != 0) {
    if (ambient_dim != 0 && ambient_dim != native)
      throw std::invalid_argument(to_string(cls) + " acts on M^" + std::to_string(native));
    ambient_dim = native;
  } else if (ambient_dim < 4) {
    throw std::invalid_argument(to_string(cls) + " needs ambient dimension >= 4");
  }
  s.ambient_dim = ambient_dim;
  const int d = ambient_dim;
  std::vector<LieElement> g;
  const Vector ell = null_w0(3);

  switch (cls) {
    case ActionClass::R1: g = {LieElement::translation(basis_vector(2, 1))}; break;
    case ActionClass::M1: g = {LieElement::translation(basis_vector(2, 2))}; break;
    case ActionClass::W1: g = {LieElement::translation(null_w0(2))}; break;
    case ActionClass::SO11: g = {LieElement::linear_only(y_so11())}; break;
    case ActionClass::R2: g = {detail::trans3(1, 0, 0), detail::trans3(0, 1, 0)}; break;
    case ActionClass::M2: g = {detail::trans3(0, 1, 0), detail::trans3(0, 0, 1)}; break;
    case ActionClass::W2: g = {detail::trans3(1, 0, 0), LieElement::translation(ell)}; break;
    case ActionClass::KxRe3: g = {LieElement::linear_only(y_k()), detail::trans3(0, 0, 1)}; break;
    case ActionClass::AxRe1: g = {LieElement::linear_only(y_a()), detail::trans3(1, 0, 0)}; break;
    case ActionClass::NxEll: g = {LieElement::linear_only(y_n()), LieElement::translation(ell)}; break;
    case ActionClass::N1xEll: {
      if (lambda < 0) lambda = 1.0;
      if (!(lambda > 0)) throw std::invalid_argument("N1xEll: lambda must be positive");
      s.lambda = lambda;
      g = {detail::with_trans(y_n(), 0, 0, lambda), LieElement::translation(ell)};
      break;
    }
    case ActionClass::ALambdaEll: {
      if (lambda < 0) lambda = 0.0;
      if (!std::isfinite(lambda)) throw std::invalid_argument("ALambdaEll: lambda must be finite");
      s.lambda = lambda;
      g = {detail::with_trans(y_a(), lambda, 0, 0), LieElement::translation(ell)};
      break;
    }
    case ActionClass::SO21: g = {LieElement::linear_only(y_k()), LieElement::linear_only(y_a()),
                                 LieElement::linear_only(y_n())};
      break;
    case ActionClass::AN: g = {LieElement::linear_only(y_a()), LieElement::linear_only(y_n())}; break;
    case ActionClass::SOn1: {
      const IwasawaBasis iw = iwasawa_generators(d - 1);
      g = iw.k_gens;
      g.push_back(iw.a_gen);
      g.insert(g.end(), iw.n_gens.begin(), iw.n_gens.end());
      break;
    }
    case ActionClass::KprimeAN: {
      const int n = d - 1;
      const IwasawaBasis iw = iwasawa_generators(n);
      s.kprime = kprime;
      switch (kprime.kind) {
        case KPrime::Kind::Trivial: break;
        case KPrime::Kind::Full: g = iw.k0_gens; break;
        case KPrime::Kind::Block:
          if (kprime.block < 2 || kprime.block >= n - 1)
            throw std::invalid_argument("KprimeAN: block size m must satisfy 2 <= m < n-1");
          for (int i = 0; i < kprime.block; ++i)
            for (int j = i + 1; j < kprime.block; ++j)
              g.push_back(LieElement::linear_only(detail::rotation_generator(d, i, j)));
          break;
      }
      g.push_back(iw.a_gen);
      g.insert(g.end(), iw.n_gens.begin(), iw.n_gens.end());
      break;
    }
  }
  s.generators = Subalgebra(std::move(g), d);
  return s;
}

/// Canonical actions on M^{ambient_dim}. In M^3 the ALambdaEll family is
/// instantiated once per entry of `lambdas`.
inline std::vector<ActionSpec> catalog_list(int ambient_dim, const std::vector<double>& lambdas = {0.0, 1.0})
{
  if (ambient_dim < 2) throw std::invalid_argument("catalog_list: ambient dimension must be >= 2");
  std::vector<ActionSpec> out;
  if (ambient_dim == 2) {
    for (auto c : {ActionClass::R1, ActionClass::M1, ActionClass::W1, ActionClass::SO11}) out.push_back(make_action(c));
  } else if (ambient_dim == 3) {
    for (auto c : {ActionClass::R2, ActionClass::M2, ActionClass::W2, ActionClass::KxRe3, ActionClass::AxRe1,
                   ActionClass::NxEll, ActionClass::N1xEll})
      out.push_back(make_action(c));
    for (double l : lambdas) out.push_back(make_action(ActionClass::ALambdaEll, l));
    out.push_back(make_action(ActionClass::SO21));
    out.push_back(make_action(ActionClass::AN));
  } else {
    const int n = ambient_dim - 1;
    out.push_back(make_action(ActionClass::SOn1, -1, ambient_dim));
    out.push_back(make_action(ActionClass::KprimeAN, -1, ambient_dim, KPrime::trivial()));
    out.push_back(make_action(ActionClass::KprimeAN, -1, ambient_dim, KPrime::full()));
    for (int m = 2; m < n - 1; ++m)
      out.push_back(make_action(ActionClass::KprimeAN, -1, ambient_dim, KPrime::block_of(m)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Group elements and orbit sampling

/// Coordinates of the second kind: exp(p_{k-1} y_{k-1}) ∘ ... ∘ exp(p_0 y_0).
/// For ALambdaEll and the N families this is exactly g^λ_{t,s} and h^λ_{t,s}
/// with (t, s) = (p_0, p_1).
inline IsoElement group_element(const ActionSpec& spec, const std::vector<double>& params)
{
  if (static_cast<int>(params.size()) != spec.group_dim())
    throw std::invalid_argument("group_element: expected " + std::to_string(spec.group_dim()) + " parameters, got " +
                                std::to_string(params.size()));
  IsoElement g = IsoElement::identity(spec.ambient_dim);
  for (int i = 0; i < spec.group_dim(); ++i)
    if (params[i] != 0.0) g = iso_compose(exp_iso(spec.generators.basis[i], params[i]), g);
  return g;
}

inline std::vector<double> sample_params(const ActionSpec& spec, Sampler& rng, double scale)
{
  std::vector<double> p(spec.group_dim());
  for (auto& x : p) x = rng.centered(scale);
  return p;
}

inline std::vector<Vector> orbit_sample(const ActionSpec& spec, const Vector& p, int count, std::uint64_t seed,
                                        double scale = 3.0)
{
  if (count < 0) throw std::invalid_argument("orbit_sample: count must be non-negative");
  if (!(scale >= 0)) throw std::invalid_argument("orbit_sample: scale must be non-negative");
  if (p.size() != spec.ambient_dim) throw std::invalid_argument("orbit_sample: point has wrong dimension");
  std::vector<Vector> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Sampler rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
    out.push_back(iso_apply(group_element(spec, sample_params(spec, rng, scale)), p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orbit labels

enum class Stratum {
  // SO°(n,1)
  Origin, LightConePlus, LightConeMinus, HyperbolicPlus, HyperbolicMinus, DeSitter, DeSitterPlus, DeSitterMinus,
  LightRay,
  // parabolic family
  RayPlusW0, RayMinusW0, LightConePlusOffRay, LightConeMinusOffRay, DeSitterUpper, DeSitterLower, CylinderLine,
  Cylinder, CylinderBlockOrbit,
  // translation groups
  ParallelLeaf,
  // K x Re3
  Axis, CircularCylinder,
  // A x Re1
  AxisLine, NullHalfPlane, HyperbolicCylinderPlus, HyperbolicCylinderMinus, DeSitterCylinderPlus,
  DeSitterCylinderMinus,
  // A ⋉ ℓ and N x ℓ
  NullLine, HalfPlane, AffineW2Leaf,
  // A_λ ⋉ ℓ, λ > 0
  DegenerateW2, Leaf,
  // N_λ x ℓ, λ > 0
  ParabolicSurface,
};

inline std::string to_string(Stratum s)
{
  switch (s) {
    case Stratum::Origin: return "Origin";
    case Stratum::LightConePlus: return "LightConePlus";
    case Stratum::LightConeMinus: return "LightConeMinus";
    case Stratum::HyperbolicPlus: return "HyperbolicPlus";
    case Stratum::HyperbolicMinus: return "HyperbolicMinus";
    case Stratum::DeSitter: return "DeSitter";
    case Stratum::DeSitterPlus: return "DeSitterPlus";
    case Stratum::DeSitterMinus: return "DeSitterMinus";
    case Stratum::LightRay: return "LightRay";
    case Stratum::RayPlusW0: return "RayPlusW0";
    case Stratum::RayMinusW0: return "RayMinusW0";
    case Stratum::LightConePlusOffRay: return "LightConePlusOffRay";
    case Stratum::LightConeMinusOffRay: return "LightConeMinusOffRay";
    case Stratum::DeSitterUpper: return "DeSitterUpper";
    case Stratum::DeSitterLower: return "DeSitterLower";
    case Stratum::CylinderLine: return "CylinderLine";
    case Stratum::Cylinder: return "Cylinder";
    case Stratum::CylinderBlockOrbit: return "CylinderBlockOrbit";
    case Stratum::ParallelLeaf: return "ParallelLeaf";
    case Stratum::Axis: return "Axis";
    case Stratum::CircularCylinder: return "CircularCylinder";
    case Stratum::AxisLine: return "AxisLine";
    case Stratum::NullHalfPlane: return "NullHalfPlane";
    case Stratum::HyperbolicCylinderPlus: return "HyperbolicCylinderPlus";
    case Stratum::HyperbolicCylinderMinus: return "HyperbolicCylinderMinus";
    case Stratum::DeSitterCylinderPlus: return "DeSitterCylinderPlus";
    case Stratum::DeSitterCylinderMinus: return "DeSitterCylinderMinus";
    case Stratum::NullLine: return "NullLine";
    case Stratum::HalfPlane: return "HalfPlane";
    case Stratum::AffineW2Leaf: return "AffineW2Leaf";
    case Stratum::DegenerateW2: return "DegenerateW2";
    case Stratum::Leaf: return "Leaf";
    case Stratum::ParabolicSurface: return "ParabolicSurface";
  }
  return "?";
}

struct OrbitLabel {
  ActionClass cls = ActionClass::SO21;
  Stratum stratum = Stratum::Origin;
  std::vector<int> signs;          // discrete invariants
  std::vector<double> invariants;  // continuous invariants
};

/// Stratum tag plus discrete invariants; what an orbit inventory counts.
using StratumKind = std::pair<Stratum, std::vector<int>>;

inline StratumKind stratum_kind(const OrbitLabel& l) { return {l.stratum, l.signs}; }

inline std::string to_string(const StratumKind& k)
{
  std::string s = to_string(k.first);
  if (!k.second.empty()) {
    s += "(";
    for (int v : k.second) s += v > 0 ? "+" : (v < 0 ? "-" : "0");
    s += ")";
  }
  return s;
}

/// Equal orbits: same class, stratum and signs; invariants agree to tol relative to their magnitude.
inline bool same_orbit_label(const OrbitLabel& a, const OrbitLabel& b, double tol = 1e-8)
{
  if (a.cls != b.cls || a.stratum != b.stratum || a.signs != b.signs) return false;
  if (a.invariants.size() != b.invariants.size()) return false;
  for (std::size_t i = 0; i < a.invariants.size(); ++i) {
    const double scale = 1.0 + std::max(std::abs(a.invariants[i]), std::abs(b.invariants[i]));
    if (std::abs(a.invariants[i] - b.invariants[i]) > tol * scale) return false;
  }
  return true;
}

/// Largest normalized deviation between invariant vectors of two labels of the same kind.
inline double label_deviation(const OrbitLabel& a, const OrbitLabel& b)
{
  if (a.cls != b.cls || a.stratum != b.stratum || a.signs != b.signs || a.invariants.size() != b.invariants.size())
    return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.invariants.size(); ++i) {
    const double scale = 1.0 + std::max(std::abs(a.invariants[i]), std::abs(b.invariants[i]));
    worst = std::max(worst, std::abs(a.invariants[i] - b.invariants[i]) / scale);
  }
  return worst;
}

namespace detail {

inline OrbitLabel from_region(ActionClass cls, const RegionLabel& q)
{
  OrbitLabel l;
  l.cls = cls;
  switch (q.region) {
    case Region::Origin: l.stratum = Stratum::Origin; break;
    case Region::LightConePlus: l.stratum = Stratum::LightConePlus; break;
    case Region::LightConeMinus: l.stratum = Stratum::LightConeMinus; break;
    case Region::HyperbolicPlus: l.stratum = Stratum::HyperbolicPlus; break;
    case Region::HyperbolicMinus: l.stratum = Stratum::HyperbolicMinus; break;
    case Region::DeSitter: l.stratum = Stratum::DeSitter; break;
    case Region::DeSitterPlus: l.stratum = Stratum::DeSitterPlus; break;
    case Region::DeSitterMinus: l.stratum = Stratum::DeSitterMinus; break;
    case Region::LightRay:
      l.stratum = Stratum::LightRay;
      l.signs = {q.spatial_sign, q.time_sign};
      break;
  }
  if (q.r > 0) l.invariants = {q.r};
  return l;
}

/// Orbits of K'AN on M^{n+1}, n >= 2 (n = 2 with trivial K' is AN on M^3).
inline OrbitLabel parabolic_label(ActionClass cls, const KPrime& kprime, const Vector& p, double tol)
{
  const int d = static_cast<int>(p.size());
  const int n = d - 1;
  const double wtol = tol * (1.0 + p.lpNorm<Eigen::Infinity>());
  const bool on_w = in_w_subspace(p, wtol);
  const RegionLabel q = quadric_label(p, tol);
  OrbitLabel l = from_region(cls, q);
  switch (q.region) {
    case Region::LightConeMinus:
      l.stratum = on_w ? Stratum::RayPlusW0 : Stratum::LightConeMinusOffRay;
      break;
    case Region::LightConePlus:
      l.stratum = on_w ? Stratum::RayMinusW0 : Stratum::LightConePlusOffRay;
      break;
    case Region::DeSitter: {
      if (!on_w) {
        l.stratum = p(n - 1) + p(n) > 0 ? Stratum::DeSitterUpper : Stratum::DeSitterLower;
        break;
      }
      const Vector base = p.head(n - 1);
      if (n == 2) {
        l.stratum = Stratum::CylinderLine;
        l.signs = {sign_of(base(0))};
        break;
      }
      switch (kprime.kind) {
        case KPrime::Kind::Trivial:
          l.stratum = Stratum::CylinderLine;
          for (int i = 0; i < n - 1; ++i) l.invariants.push_back(base(i));
          break;
        case KPrime::Kind::Full:
          l.stratum = Stratum::Cylinder;
          break;
        case KPrime::Kind::Block:
          // SO(m) orbits on S^{n-2}(r): radius of the rotated block plus the fixed coordinates.
          l.stratum = Stratum::CylinderBlockOrbit;
          l.invariants.push_back(base.head(kprime.block).norm());
          for (int i = kprime.block; i < n - 1; ++i) l.invariants.push_back(base(i));
          break;
      }
      break;
    }
    default: break;
  }
  return l;
}

}  // namespace detail

inline OrbitLabel orbit_label(const ActionSpec& spec, const Vector& p, double tol = kDefaultTol)
{
  if (p.size() != spec.ambient_dim)
    throw std::invalid_argument("orbit_label: " + display_name(spec) + " acts on M^" +
                                std::to_string(spec.ambient_dim) + ", point has dimension " +
                                std::to_string(p.size()));
  require_mink_vector(p);
  OrbitLabel l;
  l.cls = spec.cls;
  const double scale = 1.0 + p.lpNorm<Eigen::Infinity>();
  switch (spec.cls) {
    case ActionClass::SO11:
    case ActionClass::SO21:
    case ActionClass::SOn1: return detail::from_region(spec.cls, quadric_label(p, tol));

    case ActionClass::AN: return detail::parabolic_label(spec.cls, KPrime::trivial(), p, tol);
    case ActionClass::KprimeAN: return detail::parabolic_label(spec.cls, spec.kprime, p, tol);

    case ActionClass::R1: l.stratum = Stratum::ParallelLeaf; l.invariants = {p(1)}; return l;
    case ActionClass::M1: l.stratum = Stratum::ParallelLeaf; l.invariants = {p(0)}; return l;
    case ActionClass::W1: l.stratum = Stratum::ParallelLeaf; l.invariants = {p(0) + p(1)}; return l;
    case ActionClass::R2: l.stratum = Stratum::ParallelLeaf; l.invariants = {p(2)}; return l;
    case ActionClass::M2: l.stratum = Stratum::ParallelLeaf; l.invariants = {p(0)}; return l;
    case ActionClass::W2: l.stratum = Stratum::ParallelLeaf; l.invariants = {p(1) + p(2)}; return l;

    case ActionClass::KxRe3: {
      const double rho = std::hypot(p(0), p(1));
      if (rho <= tol * scale) {
        l.stratum = Stratum::Axis;
      } else {
        l.stratum = Stratum::CircularCylinder;
        l.invariants = {rho};
      }
      return l;
    }

    case ActionClass::AxRe1: {
      Vector q(2);
      q << p(1), p(2);
      const RegionLabel r = quadric_label(q, tol);
      switch (r.region) {
        case Region::Origin: l.stratum = Stratum::AxisLine; break;
        case Region::LightRay:
          l.stratum = Stratum::NullHalfPlane;
          l.signs = {r.spatial_sign, r.time_sign};
          break;
        case Region::HyperbolicPlus: l.stratum = Stratum::HyperbolicCylinderPlus; break;
        case Region::HyperbolicMinus: l.stratum = Stratum::HyperbolicCylinderMinus; break;
        case Region::DeSitterPlus: l.stratum = Stratum::DeSitterCylinderPlus; break;
        default: l.stratum = Stratum::DeSitterCylinderMinus; break;
      }
      if (r.r > 0) l.invariants = {r.r};
      return l;
    }

    case ActionClass::ALambdaEll: {
      const double x = p(0);
      const double z = 0.5 * (p(1) + p(2));
      const bool degenerate = std::abs(z) <= tol * scale;
      if (spec.lambda == 0.0) {
        l.invariants = {x};
        if (degenerate) {
          l.stratum = Stratum::NullLine;
        } else {
          l.stratum = Stratum::HalfPlane;
          l.signs = {sign_of(z)};
        }
      } else if (degenerate) {
        l.stratum = Stratum::DegenerateW2;
      } else {
        l.stratum = Stratum::Leaf;
        l.invariants = {z * std::exp(x / spec.lambda)};
      }
      return l;
    }

    case ActionClass::NxEll: {
      const double z = 0.5 * (p(1) + p(2));
      if (std::abs(z) > tol * scale) {
        l.stratum = Stratum::AffineW2Leaf;
        l.invariants = {z};
      } else {
        l.stratum = Stratum::NullLine;
        l.invariants = {p(0)};
      }
      return l;
    }

    case ActionClass::N1xEll: {
      const double w = p(1) + p(2);
      l.stratum = Stratum::ParabolicSurface;
      l.invariants = {p(0) - w * w / (2.0 * spec.lambda)};
      return l;
    }
  }
  throw std::invalid_argument("orbit_label: unsupported action");
}

/// Stratum kinds that make up the orbit decomposition of each canonical action.
inline std::set<StratumKind> expected_inventory(const ActionSpec& spec)
{
  using S = Stratum;
  auto k = [](S s, std::vector<int> signs = {}) { return StratumKind{s, std::move(signs)}; };
  switch (spec.cls) {
    case ActionClass::SO11:
      return {k(S::Origin),         k(S::LightRay, {1, 1}),   k(S::LightRay, {1, -1}),
              k(S::LightRay, {-1, 1}), k(S::LightRay, {-1, -1}), k(S::HyperbolicPlus),
              k(S::HyperbolicMinus), k(S::DeSitterPlus),      k(S::DeSitterMinus)};
    case ActionClass::SO21:
    case ActionClass::SOn1:
      return {k(S::Origin),         k(S::LightConePlus), k(S::LightConeMinus), k(S::HyperbolicPlus),
              k(S::HyperbolicMinus), k(S::DeSitter)};
    case ActionClass::AN:
      return {k(S::Origin),          k(S::HyperbolicPlus),        k(S::HyperbolicMinus),
              k(S::RayPlusW0),       k(S::RayMinusW0),            k(S::LightConePlusOffRay),
              k(S::LightConeMinusOffRay), k(S::CylinderLine, {1}), k(S::CylinderLine, {-1}),
              k(S::DeSitterUpper),   k(S::DeSitterLower)};
    case ActionClass::KprimeAN: {
      std::set<StratumKind> inv = {k(S::Origin),          k(S::HyperbolicPlus),   k(S::HyperbolicMinus),
                                   k(S::RayPlusW0),       k(S::RayMinusW0),       k(S::LightConePlusOffRay),
                                   k(S::LightConeMinusOffRay), k(S::DeSitterUpper), k(S::DeSitterLower)};
      switch (spec.kprime.kind) {
        case KPrime::Kind::Trivial: inv.insert(k(S::CylinderLine)); break;
        case KPrime::Kind::Full: inv.insert(k(S::Cylinder)); break;
        case KPrime::Kind::Block: inv.insert(k(S::CylinderBlockOrbit)); break;
      }
      return inv;
    }
    case ActionClass::R1:
    case ActionClass::M1:
    case ActionClass::W1:
    case ActionClass::R2:
    case ActionClass::M2:
    case ActionClass::W2: return {k(S::ParallelLeaf)};
    case ActionClass::KxRe3: return {k(S::Axis), k(S::CircularCylinder)};
    case ActionClass::AxRe1:
      return {k(S::AxisLine),
              k(S::NullHalfPlane, {1, 1}),
              k(S::NullHalfPlane, {1, -1}),
              k(S::NullHalfPlane, {-1, 1}),
              k(S::NullHalfPlane, {-1, -1}),
              k(S::HyperbolicCylinderPlus),
              k(S::HyperbolicCylinderMinus),
              k(S::DeSitterCylinderPlus),
              k(S::DeSitterCylinderMinus)};
    case ActionClass::ALambdaEll:
      if (spec.lambda == 0.0) return {k(S::NullLine), k(S::HalfPlane, {1}), k(S::HalfPlane, {-1})};
      return {k(S::DegenerateW2), k(S::Leaf)};
    case ActionClass::NxEll: return {k(S::NullLine), k(S::AffineW2Leaf)};
    case ActionClass::N1xEll: return {k(S::ParabolicSurface)};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Fundamental vector fields

/// Columns X_i p + v_i over the generator basis.
inline Matrix fundamental_fields(const ActionSpec& spec, const Vector& p)
{
  Matrix m(spec.ambient_dim, spec.group_dim());
  for (int i = 0; i < spec.group_dim(); ++i) {
    const auto& g = spec.generators.basis[i];
    m.col(i) = g.linear * p + g.trans;
  }
  return m;
}

inline int orbit_dimension(const ActionSpec& spec, const Vector& p, double tol = kDefaultTol)
{
  if (p.size() != spec.ambient_dim) throw std::invalid_argument("orbit_dimension: point has wrong dimension");
  return numerical_rank(fundamental_fields(spec, p), tol);
}

/// Highest orbit dimension of the action of h found at random points.
inline int max_orbit_dimension(const Subalgebra& h, int trials, std::uint64_t seed, double tol = kDefaultTol)
{
  const int d = h.ambient_dim;
  int best = 0;
  for (int i = 0; i < trials && best < d; ++i) {
    Sampler rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
    const Vector p = rng.gaussian_vector(d) * (1.0 + i % 4);
    Matrix m(d, h.size());
    for (int j = 0; j < h.size(); ++j) m.col(j) = h.basis[j].linear * p + h.basis[j].trans;
    best = std::max(best, numerical_rank(m, tol));
  }
  return best;
}

struct CohomogeneityEstimate {
  int cohomogeneity = 0;
  int max_orbit_dim = 0;
  Vector witness;  // a point attaining the maximal orbit dimension
};

inline CohomogeneityEstimate estimate_cohomogeneity(const ActionSpec& spec, int trials, std::uint64_t seed,
                                                    double tol = kDefaultTol)
{
  if (trials < 1) throw std::invalid_argument("cohomogeneity: trials must be >= 1");
  static constexpr double radii[] = {0.5, 1.0, 2.0, 4.0};
  const int d = spec.ambient_dim;
  CohomogeneityEstimate est;
  est.witness = Vector::Zero(d);
  est.max_orbit_dim = -1;
  for (int i = 0; i < trials; ++i) {
    Sampler rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
    Vector dir = rng.gaussian_vector(d);
    const double nrm = dir.norm();
    if (nrm == 0.0) continue;
    const Vector p = dir / nrm * radii[i % 4];
    const int k = orbit_dimension(spec, p, tol);
    if (k > est.max_orbit_dim) {
      est.max_orbit_dim = k;
      est.witness = p;
      if (k == d) break;
    }
  }
  est.cohomogeneity = d - est.max_orbit_dim;
  return est;
}

inline int cohomogeneity(const ActionSpec& spec, int trials, std::uint64_t seed)
{
  return estimate_cohomogeneity(spec, trials, seed).cohomogeneity;
}

}  // namespace cohom1
