#pragma once

// Minkowski space M^{n+1}: coordinates (x_1, ..., x_n, x_{n+1}) with the last
// coordinate time-like and inner product sum_{i<=n} u_i v_i - u_{n+1} v_{n+1}.

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace cohom1 {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kDefaultTol = 1e-9;

/// Standard basis vector e_i of M^{dim}, 1-based as in the usual notation.
inline Vector basis_vector(int dim, int i)
{
  if (i < 1 || i > dim) throw std::out_of_range("basis_vector: index out of range");
  Vector e = Vector::Zero(dim);
  e(i - 1) = 1.0;
  return e;
}

/// The null vector w0 = e_n - e_{n+1} spanning the degenerate direction of W^n.
inline Vector null_w0(int dim)
{
  if (dim < 2) throw std::invalid_argument("null_w0: ambient dimension must be >= 2");
  Vector w = Vector::Zero(dim);
  w(dim - 2) = 1.0;
  w(dim - 1) = -1.0;
  return w;
}

/// diag(1, ..., 1, -1)
inline Matrix minkowski_metric(int dim)
{
  Matrix j = Matrix::Identity(dim, dim);
  j(dim - 1, dim - 1) = -1.0;
  return j;
}

inline void require_mink_vector(const Vector& v)
{
  if (v.size() < 2) throw std::invalid_argument("Minkowski vector needs ambient dimension >= 2");
  if (!v.allFinite()) throw std::invalid_argument("Minkowski vector has non-finite entries");
}

inline double lorentz_inner(const Vector& u, const Vector& v)
{
  if (u.size() != v.size())
    throw std::invalid_argument("lorentz_inner: dimension mismatch (" + std::to_string(u.size()) +
                                " vs " + std::to_string(v.size()) + ")");
  const Eigen::Index t = u.size() - 1;
  return u.head(t).dot(v.head(t)) - u(t) * v(t);
}

inline double lorentz_norm2(const Vector& v) { return lorentz_inner(v, v); }

enum class CausalClass { Zero, Spacelike, TimelikeFuture, TimelikePast, LightlikeFuture, LightlikePast };

inline std::string to_string(CausalClass c)
{
  switch (c) {
    case CausalClass::Zero: return "Zero";
    case CausalClass::Spacelike: return "Spacelike";
    case CausalClass::TimelikeFuture: return "TimelikeFuture";
    case CausalClass::TimelikePast: return "TimelikePast";
    case CausalClass::LightlikeFuture: return "LightlikeFuture";
    case CausalClass::LightlikePast: return "LightlikePast";
  }
  return "?";
}

/// Light-cone test |<v,v>| <= tol (1 + |v|^2); keeps large vectors stable.
inline bool near_null(const Vector& v, double tol)
{
  return std::abs(lorentz_norm2(v)) <= tol * (1.0 + v.squaredNorm());
}

/// Time orientation is read off the sign of the last coordinate, so that
/// e_{n+1} is future-directed and w0 = e_n - e_{n+1} is past-directed.
inline CausalClass causal_class(const Vector& v, double tol = kDefaultTol)
{
  if (!(tol > 0)) throw std::invalid_argument("causal_class: tol must be positive");
  if (v.lpNorm<Eigen::Infinity>() <= tol) return CausalClass::Zero;
  const bool future = v(v.size() - 1) > 0;
  if (near_null(v, tol)) return future ? CausalClass::LightlikeFuture : CausalClass::LightlikePast;
  const double q = lorentz_norm2(v);
  if (q > 0) return CausalClass::Spacelike;
  return future ? CausalClass::TimelikeFuture : CausalClass::TimelikePast;
}

/// Orbit strata of the restricted Lorentz group SO°(n,1) on M^{n+1}.
/// In M^2 the de Sitter and light-cone strata split further by the sign of x_1.
enum class Region {
  Origin,
  LightConePlus,
  LightConeMinus,
  HyperbolicPlus,
  HyperbolicMinus,
  DeSitter,
  DeSitterPlus,
  DeSitterMinus,
  LightRay,
};

struct RegionLabel {
  Region region = Region::Origin;
  double r = 0.0;        // hyperboloid radius; zero for origin and light cones
  int spatial_sign = 0;  // LightRay only: sign of x_1
  int time_sign = 0;     // LightRay only: sign of x_2

  bool operator==(const RegionLabel&) const = default;
};

inline std::string to_string(Region r)
{
  switch (r) {
    case Region::Origin: return "Origin";
    case Region::LightConePlus: return "LightConePlus";
    case Region::LightConeMinus: return "LightConeMinus";
    case Region::HyperbolicPlus: return "HyperbolicPlus";
    case Region::HyperbolicMinus: return "HyperbolicMinus";
    case Region::DeSitter: return "DeSitter";
    case Region::DeSitterPlus: return "DeSitterPlus";
    case Region::DeSitterMinus: return "DeSitterMinus";
    case Region::LightRay: return "LightRay";
  }
  return "?";
}

inline int sign_of(double x) { return (x > 0) - (x < 0); }

inline RegionLabel quadric_label(const Vector& v, double tol = kDefaultTol)
{
  const CausalClass c = causal_class(v, tol);
  const bool plane = v.size() == 2;
  RegionLabel out;
  switch (c) {
    case CausalClass::Zero:
      out.region = Region::Origin;
      break;
    case CausalClass::LightlikeFuture:
    case CausalClass::LightlikePast:
      if (plane) {
        out.region = Region::LightRay;
        out.spatial_sign = sign_of(v(0));
        out.time_sign = c == CausalClass::LightlikeFuture ? 1 : -1;
      } else {
        out.region = c == CausalClass::LightlikeFuture ? Region::LightConePlus : Region::LightConeMinus;
      }
      break;
    case CausalClass::TimelikeFuture:
    case CausalClass::TimelikePast:
      out.region = c == CausalClass::TimelikeFuture ? Region::HyperbolicPlus : Region::HyperbolicMinus;
      out.r = std::sqrt(-lorentz_norm2(v));
      break;
    case CausalClass::Spacelike:
      out.r = std::sqrt(lorentz_norm2(v));
      if (plane)
        out.region = v(0) > 0 ? Region::DeSitterPlus : Region::DeSitterMinus;
      else
        out.region = Region::DeSitter;
      break;
  }
  return out;
}

inline std::string to_string(const RegionLabel& l)
{
  std::string s = to_string(l.region);
  if (l.region == Region::LightRay) {
    s += l.spatial_sign > 0 ? "(+," : "(-,";
    s += l.time_sign > 0 ? "+)" : "-)";
  } else if (l.r > 0) {
    s += "(" + std::to_string(l.r) + ")";
  }
  return s;
}

/// Membership in the degenerate subspace W^n = R^{n-1} + R w0, i.e. x_n + x_{n+1} = 0.
inline bool in_w_subspace(const Vector& p, double tol = kDefaultTol)
{
  if (p.size() < 3) throw std::invalid_argument("in_w_subspace: ambient dimension must be >= 3");
  const Eigen::Index n = p.size() - 1;
  return std::abs(p(n - 1) + p(n)) <= tol;
}

/// Membership in the cylinder Z^{n-1}(r) = W^n ∩ dS^n(r) = S^{n-2}(r) x R w0.
inline bool in_cylinder(const Vector& p, double r, double tol = kDefaultTol)
{
  if (!(r > 0)) throw std::invalid_argument("in_cylinder: r must be positive");
  if (!in_w_subspace(p, tol)) return false;
  const Eigen::Index n = p.size() - 1;
  return std::abs(p.head(n - 1).squaredNorm() - r * r) <= tol * (1.0 + r * r);
}

}  // namespace cohom1
