#pragma once

// The isometry group I(M^{n+1}) = O(n,1) ⋉ M^{n+1} and its Lie algebra
// so(n,1) ⊕ M^{n+1}. Group elements act by p ↦ x p + u.

#include "cohom1/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohom1 {

/// X + v with X in so(n,1) and v a translation.
struct LieElement {
  Matrix linear;
  Vector trans;

  LieElement() = default;
  LieElement(Matrix x, Vector v) : linear(std::move(x)), trans(std::move(v))
  {
    if (linear.rows() != linear.cols() || linear.rows() != trans.size())
      throw std::invalid_argument("LieElement: linear part must be square and match the translation");
  }

  static LieElement zero(int dim) { return {Matrix::Zero(dim, dim), Vector::Zero(dim)}; }
  static LieElement linear_only(Matrix x)
  {
    const auto d = x.rows();
    return {std::move(x), Vector::Zero(d)};
  }
  static LieElement translation(Vector v)
  {
    const auto d = v.size();
    return {Matrix::Zero(d, d), std::move(v)};
  }

  int dim() const { return static_cast<int>(trans.size()); }

  LieElement operator+(const LieElement& o) const { return {linear + o.linear, trans + o.trans}; }
  LieElement operator-(const LieElement& o) const { return {linear - o.linear, trans - o.trans}; }
  LieElement operator*(double s) const { return {linear * s, trans * s}; }
  friend LieElement operator*(double s, const LieElement& a) { return a * s; }

  /// Flattened coordinates (row-major matrix entries, then translation).
  Vector flat() const
  {
    const int d = dim();
    Vector f(d * d + d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) f(i * d + j) = linear(i, j);
    f.tail(d) = trans;
    return f;
  }

  static LieElement from_flat(const Vector& f, int d)
  {
    LieElement e = zero(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) e.linear(i, j) = f(i * d + j);
    e.trans = f.tail(d);
    return e;
  }
};

/// (x, u): Lorentz matrix x and translation u.
struct IsoElement {
  Matrix linear;
  Vector trans;

  IsoElement() = default;
  IsoElement(Matrix x, Vector u) : linear(std::move(x)), trans(std::move(u))
  {
    if (linear.rows() != linear.cols() || linear.rows() != trans.size())
      throw std::invalid_argument("IsoElement: linear part must be square and match the translation");
  }

  static IsoElement identity(int dim) { return {Matrix::Identity(dim, dim), Vector::Zero(dim)}; }
  static IsoElement linear_only(Matrix x)
  {
    const auto d = x.rows();
    return {std::move(x), Vector::Zero(d)};
  }
  static IsoElement translation(Vector u)
  {
    const auto d = u.size();
    return {Matrix::Identity(d, d), std::move(u)};
  }

  int dim() const { return static_cast<int>(trans.size()); }
};

namespace detail {
inline void require_same_dim(int a, int b, const char* what)
{
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Matrix-level predicates

/// J X^T J = -X, i.e. X in so(n,1).
inline bool is_lorentz_algebra(const Matrix& x, double tol = 1e-12)
{
  const Matrix j = minkowski_metric(static_cast<int>(x.rows()));
  return (j * x.transpose() * j + x).lpNorm<Eigen::Infinity>() <= tol * std::max(1.0, x.lpNorm<Eigen::Infinity>());
}

/// x^T J x = J, i.e. x in O(n,1).
inline bool is_lorentz_group(const Matrix& x, double tol = 1e-10)
{
  const Matrix j = minkowski_metric(static_cast<int>(x.rows()));
  return (x.transpose() * j * x - j).lpNorm<Eigen::Infinity>() <=
         tol * std::max(1.0, x.lpNorm<Eigen::Infinity>() * x.lpNorm<Eigen::Infinity>());
}

/// Membership in SO°(n,1): Lorentz, det > 0 and time-orientation preserving.
inline bool in_restricted_lorentz(const Matrix& x, double tol = 1e-10)
{
  return is_lorentz_group(x, tol) && x.determinant() > 0 && x(x.rows() - 1, x.cols() - 1) > 0;
}

/// Cartan involution θ(X) = -X^T.
inline Matrix cartan_involution(const Matrix& x) { return -x.transpose(); }

// ---------------------------------------------------------------------------
// Algebra

inline LieElement bracket(const LieElement& a, const LieElement& b)
{
  detail::require_same_dim(a.dim(), b.dim(), "bracket");
  return {a.linear * b.linear - b.linear * a.linear, a.linear * b.trans - b.linear * a.trans};
}

inline Matrix safe_inverse(const Matrix& x)
{
  Eigen::FullPivLU<Matrix> lu(x);
  if (!lu.isInvertible()) throw std::domain_error("singular linear part");
  return lu.inverse();
}

/// Ad(g)(Y + v) = xYx^{-1} + (xv - (xYx^{-1})u).
inline LieElement adjoint(const IsoElement& g, const LieElement& y)
{
  detail::require_same_dim(g.dim(), y.dim(), "adjoint");
  const Matrix conj = g.linear * y.linear * safe_inverse(g.linear);
  return {conj, g.linear * y.trans - conj * g.trans};
}

// ---------------------------------------------------------------------------
// Group

inline IsoElement iso_compose(const IsoElement& g, const IsoElement& h)
{
  detail::require_same_dim(g.dim(), h.dim(), "iso_compose");
  return {g.linear * h.linear, g.trans + g.linear * h.trans};
}

inline IsoElement iso_inverse(const IsoElement& g)
{
  const Matrix inv = safe_inverse(g.linear);
  return {inv, -inv * g.trans};
}

inline Vector iso_apply(const IsoElement& g, const Vector& p)
{
  detail::require_same_dim(g.dim(), static_cast<int>(p.size()), "iso_apply");
  return g.linear * p + g.trans;
}

/// Matrix exponential by scaling and squaring around a truncated Taylor series.
inline Matrix expm(const Matrix& a)
{
  const auto n = a.rows();
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.25) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  const Matrix b = a / std::ldexp(1.0, squarings);

  Matrix sum = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k <= 30; ++k) {
    term = term * b / static_cast<double>(k);
    sum += term;
    if (term.lpNorm<Eigen::Infinity>() <= 1e-18 * sum.lpNorm<Eigen::Infinity>()) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

/// Exp(t y) in the semidirect group, via the homogeneous embedding
/// [[X, v], [0, 0]] so that the translation integral comes out of one exponential.
inline IsoElement exp_iso(const LieElement& y, double t = 1.0)
{
  if (!std::isfinite(t)) throw std::invalid_argument("exp_iso: t must be finite");
  const int d = y.dim();
  Matrix h = Matrix::Zero(d + 1, d + 1);
  h.topLeftCorner(d, d) = t * y.linear;
  h.topRightCorner(d, 1) = t * y.trans;
  const Matrix e = expm(h);
  return {e.topLeftCorner(d, d), e.topRightCorner(d, 1)};
}

// ---------------------------------------------------------------------------
// Iwasawa generators of so(n,1) in the block form
//   X = [[B, b], [b^T, 0]],  B in so(n), b in R^n.

struct IwasawaBasis {
  int n = 0;
  std::vector<LieElement> k_gens;   // so(n) acting on the first n coordinates
  LieElement a_gen;                 // boost in the (e_n, e_{n+1}) plane
  std::vector<LieElement> n_gens;   // root space g_alpha ≅ R^{n-1}
  std::vector<LieElement> k0_gens;  // so(n-1) acting on the first n-1 coordinates
};

namespace detail {
/// Rotation generator E_{ji} - E_{ij} (0-based i < j); for the (1,2) plane this is Y_k.
inline Matrix rotation_generator(int dim, int i, int j)
{
  Matrix x = Matrix::Zero(dim, dim);
  x(j, i) = 1.0;
  x(i, j) = -1.0;
  return x;
}

/// g_alpha element for b in R^{n-1}: rows [0 b b; -b^T 0 0; b^T 0 0].
inline Matrix root_generator(const Vector& b)
{
  const auto m = b.size();
  const auto d = m + 2;
  Matrix x = Matrix::Zero(d, d);
  x.block(0, m, m, 1) = b;
  x.block(0, m + 1, m, 1) = b;
  x.block(m, 0, 1, m) = -b.transpose();
  x.block(m + 1, 0, 1, m) = b.transpose();
  return x;
}
}  // namespace detail

inline Matrix boost_generator(int dim)
{
  Matrix x = Matrix::Zero(dim, dim);
  x(dim - 2, dim - 1) = -1.0;
  x(dim - 1, dim - 2) = -1.0;
  return x;
}

inline IwasawaBasis iwasawa_generators(int n)
{
  if (n < 1) throw std::invalid_argument("iwasawa_generators: n must be >= 1");
  const int d = n + 1;
  IwasawaBasis out;
  out.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out.k_gens.push_back(LieElement::linear_only(detail::rotation_generator(d, i, j)));
      if (j < n - 1) out.k0_gens.push_back(LieElement::linear_only(detail::rotation_generator(d, i, j)));
    }
  out.a_gen = LieElement::linear_only(boost_generator(d));
  for (int i = 0; i < n - 1; ++i) {
    Vector b = Vector::Zero(n - 1);
    b(i) = 1.0;
    out.n_gens.push_back(LieElement::linear_only(detail::root_generator(b)));
  }
  return out;
}

// Named generators of so(2,1).
inline Matrix y_k() { return detail::rotation_generator(3, 0, 1); }
inline Matrix y_a() { return boost_generator(3); }
inline Matrix y_n()
{
  Vector b(1);
  b << 1.0;
  return detail::root_generator(b);
}

/// The so(1,1) generator [[0, 1], [1, 0]].
inline Matrix y_so11()
{
  Matrix y(2, 2);
  y << 0, 1, 1, 0;
  return y;
}

}  // namespace cohom1
