#pragma once

// Finite-dimensional subalgebras of iso(M^{n+1}) and the rank-revealing
// utilities built on them. Every rank decision uses singular values with the
// threshold tol * (largest singular value).

#include "cohom1/lie.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cohom1 {

struct Subalgebra {
  std::vector<LieElement> basis;
  int ambient_dim = 0;

  Subalgebra() = default;
  Subalgebra(std::vector<LieElement> b, int dim) : basis(std::move(b)), ambient_dim(dim)
  {
    for (const auto& e : basis)
      if (e.dim() != ambient_dim) throw std::invalid_argument("Subalgebra: basis element has wrong dimension");
  }

  int size() const { return static_cast<int>(basis.size()); }
  bool empty() const { return basis.empty(); }

  /// Columns are the flattened basis elements.
  Matrix flat_matrix() const
  {
    const int d = ambient_dim;
    Matrix m(d * d + d, size());
    for (int i = 0; i < size(); ++i) m.col(i) = basis[i].flat();
    return m;
  }
};

// ---------------------------------------------------------------------------
// Rank-revealing helpers on column spans

/// Numerical rank with threshold tol * sigma_max (zero matrix has rank 0).
inline int numerical_rank(const Matrix& m, double tol = kDefaultTol)
{
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  return static_cast<int>((s.array() > tol * s(0)).count());
}

/// Orthonormal (Euclidean) basis of the column span, as columns.
inline Matrix orthonormal_span(const Matrix& m, double tol = kDefaultTol)
{
  if (m.cols() == 0) return Matrix(m.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  int r = 0;
  if (s.size() > 0 && s(0) > 0) r = static_cast<int>((s.array() > tol * s(0)).count());
  return svd.matrixU().leftCols(r);
}

/// Largest entrywise deviation of the columns of `m` from the span of the
/// orthonormal columns `q`.
inline double projection_residual(const Matrix& q, const Matrix& m)
{
  if (m.cols() == 0) return 0.0;
  const Matrix r = m - q * (q.transpose() * m);
  return r.lpNorm<Eigen::Infinity>();
}

/// Basis reorthonormalized with respect to <(X,u),(Y,v)> = tr(X^T Y) + u·v.
inline Subalgebra canonicalize(const Subalgebra& h, double tol = kDefaultTol)
{
  const Matrix q = orthonormal_span(h.flat_matrix(), tol);
  std::vector<LieElement> b;
  for (int i = 0; i < q.cols(); ++i) b.push_back(LieElement::from_flat(q.col(i), h.ambient_dim));
  return {std::move(b), h.ambient_dim};
}

inline int subalgebra_dimension(const Subalgebra& h, double tol = kDefaultTol)
{
  return numerical_rank(h.flat_matrix(), tol);
}

/// Max residual of pairwise brackets against the span of the (orthonormalized) basis.
inline double closure_residual(const Subalgebra& h, double tol = kDefaultTol)
{
  const Subalgebra c = canonicalize(h, tol);
  if (c.empty()) return 0.0;
  const Matrix q = c.flat_matrix();
  double worst = 0.0;
  for (int i = 0; i < c.size(); ++i)
    for (int j = i + 1; j < c.size(); ++j) {
      const Vector b = bracket(c.basis[i], c.basis[j]).flat();
      worst = std::max(worst, (b - q * (q.transpose() * b)).norm());
    }
  return worst;
}

inline bool subalgebra_closure_check(const Subalgebra& h, double tol = kDefaultTol)
{
  return closure_residual(h, tol) <= tol;
}

/// Splitting of a subalgebra into its translation ideal h ∩ M^{n+1} and a
/// complement mapped isomorphically onto pi1(h).
struct Splitting {
  std::vector<Vector> translations;     // orthonormal basis of h ∩ M^{n+1}
  std::vector<LieElement> complement;   // elements with independent linear parts
};

inline Splitting split_subalgebra(const Subalgebra& h, double tol = kDefaultTol)
{
  Splitting out;
  const int d = h.ambient_dim;
  const Subalgebra c = canonicalize(h, tol);
  const int k = c.size();
  if (k == 0) return out;

  Matrix lin(d * d, k);
  Matrix tr(d, k);
  for (int i = 0; i < k; ++i) {
    lin.col(i) = c.basis[i].flat().head(d * d);
    tr.col(i) = c.basis[i].trans;
  }
  // c is orthonormal, so its overall scale is 1; linear parts below tol are zero.
  Eigen::JacobiSVD<Matrix> svd(lin, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > tol) ++r;
  const Matrix& v = svd.matrixV();

  for (int i = 0; i < r; ++i) {
    LieElement e = LieElement::zero(d);
    for (int j = 0; j < k; ++j) e = e + c.basis[j] * v(j, i);
    out.complement.push_back(e);
  }
  if (r < k) {
    const Matrix kernel_trans = tr * v.rightCols(k - r);
    const Matrix q = orthonormal_span(kernel_trans, tol);
    for (int i = 0; i < q.cols(); ++i) out.translations.push_back(q.col(i));
  }
  return out;
}

struct TranslationPart {
  int dim = 0;
  std::vector<Vector> basis;
};

inline TranslationPart translation_part(const Subalgebra& h, double tol = kDefaultTol)
{
  Splitting s = split_subalgebra(h, tol);
  return {static_cast<int>(s.translations.size()), std::move(s.translations)};
}

/// Image of h under projection to so(n,1), as a subalgebra with zero translations.
inline Subalgebra pi1(const Subalgebra& h, double tol = kDefaultTol)
{
  const int d = h.ambient_dim;
  std::vector<LieElement> lin;
  for (const auto& e : h.basis) lin.push_back(LieElement::linear_only(e.linear));
  Subalgebra img(std::move(lin), d);
  if (img.empty()) return img;
  // Drop translations entirely before measuring rank so that scale comes from linear parts only.
  const Matrix m = img.flat_matrix();
  const Matrix q = orthonormal_span(m, tol);
  std::vector<LieElement> b;
  for (int i = 0; i < q.cols(); ++i) b.push_back(LieElement::from_flat(q.col(i), d));
  return {std::move(b), d};
}

/// Entrywise residual of span(a) against span(b) in both directions; large if dimensions differ.
inline double span_residual(const Subalgebra& a, const Subalgebra& b, double tol = kDefaultTol)
{
  const Matrix qa = orthonormal_span(a.flat_matrix(), tol);
  const Matrix qb = orthonormal_span(b.flat_matrix(), tol);
  if (qa.cols() != qb.cols()) return 1.0;
  return std::max(projection_residual(qb, qa), projection_residual(qa, qb));
}

/// Residual of span(inner) ⊂ span(outer).
inline double containment_residual(const Subalgebra& inner, const Subalgebra& outer, double tol = kDefaultTol)
{
  const Matrix qi = orthonormal_span(inner.flat_matrix(), tol);
  const Matrix qo = orthonormal_span(outer.flat_matrix(), tol);
  return projection_residual(qo, qi);
}

inline Subalgebra adjoint(const IsoElement& g, const Subalgebra& h)
{
  std::vector<LieElement> b;
  for (const auto& e : h.basis) b.push_back(adjoint(g, e));
  return {std::move(b), h.ambient_dim};
}

}  // namespace cohom1
