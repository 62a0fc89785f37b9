#pragma once

// Constructive orbit-equivalence classification of cohomogeneity-one
// subalgebras of iso(M^2) and iso(M^3).
//
// The case split runs on d_T = dim(h ∩ M) and d_P = dim pi1(h). Each step
// conjugates the current subalgebra by an explicit isometry and records it;
// the composite of the chain maps the input onto the canonical representative.

#include "cohom1/catalog.hpp"
#include "cohom1/lie.hpp"
#include "cohom1/subalgebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohom1 {

enum class Verdict { Classified, NotCohomogeneityOne, NotASubalgebra };

inline std::string to_string(Verdict v)
{
  switch (v) {
    case Verdict::Classified: return "Classified";
    case Verdict::NotCohomogeneityOne: return "NotCohomogeneityOne";
    case Verdict::NotASubalgebra: return "NotASubalgebra";
  }
  return "?";
}

struct ConjugationStep {
  IsoElement g;
  std::string description;
};

struct ClassificationResult {
  Verdict verdict = Verdict::NotASubalgebra;
  std::optional<ActionSpec> canonical;
  std::vector<ConjugationStep> conjugators;  // applied first to last
  double residual = 0.0;
  bool outside_identity_component = false;   // a reflection was used
  bool exact_conjugacy = true;               // false: h strictly contains the canonical algebra, same orbits
  std::string reason;

  /// g_k ∘ ... ∘ g_1 for the chain g_1, ..., g_k.
  IsoElement composite(int dim) const
  {
    IsoElement g = IsoElement::identity(dim);
    for (const auto& s : conjugators) g = iso_compose(s.g, g);
    return g;
  }
};

enum class MetricType { Riemannian, Lorentzian, Degenerate };

inline std::string to_string(MetricType m)
{
  switch (m) {
    case MetricType::Riemannian: return "Riemannian";
    case MetricType::Lorentzian: return "Lorentzian";
    case MetricType::Degenerate: return "Degenerate";
  }
  return "?";
}

/// Type of the restriction of the Lorentz form to span(columns of b).
inline MetricType metric_type(const Matrix& b, double tol = kDefaultTol)
{
  const Matrix q = orthonormal_span(b, tol);
  const Matrix g = q.transpose() * minkowski_metric(static_cast<int>(q.rows())) * q;
  Eigen::SelfAdjointEigenSolver<Matrix> es(g);
  const Vector ev = es.eigenvalues();
  // q has unit columns, so the floor of 1 keeps a null line from being judged against its own rounding.
  const double thr = tol * std::max(1.0, ev.cwiseAbs().sum());
  bool neg = false;
  for (int i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) <= thr) return MetricType::Degenerate;
    if (ev(i) < 0) neg = true;
  }
  return neg ? MetricType::Lorentzian : MetricType::Riemannian;
}

// ---------------------------------------------------------------------------
// Alignment helpers

namespace detail {

/// g in SO°(n,1) with g t = ±e_target for a non-null t; the sign of t is
/// fixed first so that an already aligned vector gives the identity.
inline Matrix align_nonnull(Vector t, int target)
{
  const int d = static_cast<int>(t.size());
  const int time = d - 1;
  const double q = lorentz_norm2(t);
  if (q == 0.0) throw std::domain_error("align_nonnull: null vector");
  if ((target == time) != (q < 0)) throw std::domain_error("align_nonnull: causal type does not match target");
  if (t(target) < 0 || (t(target) == 0 && t(t.size() - 1) < 0)) t = -t;
  t /= std::sqrt(std::abs(q));

  Matrix frame = Matrix::Zero(d, d);
  std::vector<bool> filled(d, false);
  frame.col(target) = t;
  filled[target] = true;

  auto orthogonalize = [&](Vector c) {
    for (int j = 0; j < d; ++j)
      if (filled[j]) c -= lorentz_inner(c, frame.col(j)) / lorentz_norm2(frame.col(j)) * frame.col(j);
    return c;
  };

  if (!filled[time]) {
    Vector c = orthogonalize(basis_vector(d, d));
    frame.col(time) = c / std::sqrt(-lorentz_norm2(c));
    filled[time] = true;
  }
  // Remaining complement is positive definite; choose the best-conditioned candidate per slot.
  std::vector<bool> used(d, false);
  used[target] = true;
  used[time] = true;
  for (int slot = 0; slot < d; ++slot) {
    if (filled[slot]) continue;
    int best = -1;
    double best_norm = -1.0;
    Vector best_vec;
    for (int cand = 0; cand < d; ++cand) {
      if (used[cand]) continue;
      const Vector c = orthogonalize(basis_vector(d, cand + 1));
      const double nn = lorentz_norm2(c);
      if (nn > best_norm + 1e-12) {
        best_norm = nn;
        best = cand;
        best_vec = c;
      }
    }
    // Prefer the slot's own basis vector when it is as good as the best.
    if (!used[slot]) {
      const Vector c = orthogonalize(basis_vector(d, slot + 1));
      if (lorentz_norm2(c) >= 0.5 * best_norm) {
        best = slot;
        best_vec = c;
        best_norm = lorentz_norm2(c);
      }
    }
    if (best < 0 || best_norm <= 0) throw std::domain_error("align_nonnull: degenerate frame");
    used[best] = true;
    frame.col(slot) = best_vec / std::sqrt(best_norm);
    filled[slot] = true;
  }

  if (frame(time, time) < 0) frame.col(time) *= -1.0;
  if (frame.determinant() < 0) {
    int flip = -1;
    for (int j = 0; j < d - 1; ++j)
      if (j != target) {
        flip = j;
        break;
      }
    if (flip < 0) flip = target;
    frame.col(flip) *= -1.0;
  }
  const Matrix j = minkowski_metric(d);
  return j * frame.transpose() * j;
}

/// Rotation about e3 in M^3 taking the null vector t onto a positive
/// multiple of w0 = e2 - e3 (after making t past-directed).
inline Matrix align_null_to_ell(Vector t)
{
  if (t(2) > 0) t = -t;
  const double phi = std::atan2(t(1), t(0));
  const double theta = std::numbers::pi / 2 - phi;
  Matrix k = Matrix::Identity(3, 3);
  k(0, 0) = std::cos(theta);
  k(0, 1) = -std::sin(theta);
  k(1, 0) = std::sin(theta);
  k(1, 1) = std::cos(theta);
  return k;
}

/// Minimal-norm least squares with singular values below rel * sigma_max
/// treated as zero (the default rank rule of the QR solvers keeps rounding
/// noise and blows up the solution).
inline Vector truncated_solve(const Matrix& a, const Vector& b, double rel = 1e-10)
{
  if (a.cols() == 0) return Vector(0);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(rel);
  return svd.solve(b);
}

/// Least-squares coefficients of x against the matrices in `basis` (Frobenius).
inline Vector fit_linear(const Matrix& x, const std::vector<Matrix>& basis, double* residual)
{
  const auto d = x.rows();
  Matrix a(d * d, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) a.col(static_cast<Eigen::Index>(i)) = basis[i].reshaped();
  const Vector rhs = x.reshaped();
  const Vector c = truncated_solve(a, rhs);
  if (residual) *residual = (a * c - rhs).lpNorm<Eigen::Infinity>();
  return c;
}

/// Minimal-norm c with X_i c = v_i modulo span(trans) for every element; the
/// isometry (I, c) then strips the removable translation parts.
inline Vector stripping_translation(const std::vector<LieElement>& elems, const std::vector<Vector>& trans,
                                    double* residual)
{
  const int d = elems.empty() ? (trans.empty() ? 0 : static_cast<int>(trans[0].size())) : elems[0].dim();
  Matrix proj = Matrix::Identity(d, d);
  for (const auto& t : trans) proj -= t * t.transpose() / t.squaredNorm();
  const auto m = static_cast<Eigen::Index>(elems.size());
  Matrix a(d * m, d);
  Vector b(d * m);
  for (Eigen::Index i = 0; i < m; ++i) {
    a.middleRows(i * d, d) = proj * elems[i].linear;
    b.segment(i * d, d) = proj * elems[i].trans;
  }
  const Vector c = truncated_solve(a, b);
  if (residual) *residual = (a * c - b).lpNorm<Eigen::Infinity>();
  return c;
}

/// Mutable state of a classification run.
struct Run {
  int dim;
  Subalgebra h;
  ClassificationResult result;

  void apply(const IsoElement& g, std::string what)
  {
    const double off = std::max((g.linear - Matrix::Identity(dim, dim)).lpNorm<Eigen::Infinity>(),
                                g.trans.lpNorm<Eigen::Infinity>());
    if (off <= 1e-15) return;  // identity up to rounding: nothing to record
    h = adjoint(g, h);
    result.conjugators.push_back({g, std::move(what)});
  }

  Splitting split(double tol) const { return split_subalgebra(h, tol); }
};

inline ClassificationResult reject(Verdict v, std::string reason)
{
  ClassificationResult r;
  r.verdict = v;
  r.reason = std::move(reason);
  return r;
}

inline Subalgebra span_of(const std::vector<LieElement>& elems, const std::vector<Vector>& trans, int dim)
{
  std::vector<LieElement> b = elems;
  for (const auto& t : trans) b.push_back(LieElement::translation(t));
  return {std::move(b), dim};
}

/// Finalize: record canonical class and measure Ad(composite)(input) against it.
inline ClassificationResult finish(Run& run, const Subalgebra& input, ActionSpec spec, double tol)
{
  ClassificationResult r = std::move(run.result);
  r.verdict = Verdict::Classified;
  const Subalgebra mapped = adjoint(r.composite(run.dim), input);
  r.residual = r.exact_conjugacy ? span_residual(mapped, spec.generators, tol)
                                 : containment_residual(spec.generators, mapped, tol);
  r.canonical = std::move(spec);
  return r;
}

inline Matrix reflection_e1(int dim)
{
  Matrix r = Matrix::Identity(dim, dim);
  r(0, 0) = -1.0;
  return r;
}

/// h = R(aY_a + bY_n + v) ⊕ ℓ in M^3, with ℓ already the translation ideal.
/// Brings it to R(Y_a + λe1) ⊕ ℓ or R(Y_n + λe3) ⊕ ℓ and returns λ (signed).
struct LightlikeReduction {
  bool boost_family = true;  // true: A_λ family, false: N_λ family
  double lambda = 0.0;
};

inline std::optional<LightlikeReduction> reduce_lightlike(Run& run, double tol, std::string* why)
{
  const Vector ell = null_w0(3);
  auto sp = run.split(tol);
  if (sp.complement.size() != 1 || sp.translations.size() != 1) {
    if (why) *why = "expected one linear generator over the light-like line";
    return std::nullopt;
  }
  double fit_res = 0.0;
  Vector ab = fit_linear(sp.complement[0].linear, {y_a(), y_n()}, &fit_res);
  const double scale = ab.cwiseAbs().maxCoeff();
  if (!(scale > 0) || fit_res > 1e-7 * scale) {
    if (why) *why = "linear part does not normalize the light-like line";
    return std::nullopt;
  }
  LightlikeReduction out;
  if (std::abs(ab(0)) > 1e-8 * scale) {
    const double beta = ab(1) / ab(0);
    if (beta != 0.0) run.apply(IsoElement::linear_only(exp_iso(LieElement::linear_only(y_n()), beta).linear),
                               "n_beta removing the nilpotent component");
    sp = run.split(tol);
    ab = fit_linear(sp.complement[0].linear, {y_a(), y_n()}, &fit_res);
    LieElement e = sp.complement[0] * (1.0 / ab(0));
    double strip_res = 0.0;
    const Vector c = stripping_translation({e}, {ell}, &strip_res);
    if (c.norm() > 0) run.apply(IsoElement::translation(c), "translation stripping v to a multiple of e1");
    out.boost_family = true;
    out.lambda = (e.trans - e.linear * c)(0);
    const double lam_tol = 1e-8 * (1.0 + e.trans.norm());
    if (std::abs(out.lambda) <= lam_tol) out.lambda = 0.0;
  } else {
    LieElement e = sp.complement[0] * (1.0 / ab(1));
    double strip_res = 0.0;
    const Vector c = stripping_translation({e}, {ell}, &strip_res);
    if (c.norm() > 0) run.apply(IsoElement::translation(c), "translation stripping v to a multiple of e3");
    const Vector r = e.trans - e.linear * c;
    out.boost_family = false;
    out.lambda = r(1) + r(2);
    const double lam_tol = 1e-8 * (1.0 + e.trans.norm());
    if (std::abs(out.lambda) <= lam_tol) out.lambda = 0.0;
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// g ∈ SO°(2,1) with Ad(g)s = a ⊕ n for a two-dimensional subalgebra s of so(2,1).
inline IsoElement pi1_to_standard(const Subalgebra& s, double tol = kDefaultTol)
{
  if (s.ambient_dim != 3) throw std::invalid_argument("pi1_to_standard: expects a subalgebra of so(2,1)");
  const Subalgebra c = pi1(s, tol);
  if (c.size() != 2) throw std::domain_error("pi1_to_standard: subalgebra is not two-dimensional");
  const Matrix nil = bracket(c.basis[0], c.basis[1]).linear;
  const double nn = nil.norm();
  if (nn <= 1e-8) throw std::domain_error("pi1_to_standard: no common invariant null line (abelian)");
  Eigen::JacobiSVD<Matrix> svd(nil / nn, Eigen::ComputeFullV);
  const Vector w = svd.matrixV().col(2);
  const auto& sv = svd.singularValues();
  bool ok = sv(2) <= 1e-7 && sv(1) > 1e-7 && std::abs(lorentz_norm2(w)) <= 1e-7;
  for (const auto& e : c.basis) {
    const Vector xw = e.linear * w;
    ok = ok && (xw - w.dot(xw) * w).norm() <= 1e-7 * (1.0 + e.linear.norm());
  }
  if (!ok) throw std::domain_error("pi1_to_standard: no common invariant null line");
  return IsoElement::linear_only(detail::align_null_to_ell(w));
}

/// λ of a subalgebra R(Y_a + v) ⊕ ℓ or R(Y_n + v) ⊕ ℓ after translation
/// stripping and the reflection e1 ↦ -e1 (so the result is >= 0).
inline double extract_lambda(const Subalgebra& h, double tol = kDefaultTol)
{
  if (h.ambient_dim != 3) throw std::invalid_argument("extract_lambda: expects a subalgebra of iso(M^3)");
  const Splitting sp = split_subalgebra(h, tol);
  const Vector ell = null_w0(3) / std::sqrt(2.0);
  if (sp.translations.size() != 1 || std::abs(std::abs(sp.translations[0].dot(ell)) - 1.0) > 1e-8 ||
      sp.complement.size() != 1)
    throw std::invalid_argument("extract_lambda: expected R(Y + v) ⊕ ℓ");
  double res_a = 0.0, res_n = 0.0;
  const Vector ca = detail::fit_linear(sp.complement[0].linear, {y_a()}, &res_a);
  const Vector cn = detail::fit_linear(sp.complement[0].linear, {y_n()}, &res_n);
  const bool is_a = std::abs(ca(0)) > 0 && res_a <= 1e-8 * std::max(1.0, std::abs(ca(0)));
  const bool is_n = std::abs(cn(0)) > 0 && res_n <= 1e-8 * std::max(1.0, std::abs(cn(0)));
  if (!is_a && !is_n)
    throw std::invalid_argument("extract_lambda: linear part is neither a multiple of Y_a nor of Y_n");
  detail::Run run{3, h, {}};
  const auto red = detail::reduce_lightlike(run, tol, nullptr);
  if (!red) throw std::invalid_argument("extract_lambda: expected R(Y + v) ⊕ ℓ");
  return std::abs(red->lambda);
}

inline ClassificationResult classify_m2(const Subalgebra& input, double tol = kDefaultTol)
{
  using detail::reject;
  if (input.ambient_dim != 2) throw std::invalid_argument("classify_m2: ambient dimension must be 2");
  const Subalgebra h = canonicalize(input, tol);
  if (h.empty()) return reject(Verdict::NotCohomogeneityOne, "zero subalgebra acts trivially");
  if (!subalgebra_closure_check(h, tol)) return reject(Verdict::NotASubalgebra, "basis is not closed under the bracket");

  detail::Run run{2, h, {}};
  const Splitting sp = run.split(tol);
  const auto dt = sp.translations.size();
  const auto dp = sp.complement.size();

  if (dt == 2) return reject(Verdict::NotCohomogeneityOne, "contains all translations: transitive");
  if (dt == 1 && dp >= 1)
    return reject(Verdict::NotCohomogeneityOne, "SO°(1,1) ⋉ W1 has only three orbits, two of them open");
  if (dt == 1) {
    const Vector& t = sp.translations[0];
    switch (metric_type(t, tol)) {
      case MetricType::Riemannian:
        run.apply(IsoElement::linear_only(detail::align_nonnull(t, 0)), "boost aligning the line with e1");
        return detail::finish(run, input, make_action(ActionClass::R1), tol);
      case MetricType::Lorentzian:
        run.apply(IsoElement::linear_only(detail::align_nonnull(t, 1)), "boost aligning the line with e2");
        return detail::finish(run, input, make_action(ActionClass::M1), tol);
      case MetricType::Degenerate:
        if (t(0) * t(1) > 0) {
          run.apply(IsoElement::linear_only(detail::reflection_e1(2)), "reflection e1 -> -e1 onto W1");
          run.result.outside_identity_component = true;
        }
        return detail::finish(run, input, make_action(ActionClass::W1), tol);
    }
  }
  // dt == 0, dp == 1
  double fit_res = 0.0;
  const Vector c = detail::fit_linear(sp.complement[0].linear, {y_so11()}, &fit_res);
  if (!(std::abs(c(0)) > 0)) return reject(Verdict::NotASubalgebra, "degenerate linear part");
  const LieElement e = sp.complement[0] * (1.0 / c(0));
  double strip_res = 0.0;
  const Vector u = detail::stripping_translation({e}, {}, &strip_res);
  run.apply(IsoElement::translation(u), "translation (I2, Yv)");
  return detail::finish(run, input, make_action(ActionClass::SO11), tol);
}

inline ClassificationResult classify_m3(const Subalgebra& input, double tol = kDefaultTol)
{
  using detail::reject;
  if (input.ambient_dim != 3) throw std::invalid_argument("classify_m3: ambient dimension must be 3");
  const Subalgebra h = canonicalize(input, tol);
  if (h.empty()) return reject(Verdict::NotCohomogeneityOne, "zero subalgebra acts trivially");
  if (!subalgebra_closure_check(h, tol)) return reject(Verdict::NotASubalgebra, "basis is not closed under the bracket");

  detail::Run run{3, h, {}};
  Splitting sp = run.split(tol);
  const auto dt = sp.translations.size();
  const auto dp = sp.complement.size();

  if (dt == 3) return reject(Verdict::NotCohomogeneityOne, "contains all translations: transitive");

  if (dt == 2) {
    const Eigen::Vector3d t1 = sp.translations[0], t2 = sp.translations[1];
    const Vector normal = minkowski_metric(3) * Vector(t1.cross(t2));
    ActionClass cls = ActionClass::R2;
    Matrix b(3, 2);
    b << sp.translations[0], sp.translations[1];
    switch (metric_type(b, tol)) {
      case MetricType::Riemannian:
        run.apply(IsoElement::linear_only(detail::align_nonnull(normal, 2)), "Lorentz map sending the normal to e3");
        cls = ActionClass::R2;
        break;
      case MetricType::Lorentzian:
        run.apply(IsoElement::linear_only(detail::align_nonnull(normal, 0)), "Lorentz map sending the normal to e1");
        cls = ActionClass::M2;
        break;
      case MetricType::Degenerate:
        run.apply(IsoElement::linear_only(detail::align_null_to_ell(normal)), "rotation sending the normal to ℓ");
        cls = ActionClass::W2;
        break;
    }
    if (dp > 0) {
      if (max_orbit_dimension(h, 64, 1) >= 3)
        return reject(Verdict::NotCohomogeneityOne, "linear part moves the translation planes: open orbits");
      run.result.exact_conjugacy = false;
    }
    return detail::finish(run, input, make_action(cls), tol);
  }

  if (dt == 1) {
    if (dp == 0) return reject(Verdict::NotCohomogeneityOne, "one-parameter translation group: cohomogeneity two");
    if (dp >= 2)
      return reject(Verdict::NotCohomogeneityOne, "pi1(h) of dimension >= 2 with a translation: three-dimensional orbits");
    const Vector t = sp.translations[0];
    switch (metric_type(t, tol)) {
      case MetricType::Riemannian: {
        run.apply(IsoElement::linear_only(detail::align_nonnull(t, 0)), "Lorentz map sending the line to Re1");
        sp = run.split(tol);
        double res = 0.0;
        const Vector c = detail::fit_linear(sp.complement[0].linear, {y_a()}, &res);
        if (!(std::abs(c(0)) > 0) || res > 1e-7 * std::abs(c(0)))
          return reject(Verdict::NotASubalgebra, "linear part does not normalize Re1");
        const LieElement e = sp.complement[0] * (1.0 / c(0));
        const Vector u = detail::stripping_translation({e}, {basis_vector(3, 1)}, nullptr);
        run.apply(IsoElement::translation(u), "translation (I3, (0, -v3, -v2))");
        return detail::finish(run, input, make_action(ActionClass::AxRe1), tol);
      }
      case MetricType::Lorentzian: {
        run.apply(IsoElement::linear_only(detail::align_nonnull(t, 2)), "Lorentz map sending the line to Re3");
        sp = run.split(tol);
        double res = 0.0;
        const Vector c = detail::fit_linear(sp.complement[0].linear, {y_k()}, &res);
        if (!(std::abs(c(0)) > 0) || res > 1e-7 * std::abs(c(0)))
          return reject(Verdict::NotASubalgebra, "linear part does not normalize Re3");
        const LieElement e = sp.complement[0] * (1.0 / c(0));
        const Vector u = detail::stripping_translation({e}, {basis_vector(3, 3)}, nullptr);
        run.apply(IsoElement::translation(u), "translation (I3, (v2, -v1, 0))");
        return detail::finish(run, input, make_action(ActionClass::KxRe3), tol);
      }
      case MetricType::Degenerate: {
        run.apply(IsoElement::linear_only(detail::align_null_to_ell(t)), "rotation sending the line to ℓ");
        std::string why;
        const auto red = detail::reduce_lightlike(run, tol, &why);
        if (!red) return reject(Verdict::NotASubalgebra, why);
        double lambda = red->lambda;
        if (lambda < 0) {
          run.apply(IsoElement::linear_only(detail::reflection_e1(3)), "reflection e1 -> -e1");
          run.result.outside_identity_component = true;
          lambda = -lambda;
        }
        if (red->boost_family) return detail::finish(run, input, make_action(ActionClass::ALambdaEll, lambda), tol);
        if (lambda == 0.0) return detail::finish(run, input, make_action(ActionClass::NxEll), tol);
        const double u = 0.5 * std::log(lambda);
        if (u != 0.0)
          run.apply(IsoElement::linear_only(exp_iso(LieElement::linear_only(y_a()), u).linear),
                    "boost a_u, u = ln(λ)/2, rescaling λ to 1");
        return detail::finish(run, input, make_action(ActionClass::N1xEll, 1.0), tol);
      }
    }
  }

  // dt == 0
  if (dp <= 1) return reject(Verdict::NotCohomogeneityOne, "one-parameter group: cohomogeneity two");
  ActionClass cls = ActionClass::SO21;
  std::vector<Matrix> targets = {y_k(), y_a(), y_n()};
  if (dp == 2) {
    try {
      run.apply(pi1_to_standard(pi1(run.h, tol), tol), "Lorentz map taking pi1(h) onto a ⊕ n");
    } catch (const std::domain_error& e) {
      return reject(Verdict::NotASubalgebra, e.what());
    }
    cls = ActionClass::AN;
    targets = {y_a(), y_n()};
    sp = run.split(tol);
  }
  // Elements of h whose linear parts are exactly the target generators.
  Matrix lin(9, static_cast<Eigen::Index>(sp.complement.size()));
  for (std::size_t i = 0; i < sp.complement.size(); ++i)
    lin.col(static_cast<Eigen::Index>(i)) = sp.complement[i].linear.reshaped();
  std::vector<LieElement> elems;
  for (const auto& y : targets) {
    const Vector coef = detail::truncated_solve(lin, y.reshaped());
    if ((lin * coef - y.reshaped()).lpNorm<Eigen::Infinity>() > 1e-7)
      return reject(Verdict::NotASubalgebra, "linear projection is not the expected subalgebra of so(2,1)");
    LieElement e = LieElement::zero(3);
    for (Eigen::Index i = 0; i < coef.size(); ++i) e = e + sp.complement[static_cast<std::size_t>(i)] * coef(i);
    elems.push_back(e);
  }
  double strip_res = 0.0;
  const Vector u = detail::stripping_translation(elems, {}, &strip_res);
  double vscale = 1.0;
  for (const auto& e : elems) vscale = std::max(vscale, e.trans.lpNorm<Eigen::Infinity>());
  if (strip_res > 1e-7 * vscale)
    return reject(Verdict::NotASubalgebra, "structure equations for the translation parts are inconsistent");
  run.apply(IsoElement::translation(u), "translation solving the structure equations");
  return detail::finish(run, input, make_action(cls), tol);
}

inline ClassificationResult classify(const Subalgebra& h, double tol = kDefaultTol)
{
  if (h.ambient_dim == 2) return classify_m2(h, tol);
  if (h.ambient_dim == 3) return classify_m3(h, tol);
  throw std::invalid_argument("classify: only M^2 and M^3 are supported");
}

}  // namespace cohom1
