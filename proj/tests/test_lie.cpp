#include "support.hpp"

#include <gtest/gtest.h>

using namespace cohom1;
using namespace cohom1::testing;

namespace {

LieElement random_element(Sampler& rng, int dim)
{
  // Random so(n,1) matrix from block form [[B, b], [b^T, 0]].
  Matrix x = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim - 1; ++i)
    for (int j = i + 1; j < dim - 1; ++j) {
      const double v = rng.gaussian();
      x(i, j) = v;
      x(j, i) = -v;
    }
  for (int i = 0; i < dim - 1; ++i) {
    const double v = rng.gaussian();
    x(i, dim - 1) = v;
    x(dim - 1, i) = v;
  }
  return {x, rng.gaussian_vector(dim)};
}

double diff(const LieElement& a, const LieElement& b)
{
  return std::max(max_abs(a.linear - b.linear), max_abs(a.trans - b.trans));
}

}  // namespace

TEST(Generators, MatchDisplayedMatrices)
{
  EXPECT_EQ(y_k(), mat3(0, -1, 0, 1, 0, 0, 0, 0, 0));
  EXPECT_EQ(y_a(), mat3(0, 0, 0, 0, 0, -1, 0, -1, 0));
  EXPECT_EQ(y_n(), mat3(0, 1, 1, -1, 0, 0, 1, 0, 0));
  EXPECT_EQ(y_a()(1, 2), -1.0);
  EXPECT_EQ(y_a()(2, 1), -1.0);
  for (const Matrix& m : {y_k(), y_a(), y_n()}) EXPECT_TRUE(is_lorentz_algebra(m));
}

TEST(Generators, IwasawaBasisProperties)
{
  const IwasawaBasis b2 = iwasawa_generators(2);
  ASSERT_EQ(b2.k_gens.size(), 1u);
  ASSERT_EQ(b2.n_gens.size(), 1u);
  EXPECT_EQ(b2.k_gens[0].linear, y_k());
  EXPECT_EQ(b2.a_gen.linear, y_a());
  EXPECT_EQ(b2.n_gens[0].linear, y_n());
  EXPECT_TRUE(b2.k0_gens.empty());

  const IwasawaBasis b3 = iwasawa_generators(3);
  EXPECT_EQ(b3.n_gens.size(), 2u);
  EXPECT_EQ(b3.k_gens.size(), 3u);
  EXPECT_EQ(b3.k0_gens.size(), 1u);
  // g_α is abelian and normalized by a with eigenvalue 1; θ(g_α) = g_{-α} is a different root space.
  EXPECT_EQ(max_abs(bracket(b3.n_gens[0], b3.n_gens[1]).linear), 0.0);
  for (const auto& y : b3.n_gens) {
    EXPECT_EQ(bracket(b3.a_gen, y).linear, y.linear);
    EXPECT_EQ(bracket(b3.a_gen, LieElement::linear_only(cartan_involution(y.linear))).linear,
              -cartan_involution(y.linear));
  }
  EXPECT_THROW(iwasawa_generators(0), std::invalid_argument);
}

TEST(Bracket, StructureConstantsExact)
{
  const auto k = LieElement::linear_only(y_k()), a = LieElement::linear_only(y_a()), n = LieElement::linear_only(y_n());
  EXPECT_EQ(bracket(k, a).linear, y_k() + y_n());
  EXPECT_EQ(bracket(k, n).linear, Matrix(-y_a()));
  EXPECT_EQ(bracket(a, n).linear, y_n());
  EXPECT_EQ(bracket(a, n).trans, Vector::Zero(3));
}

TEST(Bracket, TranslationPartAndAntisymmetry)
{
  const LieElement z(y_a(), vec({1, 2, 3}));
  EXPECT_EQ(diff(bracket(z, z), LieElement::zero(3)), 0.0);
  const LieElement a(y_k(), vec({1, 0, 0})), b(y_a(), vec({0, 1, 0}));
  // X v - Y u with X = Y_k, v = e2, Y = Y_a, u = e1.
  EXPECT_EQ(bracket(a, b).trans, Vector(y_k() * vec({0, 1, 0}) - y_a() * vec({1, 0, 0})));
  EXPECT_THROW(bracket(LieElement::zero(3), LieElement::zero(4)), std::invalid_argument);
}

TEST(Bracket, Jacobi)
{
  Sampler rng(21);
  for (int i = 0; i < 200; ++i) {
    const int d = 3 + i % 3;
    const auto x = random_element(rng, d), y = random_element(rng, d), z = random_element(rng, d);
    const LieElement j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    EXPECT_LE(diff(j, LieElement::zero(d)), 1e-11);
  }
}

TEST(Adjoint, IdentityAndPlaneTrick)
{
  const LieElement y(y_a(), vec({1, 2, 3}));
  EXPECT_EQ(diff(adjoint(IsoElement::identity(3), y), y), 0.0);

  const Vector v = vec({1, 2});
  const LieElement yv(y_so11(), v);
  const LieElement out = adjoint(IsoElement::translation(Vector(y_so11() * v)), yv);
  EXPECT_EQ(out.linear, y_so11());
  EXPECT_EQ(out.trans, Vector::Zero(2));
}

TEST(Adjoint, BoostScalesNilpotent)
{
  for (double u : {-1.5, -0.3, 0.0, 0.7, 2.0}) {
    // Oracle: direct conjugation with the hand-written a_u.
    const Matrix direct = oracle_a(u) * y_n() * oracle_a(-u);
    const LieElement ad = adjoint(IsoElement::linear_only(oracle_a(u)), LieElement::linear_only(y_n()));
    EXPECT_LE(max_abs(ad.linear - direct), 1e-14 * std::exp(std::abs(u)));
    EXPECT_LE(max_abs(ad.linear - std::exp(u) * y_n()), 1e-13 * std::exp(std::abs(u)));
  }
}

TEST(Adjoint, BracketHomomorphism)
{
  Sampler rng(22);
  for (int i = 0; i < 200; ++i) {
    const IsoElement g = random_isometry(rng);
    const auto a = random_element(rng, 3), b = random_element(rng, 3);
    const LieElement lhs = adjoint(g, bracket(a, b));
    const LieElement rhs = bracket(adjoint(g, a), adjoint(g, b));
    EXPECT_LE(diff(lhs, rhs), 1e-10 * (1 + max_abs(lhs.linear) + max_abs(lhs.trans)));
  }
}

TEST(Adjoint, SingularLinearPartThrows)
{
  EXPECT_THROW(adjoint(IsoElement(Matrix::Zero(3, 3), Vector::Zero(3)), LieElement::zero(3)), std::domain_error);
}

TEST(Exp, ZeroIsIdentity)
{
  const IsoElement g = exp_iso(LieElement(y_n(), vec({1, 2, 3})), 0.0);
  EXPECT_EQ(g.linear, Matrix::Identity(3, 3));
  EXPECT_EQ(g.trans, Vector::Zero(3));
  EXPECT_THROW(exp_iso(LieElement::zero(3), std::nan("")), std::invalid_argument);
}

TEST(Exp, ClosedForms)
{
  Sampler rng(23);
  for (int i = 0; i < 300; ++i) {
    const double t = rng.centered(3.0);
    const double lambda = std::vector<double>{0.1, 1.0, 10.0}[i % 3];
    EXPECT_LE(max_abs(exp_iso(LieElement::linear_only(y_k()), t).linear - oracle_k(t)), 1e-12);
    EXPECT_LE(max_abs(exp_iso(LieElement::linear_only(y_a()), t).linear - oracle_a(t)), 1e-12);
    EXPECT_LE(max_abs(exp_iso(LieElement::linear_only(y_n()), t).linear - oracle_n(t)), 1e-12);
    const IsoElement ga = exp_iso(LieElement(y_a(), lambda * basis_vector(3, 1)), t);
    EXPECT_LE(max_abs(ga.linear - oracle_a(t)), 1e-12);
    EXPECT_LE(max_abs(ga.trans - oracle_a_lambda_trans(lambda, t)), 1e-12 * std::max(1.0, lambda));
    const IsoElement gn = exp_iso(LieElement(y_n(), lambda * basis_vector(3, 3)), t);
    EXPECT_LE(max_abs(gn.linear - oracle_n(t)), 1e-12);
    EXPECT_LE(max_abs(gn.trans - oracle_n_lambda_trans(lambda, t)), 1e-12 * std::max(1.0, lambda));
  }
}

TEST(Exp, OneParameterGroup)
{
  Sampler rng(24);
  for (int i = 0; i < 200; ++i) {
    const auto y = random_element(rng, 3 + i % 2);
    const double s = rng.centered(3.0) / 3, t = rng.centered(3.0) / 3;
    const IsoElement lhs = exp_iso(y, s + t);
    const IsoElement rhs = iso_compose(exp_iso(y, s), exp_iso(y, t));
    const double scale = 1 + max_abs(lhs.linear) + max_abs(lhs.trans);
    EXPECT_LE(max_abs(lhs.linear - rhs.linear), 1e-10 * scale);
    EXPECT_LE(max_abs(lhs.trans - rhs.trans), 1e-10 * scale);
    EXPECT_TRUE(in_restricted_lorentz(lhs.linear));
  }
}

TEST(Group, ComposeInverseApply)
{
  Sampler rng(25);
  const IsoElement g = random_isometry(rng);
  const IsoElement e = iso_compose(g, iso_inverse(g));
  EXPECT_LE(max_abs(e.linear - Matrix::Identity(3, 3)), 1e-12);
  EXPECT_LE(max_abs(e.trans), 1e-12);

  const Vector ke1 = iso_apply(IsoElement::linear_only(oracle_k(M_PI / 2)), basis_vector(3, 1));
  EXPECT_LE(max_abs(ke1 - basis_vector(3, 2)), 1e-15);

  // g^1_{1,0} = (a_1, (1, 0, 0)) at e2 + e3.
  const Vector p = iso_apply(IsoElement(oracle_a(1), vec({1, 0, 0})), vec({0, 1, 1}));
  EXPECT_LE(max_abs(p - vec({1, std::exp(-1.0), std::exp(-1.0)})), 1e-15);
  EXPECT_THROW(iso_apply(g, Vector::Zero(4)), std::invalid_argument);
}

TEST(Group, PreservesInterval)
{
  Sampler rng(26);
  for (int i = 0; i < 200; ++i) {
    const IsoElement g = random_isometry(rng);
    const Vector p = rng.gaussian_vector(3) * 3, q = rng.gaussian_vector(3) * 3;
    const Vector d = p - q, gd = iso_apply(g, p) - iso_apply(g, q);
    EXPECT_LE(std::abs(lorentz_norm2(gd) - lorentz_norm2(d)), 1e-10 * (d.squaredNorm() + gd.squaredNorm()));
  }
}

TEST(Group, ComponentTests)
{
  EXPECT_TRUE(in_restricted_lorentz(oracle_a(1.3)));
  Matrix refl = Matrix::Identity(3, 3);
  refl(0, 0) = -1;
  EXPECT_TRUE(is_lorentz_group(refl));
  EXPECT_FALSE(in_restricted_lorentz(refl));
  Matrix trev = Matrix::Identity(3, 3);
  trev(2, 2) = -1;
  trev(0, 0) = -1;
  EXPECT_FALSE(in_restricted_lorentz(trev));
}
