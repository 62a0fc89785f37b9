#include "support.hpp"

#include <gtest/gtest.h>

using namespace cohom1;
using namespace cohom1::testing;

TEST(ClosedForms, MatchHandWrittenOracles)
{
  Sampler rng(61);
  for (int i = 0; i < 200; ++i) {
    const double t = rng.centered(3.0), s = rng.centered(3.0), l = rng.uniform(0.1, 10.0);
    EXPECT_LE(max_abs(boost_a(t) - oracle_a(t)), 1e-12);
    EXPECT_LE(max_abs(rotation_k(t) - oracle_k(t)), 1e-12);
    EXPECT_LE(max_abs(null_rotation_n(t) - oracle_n(t)), 1e-12);
    const IsoElement g = g_lambda(l, t, s);
    EXPECT_LE(max_abs(g.trans - vec({l * t, s, -s})), 1e-12 * (1 + l));
    const IsoElement h = h_lambda(l, t, s);
    EXPECT_LE(max_abs(h.trans - (oracle_n_lambda_trans(l, t) + s * null_w0(3))), 1e-12 * (1 + l) * (1 + t * t * std::abs(t)));
  }
}

TEST(ClosedForms, AgreeWithExponential)
{
  Sampler rng(62);
  for (int i = 0; i < 100; ++i) {
    const double t = rng.centered(3.0), l = rng.uniform(0.1, 10.0);
    const IsoElement ea = exp_iso(LieElement(y_a(), vec({l, 0, 0})), t);
    EXPECT_LE(max_abs(ea.linear - boost_a(t)), 1e-12 * std::cosh(t));
    EXPECT_LE(max_abs(ea.trans - oracle_a_lambda_trans(l, t)), 1e-12 * (1 + l));
    const IsoElement en = exp_iso(LieElement(y_n(), vec({0, 0, l})), t);
    EXPECT_LE(max_abs(en.linear - null_rotation_n(t)), 1e-12 * (1 + t * t));
    EXPECT_LE(max_abs(en.trans - oracle_n_lambda_trans(l, t)), 1e-12 * (1 + l) * (1 + t * t * std::abs(t)));
  }
}

TEST(Invariants, Examples)
{
  EXPECT_NEAR(invariant_a_lambda(1.0, vec({1, std::exp(-1.0), std::exp(-1.0)})), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(invariant_n_lambda(2.0, vec({1, 1, 1})), 0.0);
  EXPECT_DOUBLE_EQ(invariant_n_lambda(1.0, vec({3, 0, 0})), 3.0);
}

TEST(CheckIsometry, PassesAndFails)
{
  Sampler rng(63);
  const IsoElement g = random_isometry(rng);
  const auto ok = check_isometry(g, 500, 1);
  EXPECT_EQ(ok.status, Status::Pass);
  EXPECT_LE(ok.max_residual, 1e-10);
  IsoElement bad = g;
  bad.linear(0, 0) += 1e-6;
  EXPECT_EQ(check_isometry(bad, 500, 1).status, Status::Fail);
  EXPECT_THROW(check_isometry(g, 0, 1), std::invalid_argument);
}

TEST(CommutingIdentity, HoldsAndSwappedScalingFails)
{
  for (double l : {0.1, 1.0, 10.0}) {
    const auto r = commuting_identity_check(l, 2000, 7);
    EXPECT_EQ(r.status, Status::Pass) << l;
    EXPECT_LE(r.max_residual, 1e-12);
    EXPECT_EQ(commuting_identity_check(l, 2000, 7, true).status, Status::Fail) << l;
  }
  // Single hand-computed instance: a_u g^λ_{t,s} (0) = a_u (λt, s, -s) = (λt, e^u s, -e^u s).
  const double u = 0.7, t = 0.3, s = 1.1, l = 2.0;
  const Vector lhs = boost_a(u) * g_lambda(l, t, s).trans;
  EXPECT_LE(max_abs(lhs - vec({l * t, std::exp(u) * s, -std::exp(u) * s})), 1e-14);
  EXPECT_LE(commuting_identity_residual(l, u, t, s, Vector::Zero(3)), 1e-15);
  EXPECT_THROW(commuting_identity_check(0.0, 10, 1), std::invalid_argument);
}

TEST(Congruence, BoostMatchesAndWrongBoostFails)
{
  for (double l : {0.5, 1.0, 2.0, 4.0})
    for (double m : {0.5, 1.0, 2.0, 4.0}) {
      const auto r = p_lambda_congruence_check(l, m, 500, 3);
      EXPECT_EQ(r.status, Status::Pass) << l << " " << m;
    }
  EXPECT_EQ(p_lambda_congruence_check(1.0, 2.0, 500, 3, 0.3).status, Status::Fail);
  EXPECT_THROW(p_lambda_congruence_check(-1.0, 2.0, 10, 3), std::invalid_argument);
}

TEST(Nonequivalence, SpreadExample)
{
  const auto r = nonequivalence_witness(1.0, 2.0, 201);
  ASSERT_TRUE(r.statistic.has_value());
  // Oracle: I_2 = e^{-t/2} on the orbit, so the spread over [-1, 1] is e^{1/2} - e^{-1/2}.
  EXPECT_NEAR(*r.statistic, std::exp(0.5) - std::exp(-0.5), 1e-9);
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_THROW(nonequivalence_witness(1.0, 1.0, 201), std::invalid_argument);
  EXPECT_EQ(nonequivalence_witness(1.0, 1.0 + 1e-9, 201).status, Status::Fail);
}

TEST(Nonequivalence, AllPairsPass)
{
  const std::vector<double> ls{0.5, 1.0, 2.0, 4.0};
  for (double l : ls)
    for (double m : ls)
      if (l != m) EXPECT_EQ(nonequivalence_witness(l, m, 201).status, Status::Pass) << l << " " << m;
}

TEST(DenseOpen, Passes)
{
  for (double r : {0.5, 1.0, 2.0}) {
    const auto rep = dense_open_experiment(r, 1000, 11);
    EXPECT_EQ(rep.status, Status::Pass) << rep.note;
  }
  EXPECT_THROW(dense_open_experiment(0.0, 10, 1), std::invalid_argument);
}

TEST(OrbitCount, InventoriesMatch)
{
  std::vector<ActionSpec> specs;
  for (int d : {2, 3, 4})
    for (auto& s : catalog_list(d, {0.0, 1.0})) specs.push_back(std::move(s));
  specs.push_back(make_action(ActionClass::KprimeAN, -1, 5, KPrime::block_of(2)));
  for (const auto& s : specs) {
    const auto rep = orbit_count_experiment(s, 3000, 5);
    EXPECT_EQ(rep.status, Status::Pass) << display_name(s) << ": " << rep.note;
  }
}
