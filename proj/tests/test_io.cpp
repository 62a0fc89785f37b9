#include "support.hpp"

#include "cohom1/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace cohom1;
using namespace cohom1::testing;

namespace {
std::string error_of(const std::string& text)
{
  try {
    parse_subalgebra_json(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}
}  // namespace

TEST(FormatDouble, RoundTripsExactly)
{
  Sampler rng(71);
  for (int i = 0; i < 1000; ++i) {
    const double v = rng.gaussian() * std::pow(10.0, rng.centered(30.0));
    EXPECT_EQ(parse_double(format_double(v), "v"), v);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(-0.0), "-0");
}

TEST(ParseDouble, Rejects)
{
  EXPECT_THROW(parse_double("abc", "x"), ParseError);
  EXPECT_THROW(parse_double("1.5x", "x"), ParseError);
  EXPECT_THROW(parse_double("inf", "x"), ParseError);
  EXPECT_THROW(parse_double("", "x"), ParseError);
  EXPECT_EQ(parse_double(" +2.5 ", "x"), 2.5);
  EXPECT_EQ(parse_real_list("1,2,3", "l"), (std::vector<double>{1, 2, 3}));
  EXPECT_THROW(parse_real_list("1,2,", "l"), ParseError);
}

TEST(SubalgebraJson, ParsesNestedAndFlat)
{
  const Subalgebra h = parse_subalgebra_json(R"({"ambient_dim": 3, "basis": [
    {"matrix": [[0,0,0],[0,0,-1],[0,-1,0]], "vector": [2,0,0]},
    {"vector": [0,1,-1]},
    {"matrix": [0,-1,0, 1,0,0, 0,0,0]}]})");
  ASSERT_EQ(h.size(), 3);
  EXPECT_EQ(h.basis[0].linear, y_a());
  EXPECT_EQ(h.basis[0].trans, vec({2, 0, 0}));
  EXPECT_EQ(h.basis[1].linear, Matrix::Zero(3, 3));
  EXPECT_EQ(h.basis[2].linear, y_k());
  EXPECT_EQ(h.basis[2].trans, Vector::Zero(3));
}

TEST(SubalgebraJson, Diagnostics)
{
  EXPECT_NE(error_of("{\"ambient_dim\": 3,\n \"basis\": [ }").find("line 2"), std::string::npos);
  EXPECT_NE(error_of(R"({"basis": []})").find("ambient_dim: missing"), std::string::npos);
  EXPECT_NE(error_of(R"({"ambient_dim": 3, "basis": []})").find("basis: must be nonempty"), std::string::npos);
  EXPECT_NE(error_of(R"({"ambient_dim": 3, "basis": [{"matrix": [[0,0,0],[0,0,0]]}]})")
                .find("basis[0].matrix: expected 3 rows, got 2"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"ambient_dim": 3, "basis": [{"vector": [1,0,0]}, {"matrix": [[1,0,0],[0,0,0],[0,0,0]]}]})")
                .find("basis[1].matrix: not in so(2,1)"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"ambient_dim": 3, "basis": [{"vector": [1,0]}]})").find("basis[0].vector"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"ambient_dim": 3, "basis": [{"vector": [1,0,"a"]}]})").find("basis[0].vector[2]"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"ambient_dim": 3, "basis": [{"vec": [1,0,0]}]})").find("unknown field"), std::string::npos);
}

TEST(SubalgebraJson, RoundTrip)
{
  for (const auto& s : catalog_list(3, {0.5})) {
    const Subalgebra back = parse_subalgebra_json(to_json(s.generators));
    ASSERT_EQ(back.size(), s.generators.size());
    for (int i = 0; i < back.size(); ++i) {
      EXPECT_EQ(back.basis[i].linear, s.generators.basis[i].linear);
      EXPECT_EQ(back.basis[i].trans, s.generators.basis[i].trans);
    }
  }
}

TEST(Csv, RoundTripAtFullPrecision)
{
  const ActionSpec spec = make_action(ActionClass::AN);
  PointCloud cloud{3, orbit_sample(spec, vec({0.3, -1.7, 2.2}), 100, 9), {}};
  for (const auto& p : cloud.points) cloud.labels.push_back(label_text(orbit_label(spec, p)));
  std::stringstream ss;
  write_csv(ss, cloud);
  EXPECT_EQ(ss.str().substr(0, 15), "x1,x2,x3,label\n");
  const PointCloud back = read_csv(ss);
  ASSERT_EQ(back.points.size(), cloud.points.size());
  for (std::size_t i = 0; i < back.points.size(); ++i) {
    EXPECT_EQ(back.points[i], cloud.points[i]);
    EXPECT_EQ(back.labels[i], cloud.labels[i]);
  }
}

TEST(Csv, RejectsMalformed)
{
  std::stringstream a("x1,x2\n");
  EXPECT_THROW(read_csv(a), ParseError);
  std::stringstream b("x1,x2,label\n1,2,L\n1,L\n");
  try {
    read_csv(b);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Ply, Header)
{
  PointCloud cloud{3, {vec({1, 2, 3}), vec({0.5, 0, -1})}, {"a", "b"}};
  std::stringstream ss;
  write_ply(ss, cloud);
  EXPECT_EQ(ss.str(),
            "ply\nformat ascii 1.0\ncomment orbit point cloud\nelement vertex 2\n"
            "property double x\nproperty double y\nproperty double z\nend_header\n1 2 3\n0.5 0 -1\n");
}
