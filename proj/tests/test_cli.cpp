#include "support.hpp"

#include "cohom1/cli.hpp"
#include "cohom1/io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cohom1;
using namespace cohom1::testing;

namespace {

struct CliRun {
  int rc;
  std::string out, err;
};

CliRun run(std::vector<std::string> args)
{
  args.insert(args.begin(), "cohom1");
  std::ostringstream out, err;
  const int rc = run_cli(args, out, err);
  return {rc, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(COHOM1_FIXTURE_DIR) + "/" + name; }

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, CatalogRows)
{
  const CliRun r3 = run({"catalog", "--dim", "3"});
  EXPECT_EQ(r3.rc, 0);
  EXPECT_EQ(count_lines(r3.out), 12);  // title, header, 10 rows
  EXPECT_EQ(r3.out.rfind("# cohomogeneity-one actions on M^3\nclass\tparameters\tgenerators\tstructure\n", 0), 0u);
  EXPECT_NE(r3.out.find("ALambdaEll(λ≥0)"), std::string::npos);
  EXPECT_EQ(count_lines(run({"catalog", "--dim", "2"}).out), 6);
  const CliRun r5 = run({"catalog", "--dim", "5"});
  EXPECT_EQ(count_lines(r5.out), 4);
  EXPECT_NE(r5.out.find("SOn1"), std::string::npos);
  EXPECT_NE(r5.out.find("KprimeAN"), std::string::npos);
  EXPECT_EQ(run({"catalog", "--dim", "1"}).rc, exit_code::usage);
}

TEST(Cli, ClassifyManifestExitCodes)
{
  std::ifstream in(fixture("manifest.json"));
  ASSERT_TRUE(in);
  const auto manifest = nlohmann::json::parse(in);
  ASSERT_GE(manifest.size(), 40u);
  for (const auto& entry : manifest) {
    const std::string file = entry["file"];
    const CliRun r = run({"classify", fixture(file)});
    EXPECT_EQ(r.rc, entry["exit"].get<int>()) << file << "\n" << r.out << r.err;
    if (!entry["class"].is_null()) {
      std::string want = "class: " + entry["class"].get<std::string>();
      if (!entry["lambda"].is_null()) want += " λ=" + format_short(entry["lambda"].get<double>(), 10);
      EXPECT_NE(r.out.find(want + "\n"), std::string::npos) << file << "\n" << r.out;
    }
    if (r.rc == exit_code::usage) EXPECT_FALSE(r.err.empty()) << file;
  }
}

TEST(Cli, ClassifyOutputShape)
{
  const CliRun r = run({"classify", fixture("m3_spacelike_line_conjugated.json")});
  ASSERT_EQ(r.rc, 0) << r.err;
  EXPECT_NE(r.out.find("verdict: Classified\n"), std::string::npos);
  EXPECT_NE(r.out.find("composite linear: "), std::string::npos);
  EXPECT_NE(r.out.find("residual: "), std::string::npos);
  const CliRun bad = run({"classify", fixture("bad_matrix_shape.json")});
  EXPECT_NE(bad.err.find("basis[0].matrix"), std::string::npos) << bad.err;
}

TEST(Cli, OrbitExamples)
{
  const CliRun so = run({"orbit", "--action", "SO21", "--point", "0,0,1", "--samples", "50", "--seed", "3"});
  ASSERT_EQ(so.rc, 0) << so.err;
  std::istringstream a(so.out);
  const PointCloud ca = read_csv(a);
  ASSERT_EQ(ca.points.size(), 50u);
  for (const auto& q : ca.points) EXPECT_NEAR(lorentz_norm2(q), -1.0, 1e-9 * (1 + q.squaredNorm()));

  const CliRun n1 = run({"orbit", "--action", "N1xEll", "--point", "0,0,0", "--samples", "50", "--seed", "4"});
  ASSERT_EQ(n1.rc, 0) << n1.err;
  std::istringstream b(n1.out);
  for (const auto& q : read_csv(b).points) {
    const double w = q(1) + q(2);
    EXPECT_NEAR(q(0) - w * w / 2, 0.0, 1e-9 * (1 + q.squaredNorm()));
  }

  const CliRun none = run({"orbit", "--action", "AN", "--point", "1,2,3", "--samples", "0"});
  EXPECT_EQ(none.rc, 0);
  EXPECT_EQ(none.out, "x1,x2,x3,label\n");

  const CliRun ply = run({"orbit", "--action", "AN", "--point", "1,2,3", "--samples", "5", "--format", "ply"});
  EXPECT_EQ(ply.out.rfind("ply\nformat ascii 1.0\n", 0), 0u);
  EXPECT_NE(ply.out.find("element vertex 5\n"), std::string::npos);
}

TEST(Cli, OrbitUsageErrors)
{
  EXPECT_EQ(run({"orbit", "--action", "Nope", "--point", "0,0,0"}).rc, exit_code::usage);
  EXPECT_EQ(run({"orbit", "--action", "AN", "--point", "0,0"}).rc, exit_code::usage);
  EXPECT_EQ(run({"orbit", "--action", "AN", "--point", "0,x,0"}).rc, exit_code::usage);
  EXPECT_EQ(run({"orbit", "--action", "AN", "--point", "0,0,0", "--lambda", "1"}).rc, exit_code::usage);
  EXPECT_EQ(run({"orbit", "--action", "ALambdaEll", "--lambda", "-1", "--point", "0,0,0"}).rc, exit_code::usage);
  EXPECT_EQ(run({"orbit", "--action", "N1xEll", "--lambda", "0", "--point", "0,0,0"}).rc, exit_code::usage);
  EXPECT_EQ(run({"orbit", "--action", "SO21", "--dim", "4", "--point", "0,0,0,0"}).rc, exit_code::usage);
  EXPECT_EQ(run({"orbit", "--action", "KprimeAN", "--kprime", "block:3", "--point", "0,0,0,0"}).rc, exit_code::usage);
  EXPECT_EQ(run({"orbit", "--action", "AN", "--point", "0,0,0", "--format", "xyz"}).rc, exit_code::usage);
  EXPECT_EQ(run({"frobnicate"}).rc, exit_code::usage);
  EXPECT_EQ(run({}).rc, exit_code::usage);
}

TEST(Cli, UnwritableOutput)
{
  const CliRun r = run({"orbit", "--action", "AN", "--point", "1,2,3", "--out", "/nonexistent-dir/x/out.csv"});
  EXPECT_EQ(r.rc, exit_code::unwritable);
  EXPECT_NE(r.err.find("cannot write"), std::string::npos);
}

TEST(Cli, OrbitToFile)
{
  const auto path = std::filesystem::temp_directory_path() / "cohom1_test_orbit.csv";
  const CliRun r = run({"orbit", "--action", "KprimeAN", "--dim", "5", "--kprime", "block:2", "--point", "1,0,0,0.5,-0.5",
                     "--samples", "20", "--out", path.string()});
  ASSERT_EQ(r.rc, 0) << r.err;
  std::ifstream in(path);
  const PointCloud c = read_csv(in);
  EXPECT_EQ(c.dim, 5);
  EXPECT_EQ(c.points.size(), 20u);
  std::filesystem::remove(path);
}

TEST(Cli, Deterministic)
{
  const std::vector<std::string> args{"orbit", "--action", "ALambdaEll", "--lambda", "0.5", "--point", "0.1,1,2",
                                      "--samples", "200", "--seed", "17"};
  const CliRun a = run(args), b = run(args);
  EXPECT_EQ(a.out, b.out);
  auto other = args;
  other.back() = "18";
  EXPECT_NE(run(other).out, a.out);
}

TEST(Cli, SeedFromEnvironment)
{
  const std::vector<std::string> args{"orbit", "--action", "AN", "--point", "1,2,3", "--samples", "30"};
  ::setenv("COHOM1_SEED", "99", 1);
  const CliRun env = run(args);
  ::unsetenv("COHOM1_SEED");
  auto flagged = args;
  flagged.insert(flagged.end(), {"--seed", "99"});
  EXPECT_EQ(env.out, run(flagged).out);
  EXPECT_NE(env.out, run(args).out);
  ::setenv("COHOM1_SEED", "banana", 1);
  EXPECT_EQ(run(args).rc, exit_code::usage);
  ::unsetenv("COHOM1_SEED");
}

TEST(Cli, Cohomogeneity)
{
  const CliRun r = run({"cohomogeneity", "--action", "KprimeAN", "--dim", "4", "--kprime", "full", "--trials", "200"});
  EXPECT_EQ(r.rc, 0);
  EXPECT_NE(r.out.find("cohomogeneity: 1\n"), std::string::npos) << r.out;
}

TEST(Cli, VerifySuites)
{
  const CliRun r = run({"verify", "--suite", "equivalence", "--lambdas", "1,2"});
  EXPECT_EQ(r.rc, 0) << r.out;
  EXPECT_EQ(count_lines(r.out), 3);
  EXPECT_NE(r.out.find("summary: 2/2 passed"), std::string::npos);
  const CliRun skip = run({"verify", "--suite", "equivalence", "--lambdas", "1"});
  EXPECT_NE(skip.out.find("SKIP nonequivalence"), std::string::npos);
  const CliRun id = run({"verify", "--suite", "identities", "--trials", "100", "--lambdas", "0.5,2"});
  EXPECT_EQ(id.rc, 0) << id.out;
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).rc, exit_code::usage);
  EXPECT_EQ(run({"verify", "--lambdas", "1,-2"}).rc, exit_code::usage);
}
