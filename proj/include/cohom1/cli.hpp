#pragma once

// Command-line front end, callable in-process so that tests can check output
// bytes and exit codes without spawning a shell.

#include "cohom1/catalog.hpp"
#include "cohom1/classifier.hpp"
#include "cohom1/io.hpp"
#include "cohom1/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace cohom1 {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;  // verify: some report failed
inline constexpr int usage = 2;
inline constexpr int not_cohomogeneity_one = 3;
inline constexpr int not_a_subalgebra = 4;
inline constexpr int unwritable = 5;
}  // namespace exit_code

namespace cli_detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::uint64_t default_seed()
{
  const char* env = std::getenv("COHOM1_SEED");
  if (!env || !*env) return 0;
  std::uint64_t v = 0;
  const std::string s(env);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw UsageError("COHOM1_SEED must be a non-negative integer, got '" + s + "'");
  return v;
}

inline KPrime parse_kprime(const std::string& s)
{
  if (s == "trivial") return KPrime::trivial();
  if (s == "full") return KPrime::full();
  std::string num = s;
  if (num.rfind("block:", 0) == 0) num = num.substr(6);
  int m = 0;
  const auto res = std::from_chars(num.data(), num.data() + num.size(), m);
  if (res.ec != std::errc() || res.ptr != num.data() + num.size() || num.empty())
    throw UsageError("--kprime must be trivial, full or block:<m>, got '" + s + "'");
  return KPrime::block_of(m);
}

struct ActionArgs {
  std::string action;
  std::optional<double> lambda;
  std::optional<int> dim;
  std::string kprime = "trivial";
};

inline ActionSpec resolve_action(const ActionArgs& a)
{
  const auto cls = parse_action_class(a.action);
  if (!cls) {
    std::string names;
    for (const auto& [c, n] : action_class_names()) names += (names.empty() ? "" : ", ") + n;
    throw UsageError("unknown action '" + a.action + "' (known: " + names + ")");
  }
  const bool has_lambda = *cls == ActionClass::ALambdaEll || *cls == ActionClass::N1xEll;
  if (a.lambda && !has_lambda) throw UsageError("--lambda only applies to ALambdaEll and N1xEll");
  if (a.lambda && *cls == ActionClass::ALambdaEll && *a.lambda < 0)
    throw UsageError("ALambdaEll needs lambda >= 0 (negative values are equivalent to -lambda)");
  if (a.lambda && *cls == ActionClass::N1xEll && !(*a.lambda > 0)) throw UsageError("N1xEll needs lambda > 0");
  const int native = native_dimension(*cls);
  int dim = native;
  if (native == 0) {
    dim = a.dim.value_or(4);
    if (dim < 4) throw UsageError(to_string(*cls) + " needs --dim >= 4");
  } else if (a.dim && *a.dim != native) {
    throw UsageError(to_string(*cls) + " acts on M^" + std::to_string(native) + ", not M^" + std::to_string(*a.dim));
  }
  const KPrime kp = parse_kprime(a.kprime);
  if (*cls != ActionClass::KprimeAN && kp.kind != KPrime::Kind::Trivial)
    throw UsageError("--kprime only applies to KprimeAN");
  try {
    return make_action(*cls, a.lambda.value_or(-1.0), dim, kp);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline std::string format_matrix(const Matrix& m)
{
  std::string s = "[";
  for (int r = 0; r < m.rows(); ++r) {
    s += r ? ", [" : "[";
    for (int c = 0; c < m.cols(); ++c) s += (c ? ", " : "") + format_short(m(r, c), 10);
    s += "]";
  }
  return s + "]";
}

inline std::string format_vector(const Vector& v)
{
  std::string s = "(";
  for (int i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_short(v(i), 10);
  return s + ")";
}

inline std::string num(double v) { return format_short(v, 6); }

// ---------------------------------------------------------------------------

inline std::string structure_of(ActionClass c)
{
  switch (c) {
    case ActionClass::R1:
    case ActionClass::M1:
    case ActionClass::W1: return "translation line";
    case ActionClass::SO11: return "so(1,1), no translations";
    case ActionClass::R2:
    case ActionClass::M2:
    case ActionClass::W2: return "dim(h ∩ M^3) = 2";
    case ActionClass::KxRe3:
    case ActionClass::AxRe1:
    case ActionClass::NxEll:
    case ActionClass::N1xEll:
    case ActionClass::ALambdaEll: return "dim(h ∩ M^3) = 1";
    case ActionClass::SO21:
    case ActionClass::AN: return "dim(h ∩ M^3) = 0";
    case ActionClass::SOn1: return "full Lorentz group";
    case ActionClass::KprimeAN: return "K'AN, K' ⊂ SO(n-1)";
  }
  return "";
}

inline int cmd_catalog(int dim, std::ostream& out)
{
  if (dim < 2) throw UsageError("--dim must be >= 2");
  struct Row {
    std::string name, params;
    int gens;
    std::string structure;
  };
  std::vector<Row> rows;
  if (dim == 3) {
    for (const auto& s : catalog_list(3, {})) {
      rows.push_back({to_string(s.cls), "-", s.group_dim(), structure_of(s.cls)});
      if (s.cls == ActionClass::N1xEll) {
        const ActionSpec a = make_action(ActionClass::ALambdaEll, 0.0);
        rows.push_back({"ALambdaEll(λ≥0)", "lambda >= 0", a.group_dim(), structure_of(a.cls)});
      }
    }
  } else if (dim == 2) {
    for (const auto& s : catalog_list(2)) rows.push_back({to_string(s.cls), "-", s.group_dim(), structure_of(s.cls)});
  } else {
    const int n = dim - 1;
    const ActionSpec so = make_action(ActionClass::SOn1, -1, dim);
    rows.push_back({"SOn1", "n = " + std::to_string(n), so.group_dim(), structure_of(so.cls)});
    std::string kps = "kprime = trivial, full";
    if (n - 2 >= 2) kps += ", block:2.." + std::to_string(n - 2);
    const ActionSpec kp = make_action(ActionClass::KprimeAN, -1, dim, KPrime::trivial());
    rows.push_back({"KprimeAN", kps, kp.group_dim(), structure_of(kp.cls) + " (generators for trivial K')"});
  }
  out << "# cohomogeneity-one actions on M^" << dim << "\n";
  out << "class\tparameters\tgenerators\tstructure\n";
  for (const auto& r : rows) out << r.name << '\t' << r.params << '\t' << r.gens << '\t' << r.structure << '\n';
  return exit_code::ok;
}

inline int cmd_classify(const std::string& path, double tol, std::ostream& out, std::ostream& err)
{
  Subalgebra h;
  try {
    if (path == "-") {
      h = read_subalgebra_file(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) {
        err << "error: cannot open '" << path << "'\n";
        return exit_code::usage;
      }
      h = read_subalgebra_file(in);
    }
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return exit_code::usage;
  }
  if (h.ambient_dim != 2 && h.ambient_dim != 3) {
    err << "error: " << path << ": ambient_dim: classification is available on M^2 and M^3 only\n";
    return exit_code::usage;
  }
  const ClassificationResult r = classify(h, tol);
  out << "verdict: " << to_string(r.verdict) << '\n';
  if (r.verdict != Verdict::Classified) {
    out << "reason: " << r.reason << '\n';
    return r.verdict == Verdict::NotCohomogeneityOne ? exit_code::not_cohomogeneity_one : exit_code::not_a_subalgebra;
  }
  const ActionSpec& c = *r.canonical;
  out << "class: " << to_string(c.cls);
  if (c.cls == ActionClass::ALambdaEll) out << " λ=" << format_short(c.lambda, 10);
  out << '\n';
  out << "conjugators: " << r.conjugators.size() << " (applied in order)\n";
  for (std::size_t i = 0; i < r.conjugators.size(); ++i) {
    const auto& s = r.conjugators[i];
    out << "  " << (i + 1) << ". " << s.description << '\n';
    out << "     linear: " << format_matrix(s.g.linear) << '\n';
    out << "     translation: " << format_vector(s.g.trans) << '\n';
  }
  const IsoElement g = r.composite(h.ambient_dim);
  out << "composite linear: " << format_matrix(g.linear) << '\n';
  out << "composite translation: " << format_vector(g.trans) << '\n';
  if (r.outside_identity_component) out << "note: the conjugator uses a reflection outside the identity component\n";
  if (!r.exact_conjugacy) out << "note: h strictly contains the canonical algebra; the orbits coincide\n";
  out << "residual: " << format_short(r.residual, 3) << '\n';
  return exit_code::ok;
}

inline int cmd_orbit(const ActionSpec& spec, const std::string& point, int samples, std::uint64_t seed, double scale,
                     const std::string& out_path, const std::string& format, std::ostream& out, std::ostream& err)
{
  if (samples < 0) throw UsageError("--samples must be >= 0");
  if (!(scale >= 0)) throw UsageError("--scale must be >= 0");
  if (format != "csv" && format != "ply") throw UsageError("--format must be csv or ply");
  std::vector<double> coords;
  try {
    coords = parse_real_list(point, "--point");
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  if (static_cast<int>(coords.size()) != spec.ambient_dim)
    throw UsageError("--point needs " + std::to_string(spec.ambient_dim) + " coordinates for " + display_name(spec));
  const Vector p = Eigen::Map<const Vector>(coords.data(), static_cast<Eigen::Index>(coords.size()));

  PointCloud cloud;
  cloud.dim = spec.ambient_dim;
  cloud.points = orbit_sample(spec, p, samples, seed, scale);
  for (const auto& q : cloud.points) cloud.labels.push_back(label_text(orbit_label(spec, q)));

  std::ostringstream buf;
  if (format == "csv") write_csv(buf, cloud);
  else write_ply(buf, cloud);
  if (out_path.empty() || out_path == "-") {
    out << buf.str();
    return exit_code::ok;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    err << "error: cannot write '" << out_path << "'\n";
    return exit_code::unwritable;
  }
  f << buf.str();
  f.close();
  if (!f) {
    err << "error: cannot write '" << out_path << "'\n";
    return exit_code::unwritable;
  }
  out << "wrote " << cloud.points.size() << " points to " << out_path << '\n';
  return exit_code::ok;
}

inline int cmd_cohomogeneity(const ActionSpec& spec, int trials, std::uint64_t seed, double tol, std::ostream& out)
{
  if (trials < 1) throw UsageError("--trials must be >= 1");
  const auto est = estimate_cohomogeneity(spec, trials, seed, tol);
  out << "action: " << display_name(spec) << " on M^" << spec.ambient_dim << '\n';
  out << "cohomogeneity: " << est.cohomogeneity << '\n';
  out << "max orbit dimension: " << est.max_orbit_dim << '\n';
  out << "witness: " << format_vector(est.witness) << '\n';
  return exit_code::ok;
}

inline void print_report(std::ostream& out, const VerificationReport& r, const std::string& detail)
{
  out << (r.status == Status::Pass ? "PASS " : "FAIL ") << r.name;
  if (!detail.empty()) out << " [" << detail << "]";
  out << " max_residual=" << num(r.max_residual) << " tol=" << num(r.tolerance);
  if (r.statistic) out << " statistic=" << num(*r.statistic);
  out << " trials=" << r.trials << " seed=" << r.seed;
  if (!r.note.empty()) out << " (" << r.note << ")";
  out << '\n';
  if (r.status == Status::Fail && r.witness) {
    if (r.witness->point.size()) out << "     witness point " << format_vector(r.witness->point) << '\n';
    for (const auto& l : r.witness->labels) out << "     " << l << '\n';
  }
}

inline int cmd_verify(const std::string& suite, std::uint64_t seed, std::optional<int> trials,
                      const std::vector<double>& lambdas, std::ostream& out)
{
  static const std::vector<std::string> suites = {"all", "identities", "equivalence", "denseopen", "counts"};
  if (std::find(suites.begin(), suites.end(), suite) == suites.end())
    throw UsageError("unknown suite '" + suite + "' (known: all, identities, equivalence, denseopen, counts)");
  if (trials && *trials < 1) throw UsageError("--trials must be >= 1");
  for (double l : lambdas)
    if (!(l > 0)) throw UsageError("--lambdas must be positive");
  const bool all = suite == "all";
  int failed = 0, run = 0;
  auto report = [&](const VerificationReport& r, const std::string& detail) {
    print_report(out, r, detail);
    ++run;
    if (r.status != Status::Pass) ++failed;
  };

  if (all || suite == "identities") {
    for (double l : {0.1, 0.5, 1.0, 2.0, 10.0})
      report(commuting_identity_check(l, trials.value_or(10000), seed), "λ=" + num(l));
    for (double l : lambdas)
      for (double m : lambdas)
        report(p_lambda_congruence_check(l, m, trials.value_or(1000), seed), "λ=" + num(l) + " μ=" + num(m));
  }
  if (all || suite == "equivalence") {
    int pairs = 0;
    for (double l : lambdas)
      for (double m : lambdas) {
        if (l == m) continue;
        ++pairs;
        report(nonequivalence_witness(l, m, trials.value_or(201)), "λ=" + num(l) + " μ=" + num(m));
      }
    if (pairs == 0) out << "SKIP nonequivalence (no pairs with λ ≠ μ)\n";
  }
  if (all || suite == "denseopen") {
    for (double r : {0.5, 1.0, 2.0}) report(dense_open_experiment(r, trials.value_or(1000), seed), "r=" + num(r));
  }
  if (all || suite == "counts") {
    std::vector<ActionSpec> specs;
    for (int d : {2, 3})
      for (auto& s : catalog_list(d, {0.0, 1.0})) specs.push_back(std::move(s));
    for (auto& s : catalog_list(4)) specs.push_back(std::move(s));
    specs.push_back(make_action(ActionClass::KprimeAN, -1, 5, KPrime::block_of(2)));
    for (const auto& s : specs) report(orbit_count_experiment(s, trials.value_or(4000), seed), "M^" + std::to_string(s.ambient_dim));
  }
  out << "summary: " << (run - failed) << "/" << run << " passed\n";
  return failed ? exit_code::check_failed : exit_code::ok;
}

}  // namespace cli_detail

/// Runs the tool on argv-style arguments (args[0] is the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  using namespace cli_detail;
  CLI::App app{"Cohomogeneity-one isometric actions on Minkowski spaces"};
  app.require_subcommand(1);

  double tol = kDefaultTol;
  std::optional<std::uint64_t> seed_flag;

  int cat_dim = 3;
  auto* catalog = app.add_subcommand("catalog", "list the canonical actions on M^dim");
  catalog->add_option("--dim", cat_dim, "ambient dimension (>= 2)");

  std::string path;
  auto* cls = app.add_subcommand("classify", "classify a subalgebra of iso(M^2) or iso(M^3) read from a JSON file");
  cls->add_option("file", path, "subalgebra file ('-' for stdin)")->required();
  cls->add_option("--tol", tol, "rank tolerance");

  ActionArgs act;
  auto add_action = [&](CLI::App* sub) {
    sub->add_option("--action", act.action, "canonical action name")->required();
    sub->add_option("--lambda", act.lambda, "parameter of ALambdaEll (>= 0) or N1xEll (> 0)");
    sub->add_option("--dim", act.dim, "ambient dimension for SOn1 and KprimeAN");
    sub->add_option("--kprime", act.kprime, "K' for KprimeAN: trivial, full or block:<m>");
  };

  std::string point, out_path, format = "csv";
  int samples = 100;
  double scale = 3.0;
  auto* orbit = app.add_subcommand("orbit", "sample the orbit through a point");
  add_action(orbit);
  orbit->add_option("--point", point, "comma-separated coordinates")->required();
  orbit->add_option("--samples", samples, "number of sampled points");
  orbit->add_option("--scale", scale, "group parameters are drawn from [-scale, scale]");
  orbit->add_option("--seed", seed_flag, "random seed");
  orbit->add_option("--out", out_path, "output file (default stdout)");
  orbit->add_option("--format", format, "csv or ply");

  int trials = 10000;
  auto* coh = app.add_subcommand("cohomogeneity", "estimate the cohomogeneity of an action");
  add_action(coh);
  coh->add_option("--trials", trials, "random points tried");
  coh->add_option("--seed", seed_flag, "random seed");
  coh->add_option("--tol", tol, "rank tolerance");

  std::string suite = "all";
  std::optional<int> vtrials;
  std::string lambdas_text = "0.5,1,2,4";
  auto* ver = app.add_subcommand("verify", "run the verification suite");
  ver->add_option("--suite", suite, "all, identities, equivalence, denseopen or counts");
  ver->add_option("--seed", seed_flag, "random seed");
  ver->add_option("--trials", vtrials, "override the per-check trial counts");
  ver->add_option("--lambdas", lambdas_text, "comma-separated λ values for the pairwise checks");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("cohom1");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? exit_code::ok : exit_code::usage;
  }

  try {
    const std::uint64_t seed = seed_flag ? *seed_flag : default_seed();
    if (!(tol > 0)) throw UsageError("--tol must be positive");
    if (*catalog) return cmd_catalog(cat_dim, out);
    if (*cls) return cmd_classify(path, tol, out, err);
    if (*orbit) return cmd_orbit(resolve_action(act), point, samples, seed, scale, out_path, format, out, err);
    if (*coh) return cmd_cohomogeneity(resolve_action(act), trials, seed, tol, out);
    if (*ver) {
      std::vector<double> lambdas;
      try {
        lambdas = parse_real_list(lambdas_text, "--lambdas");
      } catch (const ParseError& e) {
        throw UsageError(e.what());
      }
      return cmd_verify(suite, seed, vtrials, lambdas, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
  return exit_code::usage;
}

}  // namespace cohom1
