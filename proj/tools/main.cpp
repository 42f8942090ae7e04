// Command-line front end: curvature, classify, distance, geodesic, sphere,
// killing, embed, verify. Exit codes: 0 success, 2 usage, 3 domain error,
// 4 verification failure.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aff/causal.hpp"
#include "aff/connection.hpp"
#include "aff/errors.hpp"
#include "aff/geodesics.hpp"
#include "aff/isometry.hpp"
#include "aff/oracles.hpp"
#include "aff/problem.hpp"
#include "aff/synthesis.hpp"
#include "output.hpp"

namespace {

using namespace aff;

constexpr double kPi = std::numbers::pi;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string preset;
  std::string matrix;
  std::string format;  // default json; geodesic/sphere default to csv
  std::string outPath;
};

void add_common(CLI::App* cmd, Options& o, bool withFormat = true) {
  cmd->add_option("--preset", o.preset, "model problem P1, P2 or P3");
  cmd->add_option("--matrix", o.matrix, "coefficients a,b,c,d of the form matrix");
  if (withFormat) cmd->add_option("--format", o.format, "json, csv or svg");
  cmd->add_option("--out", o.outPath, "write output to a file instead of stdout");
}

std::vector<double> parse_doubles(const std::string& text, std::size_t n, const char* what) {
  std::vector<double> vs;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      vs.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError(std::string("cannot parse ") + what + ": '" + tok + "'");
    }
  }
  if (vs.size() != n)
    throw UsageError(std::string(what) + " needs " + std::to_string(n) +
                     " comma-separated values");
  return vs;
}

ProblemSpec problem_of(const Options& o) {
  if (!o.preset.empty() && !o.matrix.empty())
    throw UsageError("--preset and --matrix are mutually exclusive");
  if (!o.preset.empty()) {
    if (o.preset != "P1" && o.preset != "P2" && o.preset != "P3")
      throw UsageError("unknown preset '" + o.preset + "' (expected P1, P2 or P3)");
    return preset(o.preset);
  }
  if (!o.matrix.empty()) {
    const auto m = parse_doubles(o.matrix, 4, "--matrix");
    return make_problem(m[0], m[1], m[2], m[3]);
  }
  throw UsageError("one of --preset or --matrix is required");
}

GroupPoint parse_point(const std::string& text, const char* what) {
  const auto v = parse_doubles(text, 2, what);
  try {
    return {v[0], v[1]};
  } catch (const std::invalid_argument& e) {
    throw NotInDomain(std::string(what) + ": " + e.what());
  }
}

void require_json(const Options& o) {
  if (!o.format.empty() && o.format != "json")
    throw UsageError("this subcommand only emits json");
}

void emit(const Options& o, const std::string& payload) {
  if (o.outPath.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(o.outPath);
  if (!f) throw std::runtime_error("cannot open output file " + o.outPath);
  f << payload;
}

const char* sign_name(CurvSign s) {
  switch (s) {
    case CurvSign::Neg: return "Neg";
    case CurvSign::Zero: return "Zero";
    case CurvSign::Pos: return "Pos";
  }
  return "?";
}

int cmd_curvature(const Options& o) {
  require_json(o);
  const ProblemSpec s = problem_of(o);
  cli::JsonObject j;
  j.number("K", s.K).string("sign", sign_name(s.curvSign));
  j.number("oracleResidual", std::abs(sectional_curvature_numeric(s) - s.K));
  if (s.timeReversed) j.boolean("timeReversed", true);
  emit(o, j.str());
  return 0;
}

int cmd_classify(const Options& o, const std::string& toText) {
  require_json(o);
  const ProblemSpec s = problem_of(o);
  const GroupPoint q = parse_point(toText, "--to");
  const CausalClass cc = classify(s, q);
  cli::JsonObject j;
  j.string("stratum", stratum_name(cc.tag));
  if (cc.tag == Stratum::LightBoundary) j.string("branch", branch_name(cc.branch));
  j.number("lambda1", cc.lam1).number("lambda2", cc.lam2);
  if (s.curvSign == CurvSign::Neg) {
    j.number("lambda3", cc.lam3);
    const auto B = point_B(s);
    j.raw("B", cli::number_array({B[0], B[1]}));
  }
  if (s.timeReversed) j.boolean("timeReversed", true);
  emit(o, j.str());
  return 0;
}

int cmd_distance(const Options& o, const std::string& fromText, const std::string& toText) {
  require_json(o);
  const ProblemSpec s = problem_of(o);
  const GroupPoint q0 =
      fromText.empty() ? GroupPoint::identity() : parse_point(fromText, "--from");
  const GroupPoint q1 = parse_point(toText, "--to");
  const DistanceResult r = distance(s, q0, q1);
  cli::JsonObject j;
  j.number("distance", r.value);
  j.string("stratum", stratum_name(r.stratum));
  j.boolean("maximizerExists", r.maximizerExists);
  if (r.geodesic) j.number("psi0", r.geodesic->psi0).number("t1", r.geodesic->t1);
  if (s.timeReversed) j.boolean("timeReversed", true);
  emit(o, j.str());
  return 0;
}

int cmd_geodesic(const Options& o, const std::string& toText, std::optional<double> psi0,
                 std::optional<double> tmax, int samples) {
  const ProblemSpec s = problem_of(o);
  double p0 = 0.0, t1 = 0.0;
  if (!toText.empty()) {
    if (psi0 || tmax) throw UsageError("--to excludes --psi0/--tmax");
    const InverseResult inv = exp_inverse(s, parse_point(toText, "--to"));
    p0 = inv.psi0;
    t1 = inv.t1;
  } else if (psi0 && tmax) {
    p0 = *psi0;
    t1 = std::min(*tmax, 0.999 * domain_bounds(s, p0).second);
  } else {
    throw UsageError("geodesic needs either --to or both --psi0 and --tmax");
  }
  if (samples < 2) throw UsageError("--samples must be at least 2");

  const Geodesic geo = timelike_geodesic(s, p0);
  std::vector<double> ts(samples), xs(samples), ys(samples), psis(samples);
  std::vector<std::pair<double, double>> pts(samples);
  for (int k = 0; k < samples; ++k) {
    const double t = t1 * k / (samples - 1);
    const GroupPoint q = exp_map(s, p0, t);
    ts[k] = t;
    xs[k] = q.x;
    ys[k] = q.y;
    psis[k] = psi_of_t(geo, t);
    pts[k] = {q.x, q.y};
  }
  if (o.format == "svg") {
    emit(o, cli::svg_figure(s, pts, false));
  } else if (o.format.empty() || o.format == "csv") {
    emit(o, cli::csv_table({{"t", ts}, {"x", xs}, {"y", ys}, {"psi", psis}}));
  } else {
    throw UsageError("unknown format '" + o.format + "' for geodesic output");
  }
  return 0;
}

int cmd_sphere(const Options& o, double radius, int samples) {
  const ProblemSpec s = problem_of(o);
  const SphereArc arc = sphere(s, radius, samples);
  std::vector<double> xs(samples), ys(samples), ds(samples);
  std::vector<std::pair<double, double>> pts(samples);
  for (int k = 0; k < samples; ++k) {
    const GroupPoint q = arc.point(k);
    xs[k] = q.x;
    ys[k] = q.y;
    ds[k] = distance(s, GroupPoint::identity(), q).value;
    pts[k] = {q.x, q.y};
  }
  if (o.format == "svg") {
    emit(o, cli::svg_figure(s, pts, true));
  } else if (o.format.empty() || o.format == "csv") {
    emit(o, cli::csv_table({{"x", xs}, {"y", ys}, {"distance", ds}}));
  } else {
    throw UsageError("unknown format '" + o.format + "' for sphere output");
  }
  return 0;
}

int cmd_killing(const Options& o, const std::string& atText) {
  require_json(o);
  const ProblemSpec s = problem_of(o);
  const GroupPoint q = parse_point(atText, "--at");
  const auto basis = killing_basis(s);
  const char* tags[3] = {"RightX1", "RightX2", "Extra"};
  std::string fields = "[";
  for (int i = 0; i < 3; ++i) {
    const FieldValue v = basis[i].field.value(q);
    cli::JsonObject f;
    f.string("tag", tags[i]);
    f.raw("value", cli::number_array({v.dx, v.dy}));
    f.number("residual", killing_residual(s, basis[i].field, q));
    f.boolean("complete", basis[i].complete);
    std::string part = f.str();
    part.pop_back();  // strip newline
    fields += (i ? ", " : "") + part;
  }
  fields += "]";
  cli::JsonObject j;
  j.raw("at", cli::number_array({q.x, q.y}));
  j.raw("fields", fields);
  emit(o, j.str());
  return 0;
}

int cmd_embed(const Options& o, const std::string& pointText) {
  require_json(o);
  const ProblemSpec s = problem_of(o);
  const GroupPoint q = parse_point(pointText, "--point");
  const MinkowskiPoint m = embed_flat(s, q);
  cli::JsonObject j;
  j.raw("point", cli::number_array({q.x, q.y}));
  j.raw("image", cli::number_array({m.xt, m.yt}));
  j.number("margin", half_plane_margin(s, m));
  emit(o, j.str());
  return 0;
}

// ---------------------------------------------------------------------------
// verify: run the oracle suite against the closed forms

struct VerifyRow {
  std::string name;
  double residual;
  double tol;
  bool pass;
};

class Verifier {
 public:
  explicit Verifier(bool color) : color_(color) {}

  void check(const std::string& name, double residual, double tol) {
    rows_.push_back({name, residual, tol, residual <= tol});
  }
  void expect(const std::string& name, bool ok) {
    rows_.push_back({name, ok ? 0.0 : 1.0, 0.5, ok});
  }

  int report(std::ostream& os) const {
    bool all = true;
    for (const auto& r : rows_) {
      all = all && r.pass;
      const char* mark = r.pass ? "ok  " : "FAIL";
      if (color_)
        os << (r.pass ? "\033[32m" : "\033[31m") << mark << "\033[0m";
      else
        os << mark;
      os << "  " << r.name << "  residual=" << cli::format_number(r.residual)
         << " tol=" << cli::format_number(r.tol) << "\n";
    }
    os << (all ? "all checks passed\n" : "verification FAILED\n");
    return all ? 0 : 4;
  }

 private:
  bool color_;
  std::vector<VerifyRow> rows_;
};

double random_in(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double verify_psi0(std::mt19937_64& rng, const ProblemSpec& s) {
  const double mag = random_in(rng, 0.05, 1.1);
  const double sign = rng() & 1 ? 1.0 : -1.0;
  return s.curvSign == CurvSign::Zero ? sign * mag : sign * mag - s.theta;
}

int cmd_verify(const Options& o, bool full) {
  const ProblemSpec s = problem_of(o);
  const bool color = std::getenv("NO_COLOR") == nullptr;
  Verifier v(color);
  std::mt19937_64 rng(2024);
  const GroupPoint id = GroupPoint::identity();

  v.check("curvature closed form vs connection oracle",
          std::abs(sectional_curvature_numeric(s) - s.K), 1e-10);

  {
    const ConnectionCoefficients c = levi_civita(s);
    const double torsion = std::hypot(c.mu[1][0] - c.mu[0][1] - 1.0, c.nu[1][0] - c.nu[0][1]);
    v.check("torsion-free identity", torsion, 1e-10);
  }

  {
    double worstEnd = 0.0, worstH = 0.0;
    for (int i = 0; i < (full ? 20 : 5); ++i) {
      const double psi0 = verify_psi0(rng, s);
      const double t1 = 0.9 * std::min(domain_bounds(s, psi0).second, 10.0);
      const IntegratedExtremal ode = integrate_extremal(s, psi0, t1, 10000);
      const GroupPoint cf = exp_map(s, psi0, t1);
      worstEnd = std::max(worstEnd, std::hypot(ode.endpoint().x - cf.x, ode.endpoint().y - cf.y));
      worstH = std::max(worstH, ode.hamiltonianDrift);
    }
    v.check("closed-form endpoints vs Hamiltonian flow", worstEnd, 1e-8);
    v.check("energy conservation along the flow", worstH, 1e-9);
  }

  {
    double worst = 0.0;
    for (int i = 0; i < (full ? 500 : 100); ++i) {
      const double psi0 = verify_psi0(rng, s);
      const double t =
          random_in(rng, 0.05, 0.9) * std::min(domain_bounds(s, psi0).second, 6.0);
      const InverseResult inv = exp_inverse(s, exp_map(s, psi0, t));
      worst = std::max(worst, std::abs(inv.psi0 - psi0) + std::abs(inv.t1 - t));
    }
    v.check("round trip of the exponential map", worst, 1e-9);
  }

  if (!o.preset.empty()) {
    double residual = 0.0;
    if (o.preset == "P1")
      residual = std::abs(distance(s, id, {1.0, std::sqrt(2.0)}).value - kPi / 4);
    else if (o.preset == "P2")
      residual = std::abs(distance(s, id, {0.0, 2.0}).value - std::log(2.0));
    else
      residual = std::abs(distance(s, id, {1.0, 2.0}).value - 1.0 / std::sqrt(2.0));
    v.check("golden distance value", residual, 1e-10);
  }

  {
    double worst = 0.0;
    std::vector<double> radii{0.5};
    radii.push_back(s.curvSign == CurvSign::Neg ? 0.9 * kPi / s.Delta : 1.5);
    for (double R : radii) {
      const SphereArc arc = sphere(s, R, 16);
      for (int k = 0; k < arc.sample_count(); ++k)
        worst = std::max(worst, std::abs(distance(s, id, arc.point(k)).value - R));
    }
    v.check("sphere round trip", worst, 1e-8);
  }

  {
    const auto basis = killing_basis(s);
    double worst = 0.0;
    for (int i = 0; i < (full ? 100 : 20); ++i) {
      const GroupPoint q{random_in(rng, -2, 2), random_in(rng, 0.3, 3.0)};
      for (const auto& f : basis) worst = std::max(worst, killing_residual(s, f.field, q));
    }
    v.check("Killing identity residuals", worst, 1e-6);

    double probe = 0.0;
    for (int i = 0; i < 20; ++i) {
      const GroupPoint q{random_in(rng, -2, 2), random_in(rng, 0.3, 3.0)};
      probe = std::max(probe, killing_residual(s, probe_field(), q));
    }
    v.expect("non-Killing control detected", probe > 1e-2);
  }

  v.expect("global hyperbolicity matches the curvature sign",
           is_globally_hyperbolic(s) == (s.curvSign != CurvSign::Neg));
  {
    bool ok = true;
    if (s.curvSign == CurvSign::Neg) {
      const CompletenessReport r = completeness_report(s);
      ok = !r.futureComplete && !r.pastComplete;
    } else {
      const CompletenessReport r = completeness_report(s);
      ok = (s.gamma > 0) ? (!r.futureComplete && r.pastComplete)
                         : (r.futureComplete && !r.pastComplete);
    }
    v.expect("completeness report", ok);
  }

  if (s.curvSign == CurvSign::Zero) {
    double worst = 0.0;
    for (int i = 0; i < (full ? 1000 : 200); ++i) {
      const GroupPoint q1{random_in(rng, -2, 2), random_in(rng, 0.3, 3.0)};
      const double psi0 = verify_psi0(rng, s);
      const double t =
          random_in(rng, 0.05, 0.9) * std::min(domain_bounds(s, psi0).second, 2.0);
      const GroupPoint q2 = group_mul(q1, exp_map(s, psi0, t));
      const double d = distance(s, q1, q2).value;
      const double dt = minkowski_distance(embed_flat(s, q1), embed_flat(s, q2));
      worst = std::max(worst, std::abs(d - dt));
    }
    v.check("flat embedding isometry", worst, 1e-9);
  }

  if (full) {
    double gap = 0.0, overshoot = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double psi0 = verify_psi0(rng, s);
      const double t =
          random_in(rng, 0.2, 0.8) * std::min(domain_bounds(s, psi0).second, 1.5);
      const GroupPoint q = exp_map(s, psi0, t);
      const PathLowerBound b = brute_force_distance(s, q, 10, 48);
      const double d = distance(s, id, q).value;
      gap = std::max(gap, d - b.value);
      overshoot = std::max(overshoot, b.value - d);
    }
    v.check("path maximizer gap", gap, 0.02);
    v.check("path maximizer soundness (no overshoot)", overshoot, 1e-6);

    if (s.curvSign == CurvSign::Neg) {
      double worst = 0.0;
      bool signConstant = true;
      double firstSign = 0.0;
      for (int i = 0; i < 50; ++i) {
        const double rho = random_in(rng, -1.2, 1.2);
        const double tau = random_in(rng, rho + 0.05, 1.45);
        const double closed = jacobian_exp(s, rho, tau);
        const double fd = finite_diff_jacobian(s, rho, tau);
        worst = std::max(worst, std::abs(std::abs(closed) - std::abs(fd)));
        if (i == 0) firstSign = closed > 0 ? 1.0 : -1.0;
        signConstant = signConstant && (closed * firstSign > 0);
      }
      v.check("chart jacobian closed form vs finite differences", worst, 1e-6);
      v.expect("chart jacobian keeps one sign", signConstant);
    }

    double lightWorst = 0.0;
    for (int sign : {+1, -1})
      for (double t : {0.0, 0.5, 1.5, 3.0}) {
        const GroupPoint q = lightlike_curve(s, sign, t);
        lightWorst = std::max(lightWorst, std::abs(lambda1(s, q) * lambda2(s, q)) /
                                              (1.0 + std::abs(lambda1(s, q)) +
                                               std::abs(lambda2(s, q))));
      }
    v.check("lightlike curves stay on the cone boundary", lightWorst, 1e-10);
  }

  std::ostringstream table;
  const int rc = v.report(table);
  emit(o, table.str());
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"left-invariant Lorentzian structures on the affine group of the line"};
  app.require_subcommand(1);

  Options opt;
  std::string fromText, toText, atText, pointText;
  std::optional<double> psi0, tmax;
  double radius = 1.0;
  int samples = 100;
  bool full = false;
  std::function<int()> action;

  auto* curvature = app.add_subcommand("curvature", "curvature and classification constants");
  add_common(curvature, opt);
  curvature->callback([&] { action = [&] { return cmd_curvature(opt); }; });

  auto* classifyCmd = app.add_subcommand("classify", "stratum of a target point");
  add_common(classifyCmd, opt);
  classifyCmd->add_option("--to", toText, "target point x,y")->required();
  classifyCmd->callback([&] { action = [&] { return cmd_classify(opt, toText); }; });

  auto* dist = app.add_subcommand("distance", "Lorentzian distance between two points");
  add_common(dist, opt);
  dist->add_option("--from", fromText, "base point x,y (default Id)");
  dist->add_option("--to", toText, "target point x,y")->required();
  dist->callback([&] { action = [&] { return cmd_distance(opt, fromText, toText); }; });

  auto* geo = app.add_subcommand("geodesic", "sample a maximizing geodesic");
  add_common(geo, opt);
  geo->add_option("--to", toText, "target point x,y");
  geo->add_option("--psi0", psi0, "initial vertical coordinate");
  geo->add_option("--tmax", tmax, "sample up to this parameter time");
  geo->add_option("--samples", samples, "number of samples");
  geo->callback([&] { action = [&] { return cmd_geodesic(opt, toText, psi0, tmax, samples); }; });

  auto* sph = app.add_subcommand("sphere", "sample a Lorentzian sphere");
  add_common(sph, opt);
  sph->add_option("--radius", radius, "sphere radius")->required();
  sph->add_option("--samples", samples, "number of samples");
  sph->callback([&] { action = [&] { return cmd_sphere(opt, radius, samples); }; });

  auto* kil = app.add_subcommand("killing", "Killing fields at a point");
  add_common(kil, opt);
  kil->add_option("--at", atText, "evaluation point x,y")->required();
  kil->callback([&] { action = [&] { return cmd_killing(opt, atText); }; });

  auto* emb = app.add_subcommand("embed", "flat isometric embedding of a point");
  add_common(emb, opt);
  emb->add_option("--point", pointText, "point x,y")->required();
  emb->callback([&] { action = [&] { return cmd_embed(opt, pointText); }; });

  auto* ver = app.add_subcommand("verify", "run the oracle suite");
  add_common(ver, opt);
  ver->add_flag("--full", full, "larger samples plus the slow checks");
  ver->callback([&] { action = [&] { return cmd_verify(opt, full); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: InvalidArgument: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
