#include "cli.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "jtube/errors.h"
#include "jtube/modular.h"
#include "jtube/rep1d.h"
#include "jtube/riesz.h"
#include "jtube/sampling.h"
#include "jtube/wedge.h"

namespace jtube {
namespace cli {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

namespace {

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> SplitComma(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(Trim(item));
  return parts;
}

double ParseNumber(const std::string& text) {
  if (text.empty()) throw ValidationError("empty number in list");
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ValidationError("malformed number '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) throw ValidationError("malformed number '" + text + "'");
  return v;
}

std::vector<double> ParseNumberList(const std::string& text) {
  const std::string t = Trim(text);
  if (!t.empty() && t.front() == '[') {
    Json j;
    try {
      j = Json::parse(t);
    } catch (const std::exception&) {
      throw ValidationError("malformed JSON array '" + t + "'");
    }
    const Eigen::VectorXd v = serialize::VectorFromJson(j);
    return {v.data(), v.data() + v.size()};
  }
  std::vector<double> out;
  for (const auto& p : SplitComma(t)) out.push_back(ParseNumber(p));
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool Holds(double value, double tolerance, const std::string& relation) {
  if (relation == "<=") return value <= tolerance;
  if (relation == ">") return value > tolerance;
  return value == tolerance;
}

void Flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) Flatten(it.value(), prefix + "/" + it.key(), out);
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) Flatten(j[i], prefix + "/" + std::to_string(i), out);
  } else if (j.is_string()) {
    std::string s = j.get<std::string>();
    std::string quoted = "\"";
    for (char c : s) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
    out << prefix << "," << quoted << "\"\n";
  } else {
    out << prefix << "," << j.dump() << "\n";
  }
}

// ---------------------------------------------------------------- options

struct Common {
  std::string format = "json";
  std::string output;
  double tol = 1e-9;
  uint64_t seed = 1;
};

void AddCommon(CLI::App* sub, Common* c) {
  sub->add_option("--format", c->format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--output,-o", c->output, "Write the report to this path instead of stdout");
  sub->add_option("--tol", c->tol, "Relative zero tolerance for spectral values")->check(CLI::PositiveNumber);
  sub->add_option("--seed", c->seed, "Seed for all randomized parts");
}

// ---------------------------------------------------------------- commands

Report Classify(const std::string& algebra, const std::string& element, const Common& c) {
  const auto d = ParseAlgebra(algebra);
  const jalg::JordanAlgebra a(d);
  const Element x = ParseElement(a, element);
  Report rep;
  rep.command = "classify";
  rep.config = {{"algebra", serialize::ToJson(d)}, {"element", serialize::VectorJson(x)}, {"tol", c.tol}};
  const jalg::SpectralData sd = a.Spectral(x, c.tol);
  const jalg::Classification cl = a.Classify(x, c.tol);
  rep.results = {{"spectral", serialize::ToJson(sd)},
                 {"classification", serialize::ToJson(cl)},
                 {"cone_position", jalg::ConePositionName(a.ConePositionOf(x, c.tol))}};
  const double scale = std::max(1.0, x.norm());
  rep.tolerances = {{"zero_tol", c.tol}, {"reconstruction", 1e-9 * scale}};
  rep.checks.push_back(MakeCheck("spectral_reconstruction", sd.residual, 1e-9 * scale));
  return rep;
}

Report Wedge(const std::string& algebra, int k, const std::string& element, const std::string& frame_kind,
             int samples, int audit_samples, const Common& c) {
  const auto d = ParseAlgebra(algebra);
  const jalg::JordanAlgebra a(d);
  Rng rng(c.seed);
  const std::vector<Element> frame = frame_kind == "random" ? sampling::RandomFrame(a, rng) : a.CanonicalFrame();
  wedge::AuditOptions audit;
  audit.samples = audit_samples;
  audit.seed = c.seed;
  const wedge::BoostConfig cfg = wedge::MakeBoostConfig(a, frame, k, audit);
  Report rep;
  rep.command = "wedge";
  rep.seed = c.seed;
  rep.config = {{"algebra", serialize::ToJson(d)}, {"k", k},           {"frame", frame_kind},
                {"samples", samples},              {"tol", c.tol},     {"audit_samples", audit_samples}};
  const double trace = wedge::TraceH(a, k), formula = wedge::TraceHFormula(d, k);
  const double tau_residual = (wedge::FlowMatrix(cfg, cd(0.0, kPi)) - cfg.tau.cast<cd>()).norm();
  const wedge::ProjectionReport proj = wedge::ProjectionConeCheck(cfg, samples, c.seed, c.tol);
  rep.results = {{"boost", serialize::ToJson(cfg)},
                 {"trace_h", trace},
                 {"trace_h_formula", formula},
                 {"flow_pi_minus_tau", tau_residual},
                 {"projection", {{"samples", proj.samples},
                                 {"violations", proj.violations},
                                 {"interior_violations", proj.interior_violations}}}};
  rep.tolerances = {{"trace", 1e-10}, {"flow_tau", 1e-12}, {"zero_tol", c.tol}};
  rep.checks.push_back(MakeCheck("trace_formula", std::abs(trace - formula), 1e-10));
  rep.checks.push_back(MakeCheck("flow_pi_equals_tau", tau_residual, 1e-12));
  rep.checks.push_back(MakeCheck("projection_violations", proj.violations + proj.interior_violations, 0.0));
  if (!element.empty()) {
    const Element x = ParseElement(a, element);
    rep.config["element"] = serialize::VectorJson(x);
    const wedge::WedgeVerdict v = wedge::WedgeMembership(cfg, x, c.tol);
    const wedge::OrbitVerdict o = wedge::OrbitMeetsWedge(a, x, k, c.tol);
    rep.results["wedge"] = serialize::ToJson(v);
    rep.results["orbit"] = serialize::ToJson(o);
    rep.checks.push_back(MakeCheck("strip_agrees_with_decomposition", v.agrees ? 0.0 : 1.0, 0.0));
    rep.checks.push_back(MakeCheck("rank_route_agrees_with_index_route", o.rank_route == o.index_route ? 0.0 : 1.0,
                                   0.0));
  }
  return rep;
}

Exponent RequireAdmissible(const jalg::AlgebraDescriptor& d, const std::string& s_text) {
  const Exponent s = Exponent::Parse(s_text);
  const std::string violation = riesz::WallachViolation(d, s);
  if (!violation.empty()) throw ValidationError(violation);
  return s;
}

Report RieszEval(const std::string& algebra, const std::string& s_text, const std::string& element,
                 const std::string& imag, const Common& c) {
  const auto d = ParseAlgebra(algebra);
  const Exponent s = RequireAdmissible(d, s_text);
  const jalg::JordanAlgebra a(d);
  const Element x = ParseElement(a, element);
  Report rep;
  rep.command = "riesz-eval";
  rep.config = {{"algebra", serialize::ToJson(d)}, {"s", s.ToString()}, {"element", serialize::VectorJson(x)},
                {"tol", c.tol}};
  if (!imag.empty()) {
    const Element y = ParseElement(a, imag);
    rep.config["imag"] = serialize::VectorJson(y);
    const ComplexElement z = x.cast<cd>() + cd(0.0, 1.0) * y.cast<cd>();
    const cd value = riesz::TildeMuTube(a, s.value(), z);
    rep.results = {{"point", "tube"}, {"value", serialize::ComplexJson(value)},
                   {"log_delta", serialize::ComplexJson(riesz::LogDeltaTube(a, z))}};
    return rep;
  }
  const cd formula = riesz::TildeMuBoundary(a, s.value(), x, c.tol);
  const riesz::BoundaryLimit limit = riesz::TubeBoundaryLimit(a, s.value(), x);
  const double rel = std::abs(limit.value - formula) / std::abs(formula);
  const jalg::Classification cl = a.Classify(x, c.tol);
  rep.results = {{"point", "boundary"},
                 {"index", cl.index},
                 {"det", cl.det},
                 {"value", serialize::ComplexJson(formula)},
                 {"tube_limit", serialize::ComplexJson(limit.value)},
                 {"tube_limit_error_estimate", limit.error_estimate},
                 {"relative_gap", rel}};
  rep.tolerances = {{"boundary_limit", 1e-6}, {"zero_tol", c.tol}};
  rep.checks.push_back(MakeCheck("boundary_limit_matches_formula", rel, 1e-6));
  if (s.IsInteger()) {
    const double mult = riesz::MultIdentityResidual(a, static_cast<int>(std::lround(s.value())), x, c.tol);
    rep.results["mult_identity_residual"] = mult;
    rep.tolerances["mult_identity"] = 1e-10;
    rep.checks.push_back(MakeCheck("mult_identity", mult, 1e-10));
  }
  return rep;
}

std::vector<Exponent> ExponentsFor(const std::string& s_text, const std::string& scan_text, Json* config) {
  if (s_text.empty() == scan_text.empty()) throw ValidationError("give exactly one of --s and --scan");
  if (!s_text.empty()) {
    const Exponent s = Exponent::Parse(s_text);
    (*config)["s"] = s.ToString();
    return {s};
  }
  const Scan scan = ParseScan(scan_text);
  if (scan.name != "s") throw ValidationError("only s can be scanned, got '" + scan.name + "'");
  (*config)["scan"] = scan_text;
  return scan.values;
}

Report SupportReportCmd(const std::string& algebra, const std::string& s_text, const std::string& scan_text,
                        bool parity_only, std::vector<riesz::SupportReport>* tables) {
  const auto d = ParseAlgebra(algebra);
  Report rep;
  rep.command = "support-report";
  rep.config = {{"algebra", serialize::ToJson(d)}, {"parity_only", parity_only}};
  const std::vector<Exponent> values = ExponentsFor(s_text, scan_text, &rep.config);
  if (values.size() == 1 && !parity_only) RequireAdmissible(d, values[0].ToString());
  std::vector<std::optional<riesz::SupportReport>> slots(values.size());
  ParallelFor(static_cast<int>(values.size()), [&](int i) {
    if (parity_only || riesz::RieszAdmissible(d, values[i])) {
      slots[i] = riesz::MakeSupportReport(d, values[i], parity_only);
    }
  });
  Json reports = Json::array(), skipped = Json::array();
  int inconsistent = 0;
  for (size_t i = 0; i < values.size(); ++i) {
    if (!slots[i]) {
      skipped.push_back({{"s", values[i].ToString()}, {"reason", riesz::WallachViolation(d, values[i])}});
      continue;
    }
    for (const auto& row : slots[i]->wedge_duality) inconsistent += row.consistent ? 0 : 1;
    reports.push_back(serialize::ToJson(*slots[i]));
    tables->push_back(*slots[i]);
  }
  if (values.size() == 1) {
    rep.results = reports[0];
  } else {
    rep.results = {{"reports", reports}, {"skipped", skipped}};
  }
  rep.tolerances = {{"parity", "exact when s is rational, 1e-12 otherwise"}};
  rep.checks.push_back(MakeCheck("inconsistent_duality_rows", inconsistent, 0.0));
  return rep;
}

Report WedgeDualityCmd(const std::string& algebra, const std::string& s_text, const std::string& scan_text, int k,
                       int samples, bool parity_only) {
  const auto d = ParseAlgebra(algebra);
  Report rep;
  rep.command = "wedge-duality";
  rep.config = {{"algebra", serialize::ToJson(d)}, {"k", k}, {"wedge_samples", samples}, {"parity_only", parity_only}};
  const std::vector<Exponent> values = ExponentsFor(s_text, scan_text, &rep.config);
  if (values.size() == 1 && !parity_only) RequireAdmissible(d, values[0].ToString());
  if (k > d.rank) throw ValidationError("k must lie in [0, " + std::to_string(d.rank) + "]");
  std::vector<int> ks;
  for (int kk = 0; kk <= d.rank; ++kk) {
    if (k < 0 || kk == k) ks.push_back(kk);
  }
  const int total = static_cast<int>(values.size() * ks.size());
  std::vector<std::optional<riesz::DualityRow>> slots(total);
  ParallelFor(total, [&](int i) {
    const Exponent& s = values[i / ks.size()];
    if (parity_only || riesz::RieszAdmissible(d, s)) {
      slots[i] = riesz::WedgeDualityCheck(d, s, ks[i % ks.size()], samples, parity_only);
    }
  });
  Json rows = Json::array();
  int inconsistent = 0;
  for (int i = 0; i < total; ++i) {
    if (!slots[i]) continue;
    Json row = serialize::ToJson(*slots[i]);
    row["s"] = values[i / ks.size()].ToString();
    rows.push_back(row);
    inconsistent += slots[i]->consistent ? 0 : 1;
  }
  rep.results = {{"rows", rows}};
  rep.checks.push_back(MakeCheck("inconsistent_duality_rows", inconsistent, 0.0));
  return rep;
}

struct SuiteTally {
  double worst = 0.0;
  int64_t failing_trial = -1;
};

Report ModularVerify(int dim, int trials, const std::string& rep1d_spec, int grid, double lambda_max, int bumps,
                     const Common& c) {
  Report rep;
  rep.command = "modular-verify";
  rep.seed = c.seed;
  if (!rep1d_spec.empty()) {
    // One-dimensional Riesz model.
    const auto eq = rep1d_spec.find('=');
    if (eq == std::string::npos || Trim(rep1d_spec.substr(0, eq)) != "s") {
      throw ValidationError("--rep1d expects s=VALUE, got '" + rep1d_spec + "'");
    }
    const Exponent s = Exponent::Parse(rep1d_spec.substr(eq + 1));
    if (!(s.value() > 0.0)) throw ValidationError("s must be positive");
    rep.config = {{"rep1d", {{"s", s.ToString()}}}, {"grid", grid}, {"lambda_max", lambda_max},
                  {"bumps", bumps}, {"seed", c.seed}};
    Rng rng(c.seed);
    std::vector<SampledFunction> phis, psis;
    for (int i = 0; i < bumps; ++i) phis.push_back(modular::RandomBump(rng));
    for (int i = 0; i < bumps; ++i) psis.push_back(modular::RandomBump(rng, true));
    std::vector<int> grids;
    for (int g = grid / 8; g <= grid; g *= 2) {
      if (g >= modular::DiscreteRep1D::kOrder && g % modular::DiscreteRep1D::kOrder == 0) grids.push_back(g);
    }
    if (grids.empty() || grids.back() != grid) {
      modular::DiscreteRep1D::Build(s.value(), grid, lambda_max);  // reports the invalid grid
    }
    std::vector<double> residuals(grids.size());
    ParallelFor(static_cast<int>(grids.size()), [&](int gi) {
      const auto r = modular::DiscreteRep1D::Build(s.value(), grids[gi], lambda_max);
      double worst = 0.0;
      for (const auto& phi : phis) worst = std::max(worst, modular::EndpointResidual(r, phi).residual);
      residuals[gi] = worst;
    });
    const auto fine = modular::DiscreteRep1D::Build(s.value(), grid, lambda_max);
    double orth = 0.0;
    for (int i = 0; i < bumps; ++i) orth = std::max(orth, modular::SymplecticOrthogonality1D(fine, phis[i], psis[i]));
    bool monotone = true;
    for (size_t i = 1; i < residuals.size(); ++i) monotone = monotone && residuals[i] < residuals[i - 1];
    rep.results = {{"grids", grids}, {"endpoint_residuals", residuals}, {"monotone", monotone},
                   {"endpoint_residual", residuals.back()}, {"symplectic_orthogonality", orth}};
    rep.tolerances = {{"endpoint", 1e-6}, {"symplectic", 1e-4}};
    rep.checks.push_back(MakeCheck("endpoint_identity", residuals.back(), 1e-6, "<=",
                                   "max over test functions and t, relative L2(mu_s) norm"));
    rep.checks.push_back(MakeCheck("symplectic_orthogonality", orth, 1e-4));
    return rep;
  }

  if (dim < 1 || dim > 64) throw ValidationError("--dim must lie in [1, 64]");
  if (trials < 1) throw ValidationError("--trials must be >= 1");
  rep.config = {{"dim", dim}, {"trials", trials}, {"seed", c.seed}};
  const std::vector<double> t_grid = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
  enum { kRound, kKms, kOs, kJpos, kDual, kHardy, kRigid, kSuites };
  const char* names[kSuites] = {"bijection_round_trip", "kms",           "os_isometry", "j_positivity",
                                "complement_equals_jv", "hardy_endpoint", "rigidity"};
  const double tols[kSuites] = {1e-8, 1e-10, 1e-10, 1e-10, 1e-8, 1e-8, 0.0};
  std::vector<std::array<double, kSuites>> per_trial(trials);
  ParallelFor(trials, [&](int t) {
    Rng rng(c.seed + static_cast<uint64_t>(t));
    const modular::ModularPair pair = modular::RandomPair(rng, dim);
    const modular::StandardSubspace v = modular::StandardFromPair(pair);
    const modular::ModularPair back = modular::ModularObjects(v);
    auto& out = per_trial[t];
    out[kRound] = std::max((back.delta - pair.delta).norm() / pair.delta.norm(),
                           (back.j_matrix - pair.j_matrix).norm());
    out[kKms] = modular::KmsDefect(pair, v, t_grid) / std::max(1.0, pair.delta.norm());
    const modular::OsDefect os = modular::OsIsometryDefect(pair, v, 16, c.seed + t);
    out[kOs] = std::max(os.isometry, os.fixed);
    const modular::StandardSubspace vp = modular::SymplecticComplement(v);
    out[kJpos] = -std::min(modular::JPositivityMin(v, pair.J(), 16, c.seed + t),
                           modular::JPositivityMin(vp, pair.J(), 16, c.seed + t));
    out[kDual] = modular::SubspaceDistance(vp, modular::SpanOf(pair.J().ApplyToColumns(v.basis)));
    double hardy = 0.0;
    for (int col = 0; col < v.real_dim(); ++col) {
      const modular::CVector xi = v.basis.col(col);
      hardy = std::max(hardy, (modular::HardyEmbed(pair, xi, cd(0.0, kPi)) - pair.J().Apply(xi)).norm());
    }
    out[kHardy] = hardy;
    out[kRigid] = modular::RigiditySearch(pair, rng, 4).counterexamples;
  });
  Json matrix = Json::array();
  for (int k = 0; k < kSuites; ++k) {
    SuiteTally tally;
    for (int t = 0; t < trials; ++t) {
      tally.worst = std::max(tally.worst, per_trial[t][k]);
      if (tally.failing_trial < 0 && !Holds(per_trial[t][k], tols[k], "<=")) tally.failing_trial = t;
    }
    const bool pass = tally.failing_trial < 0;
    Json row = {{"suite", names[k]}, {"max_defect", tally.worst}, {"tolerance", tols[k]}, {"pass", pass}};
    if (!pass) row["failing_seed"] = c.seed + static_cast<uint64_t>(tally.failing_trial);
    matrix.push_back(row);
    rep.tolerances[names[k]] = tols[k];
    rep.checks.push_back(MakeCheck(names[k], tally.worst, tols[k], "<=",
                                   pass ? "" : "replay with --trials 1 --seed " +
                                                   std::to_string(c.seed + tally.failing_trial)));
  }
  rep.results = {{"suites", matrix}};
  return rep;
}

Report Rep1D(const std::string& s_text, int grid, double lambda_max, int bumps, int points, const Common& c) {
  const Exponent s = Exponent::Parse(s_text);
  if (!(s.value() > 0.0)) throw ValidationError("s must be positive");
  if (bumps < 1) throw ValidationError("--bumps must be >= 1");
  if (points < 1) throw ValidationError("--points must be >= 1");
  const auto r = modular::DiscreteRep1D::Build(s.value(), grid, lambda_max);
  Report rep;
  rep.command = "rep1d";
  rep.seed = c.seed;
  rep.config = {{"s", s.ToString()}, {"grid", grid}, {"lambda_max", lambda_max}, {"bumps", bumps},
                {"points", points},  {"seed", c.seed}};
  Rng rng(c.seed);
  std::vector<SampledFunction> phis, psis;
  for (int i = 0; i < bumps; ++i) phis.push_back(modular::RandomBump(rng));
  for (int i = 0; i < bumps; ++i) psis.push_back(modular::RandomBump(rng, true));

  std::vector<modular::EndpointResult> endpoint(bumps);
  std::vector<double> orth(bumps), semigroup(bumps);
  ParallelFor(bumps, [&](int i) {
    endpoint[i] = modular::EndpointResidual(r, phis[i]);
    orth[i] = modular::SymplecticOrthogonality1D(r, phis[i], psis[i]);
    semigroup[i] = modular::WedgeSemigroupCheck1D(r, phis[i], 1.5);
  });
  Json functions = Json::array();
  double worst_endpoint = 0.0, worst_bound = 0.0;
  for (int i = 0; i < bumps; ++i) {
    functions.push_back({{"support", {phis[i].lo, phis[i].hi}},
                         {"endpoint_residual", endpoint[i].residual},
                         {"endpoint_per_t", endpoint[i].per_t},
                         {"bound_ratio", endpoint[i].bound_ratio},
                         {"complement_support", {psis[i].lo, psis[i].hi}},
                         {"symplectic_orthogonality", orth[i]},
                         {"semigroup_residual", semigroup[i]}});
    worst_endpoint = std::max(worst_endpoint, endpoint[i].residual);
    worst_bound = std::max(worst_bound, endpoint[i].bound_ratio);
  }
  std::vector<cd> pts;
  std::uniform_real_distribution<double> re(-3.0, 3.0), im(0.05, 3.0);
  for (int i = 0; i < points; ++i) pts.emplace_back(re(rng), im(rng));
  const modular::GramResult gram = modular::KernelGram(s.value(), pts);
  rep.results = {{"grid", {{"nodes", r.size()}, {"panel_width", r.panel_width()}, {"weight_sum", r.weights().sum()}}},
                 {"test_functions", functions},
                 {"kernel_gram", {{"points", points}, {"min_eigenvalue", gram.min_eigenvalue}, {"norm", gram.norm}}}};
  rep.tolerances = {{"endpoint", 1e-6}, {"symplectic", 1e-4}, {"semigroup", 1e-8}, {"bound_ratio", 1.0},
                    {"kernel_psd", 1e-10}};
  rep.checks.push_back(MakeCheck("endpoint_identity", worst_endpoint, 1e-6));
  rep.checks.push_back(MakeCheck("continuation_bound", worst_bound, 1.0));
  rep.checks.push_back(
      MakeCheck("symplectic_orthogonality", *std::max_element(orth.begin(), orth.end()), 1e-4));
  rep.checks.push_back(
      MakeCheck("wedge_semigroup", *std::max_element(semigroup.begin(), semigroup.end()), 1e-8));
  rep.checks.push_back(MakeCheck("kernel_psd", -gram.min_eigenvalue / std::max(gram.norm, 1e-300), 1e-10));
  if (s.IsInteger()) {
    // Disjoint bumps in the wedge: Im vanishes for even s and not for odd s.
    const auto sc = modular::SuppControlCheck1D(r, Bump(3.0, 4.0), Bump(1.0, 2.0));
    const bool even = s.TimesIntegerIsEven(1);
    rep.results["supp_control"] = {{"expected_vanishing", even},
                                   {"pairing", serialize::ComplexJson(sc.pairing)},
                                   {"relative_im", sc.relative_im},
                                   {"oracle_gap", sc.oracle_gap},
                                   {"hermiticity", sc.hermiticity}};
    rep.tolerances["supp_control"] = even ? 1e-6 : 1e-2;
    rep.checks.push_back(even ? MakeCheck("supp_control", sc.relative_im, 1e-6)
                              : MakeCheck("supp_control_odd", sc.relative_im, 1e-2, ">"));
  }
  return rep;
}

void Emit(const Report& rep, const Common& c, const std::string& csv_override, std::ostream& out) {
  std::string text;
  if (c.format == "csv") {
    text = csv_override.empty() ? rep.ToCsv() : csv_override;
  } else {
    text = rep.ToJson().dump(2) + "\n";
  }
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw ValidationError("cannot write '" + c.output + "'");
  file << text;
}

}  // namespace

jalg::AlgebraDescriptor ParseAlgebra(const std::string& text) {
  const std::string t = Trim(text);
  if (!t.empty() && t.front() == '{') {
    try {
      return serialize::DescriptorFromJson(Json::parse(t));
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(std::string("malformed algebra JSON: ") + e.what());
    }
  }
  const auto colon = t.find(':');
  if (colon == std::string::npos) {
    throw ValidationError("algebra must look like family:size (sym:3, herm:2, quat:2, mink:4, octonion:3)");
  }
  const jalg::Family family = jalg::ParseFamily(t.substr(0, colon));
  const std::string size = t.substr(colon + 1);
  if (size.empty() || size.find_first_not_of("0123456789") != std::string::npos) {
    throw ValidationError("algebra size must be a positive integer, got '" + size + "'");
  }
  return jalg::MakeDescriptor(family, std::stoi(size));
}

Element ParseElement(const jalg::JordanAlgebra& a, const std::string& text) {
  std::string t = Trim(text);
  if (!t.empty() && t.front() == '@') t = Trim(ReadFile(t.substr(1)));
  if (t.rfind("diag:", 0) == 0) {
    const std::vector<double> values = ParseNumberList(t.substr(5));
    if (static_cast<int>(values.size()) != a.rank()) {
      throw ValidationError("diag: needs " + std::to_string(a.rank()) + " values, got " +
                            std::to_string(values.size()));
    }
    const auto frame = a.CanonicalFrame();
    Element x = Element::Zero(a.dim());
    for (int j = 0; j < a.rank(); ++j) x += values[j] * frame[j];
    return x;
  }
  const std::vector<double> values = ParseNumberList(t);
  if (static_cast<int>(values.size()) != a.dim()) {
    throw ValidationError("element needs " + std::to_string(a.dim()) + " coordinates, got " +
                          std::to_string(values.size()));
  }
  return Eigen::Map<const Eigen::VectorXd>(values.data(), a.dim());
}

Scan ParseScan(const std::string& text) {
  const auto eq = text.find('=');
  const auto dots = text.find("..");
  const auto colon = text.rfind(':');
  if (eq == std::string::npos || dots == std::string::npos || colon == std::string::npos || dots < eq ||
      colon < dots) {
    throw ValidationError("scan must look like name=a..b:step, got '" + text + "'");
  }
  Scan scan;
  scan.name = Trim(text.substr(0, eq));
  const Exponent a = Exponent::Parse(Trim(text.substr(eq + 1, dots - eq - 1)));
  const Exponent b = Exponent::Parse(Trim(text.substr(dots + 2, colon - dots - 2)));
  const Exponent step = Exponent::Parse(Trim(text.substr(colon + 1)));
  if (!(step.value() > 0.0)) throw ValidationError("scan step must be positive");
  if (b.value() < a.value()) throw ValidationError("scan end must not precede its start");
  const double count = std::floor((b.value() - a.value()) / step.value() + 1e-9) + 1.0;
  if (count > 100000) throw ValidationError("scan has too many points");
  const bool exact = a.is_exact() && step.is_exact();
  for (int i = 0; i < static_cast<int>(count); ++i) {
    if (exact) {
      scan.values.emplace_back(*a.exact() + *step.exact() * Rational(i));
    } else {
      scan.values.push_back(Exponent::FromDouble(a.value() + i * step.value()));
    }
  }
  return scan;
}

int ThreadCount() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("JT_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) n = std::min<long>(n, cap);
  }
  return n;
}

void ParallelFor(int n, const std::function<void(int)>& body) {
  const int workers = std::min(ThreadCount(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  // Rethrow the lowest-index failure so errors are deterministic too.
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

Check MakeCheck(std::string name, double value, double tolerance, std::string relation, std::string note) {
  Check c{std::move(name), value, tolerance, std::move(relation), false, std::move(note)};
  c.pass = Holds(value, tolerance, c.relation);
  return c;
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json Report::ToJson() const {
  Json checks_json = Json::array();
  for (const auto& c : checks) {
    Json row = {{"check", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"relation", c.relation},
                {"pass", c.pass}};
    if (!c.note.empty()) row["note"] = c.note;
    checks_json.push_back(row);
  }
  return Json{{"command", command},
              {"config", config},
              {"results", results},
              {"provenance", {{"tool", "jtube"}, {"version", JTUBE_VERSION}, {"seed", seed},
                              {"tolerances", tolerances}}},
              {"summary", {{"pass", passed()}, {"checks", checks_json}}}};
}

std::string Report::ToCsv() const {
  std::ostringstream out;
  out << "path,value\n";
  Flatten(ToJson(), "", out);
  return out.str();
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"jtube: Jordan algebras, wedges, Riesz distributions and standard subspaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", JTUBE_VERSION);

  Common common;
  std::string algebra, element, imag, s_text, scan_text, frame = "canonical", rep1d_spec;
  bool parity_only = false;
  int k = -1, samples = 100, audit_samples = 32, dim = 4, trials = 50, grid = 2048, bumps = 5, points = 50;
  double lambda_max = 200.0;

  auto* classify = app.add_subcommand("classify", "Spectral decomposition and classification of an element");
  classify->add_option("--algebra,-a", algebra, "family:size")->required();
  classify->add_option("--element,-x", element, "Coordinates, diag:..., JSON array or @file")->required();
  AddCommon(classify, &common);

  auto* wedge_cmd = app.add_subcommand("wedge", "Boost generator h_k, wedge membership and projection audit");
  wedge_cmd->add_option("--algebra,-a", algebra)->required();
  wedge_cmd->add_option("--k", k, "Number of +1 frame members")->required();
  wedge_cmd->add_option("--element,-x", element, "Optional element to test for wedge membership");
  wedge_cmd->add_option("--frame", frame)->check(CLI::IsMember({"canonical", "random"}));
  wedge_cmd->add_option("--samples", samples, "Projection audit samples")->check(CLI::PositiveNumber);
  wedge_cmd->add_option("--audit-samples", audit_samples, "Cone invariance audit samples")
      ->check(CLI::NonNegativeNumber);
  AddCommon(wedge_cmd, &common);

  auto* eval = app.add_subcommand("riesz-eval", "Riesz boundary value, tube value and multiplicative identity");
  eval->add_option("--algebra,-a", algebra)->required();
  eval->add_option("--s", s_text, "Exponent (rational like 1/2 allowed)")->required();
  eval->add_option("--element,-x", element, "Real part")->required();
  eval->add_option("--imag", imag, "Imaginary part; evaluates on the tube instead of the boundary");
  AddCommon(eval, &common);

  auto* support = app.add_subcommand("support-report", "Support of Im mu~_s by component, with wedge duality");
  support->add_option("--algebra,-a", algebra)->required();
  support->add_option("--s", s_text);
  support->add_option("--scan", scan_text, "s=a..b:step");
  support->add_flag("--parity-only", parity_only, "Evaluate the parity tables also outside the Wallach set");
  AddCommon(support, &common);

  auto* duality = app.add_subcommand("wedge-duality", "The three equivalent wedge-duality predicates");
  duality->add_option("--algebra,-a", algebra)->required();
  duality->add_option("--s", s_text);
  duality->add_option("--scan", scan_text, "s=a..b:step");
  duality->add_flag("--parity-only", parity_only, "Evaluate the predicates also outside the Wallach set");
  duality->add_option("--k", k, "Single k (default: all)");
  duality->add_option("--samples", samples, "Random wedge points per k")->check(CLI::PositiveNumber);
  AddCommon(duality, &common);

  auto* verify = app.add_subcommand("modular-verify", "Randomized modular-theory property suites");
  verify->add_option("--dim", dim, "Hilbert space dimension");
  verify->add_option("--trials", trials, "Random modular pairs");
  verify->add_option("--rep1d", rep1d_spec, "Run the 1D Riesz model instead, e.g. s=1");
  verify->add_option("--grid", grid, "Grid size for --rep1d");
  verify->add_option("--lambda-max", lambda_max, "Spectral cutoff for --rep1d")->check(CLI::PositiveNumber);
  verify->add_option("--bumps", bumps, "Random test functions for --rep1d")->check(CLI::PositiveNumber);
  AddCommon(verify, &common);

  auto* rep1d = app.add_subcommand("rep1d", "Discretized one-dimensional Riesz representation");
  rep1d->add_option("--s", s_text)->required();
  rep1d->add_option("--grid", grid);
  rep1d->add_option("--lambda-max", lambda_max)->check(CLI::PositiveNumber);
  rep1d->add_option("--bumps", bumps);
  rep1d->add_option("--points", points, "Kernel Gram points");
  AddCommon(rep1d, &common);

  std::vector<std::string> argv_store = {"jtube"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << JTUBE_VERSION << "\n";
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    Report rep;
    std::string csv;
    if (classify->parsed()) {
      rep = Classify(algebra, element, common);
    } else if (wedge_cmd->parsed()) {
      rep = Wedge(algebra, k, element, frame, samples, audit_samples, common);
    } else if (eval->parsed()) {
      rep = RieszEval(algebra, s_text, element, imag, common);
    } else if (support->parsed()) {
      std::vector<riesz::SupportReport> tables;
      rep = SupportReportCmd(algebra, s_text, scan_text, parity_only, &tables);
      csv = serialize::SupportReportCsv(tables);
    } else if (duality->parsed()) {
      samples = duality->count("--samples") ? samples : 16;
      rep = WedgeDualityCmd(algebra, s_text, scan_text, k, samples, parity_only);
    } else if (verify->parsed()) {
      rep = ModularVerify(dim, trials, rep1d_spec, grid, lambda_max, bumps, common);
    } else if (rep1d->parsed()) {
      rep = Rep1D(s_text, grid, lambda_max, bumps, points, common);
    }
    rep.seed = common.seed;
    Emit(rep, common, csv, out);
    if (!rep.passed()) {
      for (const auto& c : rep.checks) {
        if (!c.pass) {
          err << "check failed: " << c.name << " = " << c.value << " (needs " << c.relation << " " << c.tolerance
              << ")" << (c.note.empty() ? "" : "; " + c.note) << "\n";
        }
      }
      return kCheckFailure;
    }
    return kPass;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UnsupportedAlgebraError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kCheckFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsageError;
}

}  // namespace cli
}  // namespace jtube
