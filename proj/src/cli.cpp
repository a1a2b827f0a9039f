#include "wehrl/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wehrl/closed_forms.hpp"
#include "wehrl/conjectures.hpp"
#include "wehrl/serialization.hpp"
#include "wehrl/sphere_quadrature.hpp"
#include "wehrl/verification.hpp"

namespace wehrl::cli {
namespace {

struct CliConfig {
  int two_j = 2;
  std::vector<double> p;
  std::vector<double> a;
  std::vector<double> b;
  int n_theta = kDefaultThetaNodes;
  int n_phi = kDefaultPhiNodes;
  long count = 1000;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string output;
  std::string state_file;
  std::string kind = "lieb";
  std::string suite;
  double tolerance = kViolationTolerance;
  bool diagonal = false;
  int threads = 0;
};

// Usage-level failure detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OrderedJson json_or_null(std::optional<double> v) { return v ? OrderedJson(*v) : OrderedJson(nullptr); }

std::string csv_cell(const OrderedJson& v) {
  if (v.is_null()) return "";
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) {
    const auto text = v.get<std::string>();
    return text.find_first_of(",\"") == std::string::npos ? text : v.dump();
  }
  return v.dump();
}

// Rows are flat objects with identical keys; the first row fixes the header.
std::string rows_to_csv(const OrderedJson& rows) {
  std::ostringstream os;
  if (rows.empty()) return {};
  bool first = true;
  for (const auto& [key, _] : rows.front().items()) {
    os << (first ? "" : ",") << key;
    first = false;
  }
  os << "\n";
  for (const auto& row : rows) {
    first = true;
    for (const auto& [_, value] : row.items()) {
      os << (first ? "" : ",") << csv_cell(value);
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

void emit(const CliConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
  } else {
    write_file_atomically(cfg.output, text);
  }
}

std::string render(const CliConfig& cfg, const OrderedJson& doc, const OrderedJson& rows) {
  return cfg.format == "csv" ? rows_to_csv(rows) : dump_json(doc);
}

SphereGrid grid_of(const CliConfig& cfg) { return gauss_legendre_grid(cfg.n_theta, cfg.n_phi); }

OrderedJson grid_json(const SphereGrid& g) { return OrderedJson{{"n_theta", g.n_theta()}, {"n_phi", g.n_phi}}; }

SpinState load_state(const CliConfig& cfg) {
  if (!cfg.state_file.empty()) {
    std::ifstream in(cfg.state_file);
    if (!in) throw UsageError("cannot read state file " + cfg.state_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return state_from_text(ss.str());
  }
  if (cfg.a.size() != 1) throw UsageError("give either --state FILE or a single --a value");
  if (cfg.two_j != 2) throw UsageError("--a describes a spin-1 state; use --two-j 2");
  return stratum_representative(cfg.a.front());
}

int cmd_entropy(const CliConfig& cfg, std::ostream& out) {
  const SpinState u = load_state(cfg);
  const SphereGrid grid = grid_of(cfg);
  const double direct = classical_entropy_direct(u, Weight::Plus, grid);
  const double pderiv = classical_entropy_pderiv(u, Weight::Plus, grid);
  const double refined = classical_entropy_direct(u, Weight::Plus, refined_grid(grid));
  std::optional<double> closed;
  std::optional<double> a;
  if (u.j().twice() == 2) {
    a = orbit_param_a(u).value();
    closed = s_cl_j1(*a);
  }
  OrderedJson row;
  row["two_j"] = u.j().twice();
  row["a"] = json_or_null(a);
  row["s_direct"] = direct;
  row["s_pderiv"] = pderiv;
  row["s_closed"] = json_or_null(closed);
  row["lieb_margin"] = direct - u.j().twice() / (u.j().twice() + 1.0);
  row["err_estimate"] = std::abs(direct - refined);
  row["route_difference"] = std::abs(direct - pderiv);
  OrderedJson doc = row;
  doc["grid"] = grid_json(grid);
  emit(cfg, render(cfg, doc, OrderedJson::array({row})), out);
  return kOk;
}

int cmd_moment(const CliConfig& cfg, std::ostream& out) {
  const SpinState u = load_state(cfg);
  const SphereGrid grid = grid_of(cfg);
  const std::vector<double> ps = cfg.p.empty() ? std::vector<double>{2.0} : cfg.p;
  std::optional<double> a;
  if (u.j().twice() == 2) a = orbit_param_a(u).value();
  OrderedJson rows = OrderedJson::array();
  for (double p : ps) {
    const MomentResult r = moment_integral(u, p, Weight::Plus, grid);
    OrderedJson row;
    row["two_j"] = u.j().twice();
    row["p"] = p;
    row["value"] = r.value;
    row["err_estimate"] = r.err_estimate;
    row["closed_form"] = a ? OrderedJson(i_p_oa_hypothesis(p, *a)) : OrderedJson(nullptr);
    row["generalized_margin"] =
        p >= 1.0 ? OrderedJson((u.j().twice() + 1.0) / (p * u.j().twice() + 1.0) - r.value) : OrderedJson(nullptr);
    rows.push_back(std::move(row));
  }
  OrderedJson doc;
  doc["state"] = state_to_json(u);
  doc["grid"] = grid_json(grid);
  doc["rows"] = rows;
  emit(cfg, render(cfg, doc, rows), out);
  return kOk;
}

int cmd_basis_table(const CliConfig& cfg, std::ostream& out) {
  const HalfInt j(cfg.two_j);
  const SphereGrid grid = grid_of(cfg);
  const std::vector<double> ps = cfg.p.empty() ? std::vector<double>{1.0, 1.5, 2.0, 3.0} : cfg.p;
  OrderedJson rows = OrderedJson::array();
  for (const HalfInt m : magnetic_labels(j)) {
    const HusimiField field(SpinState::basis(j, m), Weight::Plus, grid);
    const double s_closed = s_cl_basis(j, m);
    const double s_quad = field.entropy();
    for (double p : ps) {
      const double i_closed = i_p_basis_closed(j, m, p);
      const double i_quad = field.moment(p);
      OrderedJson row;
      row["two_j"] = j.twice();
      row["m"] = m.value();
      row["p"] = p;
      row["ip_closed"] = i_closed;
      row["ip_quadrature"] = i_quad;
      row["ip_diff"] = std::abs(i_closed - i_quad);
      row["s_closed"] = s_closed;
      row["s_quadrature"] = s_quad;
      row["s_diff"] = std::abs(s_closed - s_quad);
      rows.push_back(std::move(row));
    }
  }
  OrderedJson doc;
  doc["two_j"] = j.twice();
  doc["grid"] = grid_json(grid);
  doc["rows"] = rows;
  emit(cfg, render(cfg, doc, rows), out);
  return kOk;
}

int cmd_scan(const CliConfig& cfg, std::ostream& out) {
  if (cfg.kind == "beta") {
    const std::vector<double> as = cfg.a.empty() ? std::vector<double>{0.1, 0.5, 1.0, 2.0, 5.0, 10.0} : cfg.a;
    const std::vector<double> bs = cfg.b.empty() ? as : cfg.b;
    const std::vector<double> ps = cfg.p.empty() ? std::vector<double>{1.0, 2.0, 3.0, 4.0, 5.0} : cfg.p;
    const BetaScanReport report = scan_beta(as, bs, ps, cfg.diagonal);
    OrderedJson rows = OrderedJson::array();
    for (const auto& r : report.rows) {
      rows.push_back(OrderedJson{{"a", r.a}, {"b", r.b}, {"p", r.p}, {"margin", r.margin}});
    }
    emit(cfg, render(cfg, beta_report_to_json(report), rows), out);
    return report.min_margin < -cfg.tolerance ? kViolation : kOk;
  }
  if (cfg.kind != "lieb" && cfg.kind != "generalized") throw UsageError("unknown scan kind " + cfg.kind);
  const std::vector<double> ps = cfg.p.empty() ? std::vector<double>{1.5, 2.0, 3.0} : cfg.p;
  ScanOptions options;
  options.include_entropy = cfg.kind == "lieb";
  options.tolerance = cfg.tolerance;
  options.threads = cfg.threads;
  const ScanReport report = scan_lieb(HalfInt(cfg.two_j), cfg.count, cfg.seed, ps, grid_of(cfg), options);
  OrderedJson rows = OrderedJson::array();
  rows.push_back(OrderedJson{{"two_j", report.j.twice()},
                             {"sample_count", report.sample_count},
                             {"seed", report.seed},
                             {"min_margin", report.min_margin},
                             {"violations", report.violations.size()}});
  emit(cfg, render(cfg, scan_report_to_json(report), rows), out);
  return report.violations.empty() ? kOk : kViolation;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  std::vector<CheckResult> checks;
  if (cfg.suite == "identities") {
    checks = verify_identities(grid_of(cfg), cfg.seed);
  } else if (cfg.suite == "hypothesis") {
    checks = verify_hypothesis(grid_of(cfg));
  } else {
    throw UsageError("unknown suite '" + cfg.suite + "' (expected identities or hypothesis)");
  }
  bool ok = true;
  OrderedJson rows = OrderedJson::array();
  for (const auto& c : checks) {
    ok = ok && c.passed();
    rows.push_back(OrderedJson{{"check", c.name},
                               {"cases", c.cases},
                               {"max_deviation", c.max_deviation},
                               {"contract", c.contract},
                               {"passed", c.passed()}});
  }
  OrderedJson doc;
  doc["suite"] = cfg.suite;
  doc["passed"] = ok;
  doc["checks"] = rows;
  emit(cfg, render(cfg, doc, rows), out);
  return ok ? kOk : kNumerical;
}

int cmd_minimize(const CliConfig& cfg, std::ostream& out) {
  const HalfInt j(cfg.two_j);
  const SphereGrid grid = grid_of(cfg);
  const int restarts = static_cast<int>(std::max<long>(1, cfg.count));
  const MinimizeResult r = minimize_entropy(j, restarts, cfg.seed, grid);
  const double witness = coherence_witness(r.state, grid);
  OrderedJson row;
  row["two_j"] = j.twice();
  row["restarts"] = restarts;
  row["seed"] = cfg.seed;
  row["entropy"] = r.entropy;
  row["lower_bound"] = j.twice() / (j.twice() + 1.0);
  row["coherence_witness"] = witness;
  row["evaluations"] = r.evaluations;
  row["converged"] = r.converged;
  OrderedJson doc = row;
  doc["state"] = state_to_json(r.state);
  doc["grid"] = grid_json(grid);
  emit(cfg, render(cfg, doc, OrderedJson::array({row})), out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Wehrl entropy and coherent-state moment integrals for spin-J states", "wehrl_lab"};
  app.require_subcommand(1);

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--two-j", cfg.two_j, "Twice the spin, 2J >= 1")->check(CLI::PositiveNumber);
    sub->add_option("--p", cfg.p, "Moment exponents (comma separated)")->delimiter(',');
    sub->add_option("--a", cfg.a, "Orbit parameter(s) a in [0,1]")->delimiter(',');
    sub->add_option("--n-theta", cfg.n_theta, "Gauss-Legendre nodes in cos(theta)");
    sub->add_option("--n-phi", cfg.n_phi, "Uniform nodes in phi");
    sub->add_option("--count", cfg.count, "Sample count (scan) or restarts (minimize)");
    sub->add_option("--seed", cfg.seed, "Base seed");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", cfg.output, "Output path (default stdout)");
  };

  auto* entropy = app.add_subcommand("entropy", "Wehrl entropy by both routes, plus the J=1 closed form");
  add_common(entropy);
  entropy->add_option("--state", cfg.state_file, "State JSON file");
  auto* moment = app.add_subcommand("moment", "Moment integrals I_p");
  add_common(moment);
  moment->add_option("--state", cfg.state_file, "State JSON file");
  auto* basis = app.add_subcommand("basis-table", "Closed forms vs quadrature for basis states");
  add_common(basis);
  auto* scan = app.add_subcommand("scan", "Margin scans (lieb, generalized, beta)");
  add_common(scan);
  scan->add_option("--kind", cfg.kind, "Scan kind")->check(CLI::IsMember({"lieb", "generalized", "beta"}));
  scan->add_option("--b", cfg.b, "Beta scan b values (default: same as --a)")->delimiter(',');
  scan->add_flag("--diagonal", cfg.diagonal, "Beta scan on a = b only");
  scan->add_option("--tolerance", cfg.tolerance, "Violation threshold");
  scan->add_option("--threads", cfg.threads, "Worker threads (0: WEHRL_LAB_THREADS or all cores)");
  auto* verify = app.add_subcommand("verify", "Cross-oracle checks");
  add_common(verify);
  verify->add_option("--suite", cfg.suite, "identities | hypothesis")->required();
  auto* minimize = app.add_subcommand("minimize", "Entropy minimization over states");
  add_common(minimize);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (cfg.n_theta < 2 || cfg.n_phi < 2) throw UsageError("grid sizes must be >= 2");
    if (cfg.two_j < 1) throw UsageError("--two-j must be >= 1");
    for (double p : cfg.p) {
      if (!(p > 0.0)) throw UsageError("--p entries must be > 0");
    }
    if (entropy->parsed()) return cmd_entropy(cfg, out);
    if (moment->parsed()) return cmd_moment(cfg, out);
    if (basis->parsed()) return cmd_basis_table(cfg, out);
    if (scan->parsed()) return cmd_scan(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (minimize->parsed()) return cmd_minimize(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::DimensionMismatch:
      case ErrorCode::NonFinite:
      case ErrorCode::InvalidSpin:
      case ErrorCode::InvalidPair:
      case ErrorCode::BadGridSize:
      case ErrorCode::BadExponent:
      case ErrorCode::DomainError:
      case ErrorCode::WrongSpin:
      case ErrorCode::SpinMismatch:
      case ErrorCode::ZeroVector:
        return kUsage;
      default:
        return kNumerical;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumerical;
  }
  return kUsage;
}

}  // namespace wehrl::cli
