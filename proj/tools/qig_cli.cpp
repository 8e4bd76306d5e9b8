// qig: command-line front end for the quantum information geometry library.
//
// Exit codes: 0 success / all audits pass, 1 audit failure, 2 usage or input error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "qig/audit.hpp"
#include "qig/errors.hpp"
#include "qig/expansional.hpp"
#include "qig/geometry.hpp"
#include "qig/matrix_io.hpp"
#include "qig/norms.hpp"
#include "qig/weight.hpp"

namespace {

using namespace qig;

constexpr int kExitOk = 0;
constexpr int kExitAuditFailure = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::uint64_t seed = 1;
  std::optional<double> tol;
  std::string format = "table";
  int order = 20;
  std::vector<int> dims = {2, 3, 4, 5, 6, 7, 8};
  std::size_t instances = 500;
};

ReportFormat report_format(const GlobalOptions& g) {
  const auto f = parse_report_format(g.format);
  if (!f) throw InvalidArgument("--format must be one of table, csv, json-lines");
  return *f;
}

// An ordered key -> value listing; values are numbers, booleans, strings or
// matrices. Rendered as aligned text, key,value CSV, or one JSON object.
class Listing {
 public:
  using Value = std::variant<double, bool, std::string, nlohmann::json>;

  Listing& add(std::string key, Value v) {
    items_.emplace_back(std::move(key), std::move(v));
    return *this;
  }

  void write(std::ostream& out, ReportFormat format) const {
    switch (format) {
      case ReportFormat::Table: {
        std::size_t width = 0;
        for (const auto& [k, v] : items_) width = std::max(width, k.size());
        for (const auto& [k, v] : items_) out << fmt::format("{:<{}}  {}\n", k, width, text(v));
        break;
      }
      case ReportFormat::Csv:
        out << "key,value\n";
        for (const auto& [k, v] : items_) {
          const bool quote = std::holds_alternative<nlohmann::json>(v) ||
                             std::holds_alternative<std::string>(v);
          std::string t = text(v);
          if (quote) {
            std::string escaped;
            for (char ch : t) {
              if (ch == '"') escaped += '"';
              escaped += ch;
            }
            t = "\"" + escaped + "\"";
          }
          out << k << ',' << t << '\n';
        }
        break;
      case ReportFormat::JsonLines: {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [k, v] : items_) {
          std::visit([&](const auto& x) { j[k] = x; }, v);
        }
        out << j.dump() << '\n';
        break;
      }
    }
  }

 private:
  static std::string text(const Value& v) {
    if (const auto* d = std::get_if<double>(&v)) return fmt::format("{:.15g}", *d);
    if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    if (const auto* s = std::get_if<std::string>(&v)) return *s;
    return std::get<nlohmann::json>(v).dump();
  }

  std::vector<std::pair<std::string, Value>> items_;
};

FiniteWeight read_weight(const std::string& path) {
  const HermitianOperator a = read_matrix_file(path);
  try {
    return FiniteWeight(a);
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

DensityState read_state(const std::string& path) {
  const FiniteWeight w = read_weight(path);
  try {
    return DensityState(w);
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

nlohmann::json list_json(const std::vector<double>& v) { return nlohmann::json(v); }

int cmd_norms(const GlobalOptions& g, const std::string& x_path, const std::string& base_path,
              double epsilon, double schatten_p) {
  const HermitianOperator x = read_matrix_file(x_path);
  const FiniteWeight base = read_weight(base_path);
  const NormReport r = norm_report(x, base, epsilon, schatten_p);
  Listing out;
  out.add("operator_norm", r.operator_norm)
      .add("trace_norm", r.trace_norm)
      .add("schatten_p", r.schatten_p)
      .add("schatten_p_norm", r.schatten_p_norm)
      .add("epsilon", r.epsilon)
      .add("epsilon_norm", r.epsilon_norm)
      .add("araki_norm", r.araki_norm)
      .add("bkm_norm", r.bkm_norm);
  out.write(std::cout, report_format(g));
  return kExitOk;
}

int cmd_nearby(const GlobalOptions& g, const std::string& rho_path, const std::string& sigma_path,
               double p) {
  const FiniteWeight rho = read_weight(rho_path);
  const FiniteWeight sigma = read_weight(sigma_path);
  require_same_dim(rho.op(), sigma.op(), "nearby");
  const double tol = g.tol.value_or(kLoewnerTolerance);
  const double c0 = nearby_constant(rho, sigma);
  const double cp = p_nearby_constant(rho, sigma, p);
  // Certificates need C > 1; at C* = 1 (sigma = rho) this is the boundary case.
  const NearbyCertificate cert = minimal_certificate(rho, sigma, p, 1e-10);
  const bool nearby = p_nearby_check(rho, sigma, cert, tol);
  Listing out;
  out.add("nearby_constant", c0)
      .add("boundary", c0 <= 1.0 + 1e-12)
      .add("p", p)
      .add("p_nearby_constant", cp)
      .add("certificate_c", cert.c())
      .add("p_nearby_margin", p_nearby_margin(rho, sigma, cert))
      .add("p_nearby", nearby);
  if (nearby) {
    const FormBoundResult fb = form_bound_check(rho, sigma, cert, tol);
    out.add("log_bound_lhs", operator_norm(relative_hamiltonian(rho, sigma)))
        .add("log_bound_rhs", std::log(c0))
        .add("form_margin_minus", fb.margin_minus)
        .add("form_margin_plus", fb.margin_plus)
        .add("form_bound", fb.holds);
  }
  out.write(std::cout, report_format(g));
  return kExitOk;
}

int cmd_perturb(const GlobalOptions& g, const std::string& rho_path, const std::string& x_path) {
  const FiniteWeight rho = read_weight(rho_path);
  const HermitianOperator x = read_matrix_file(x_path);
  const PerturbedState ps = perturbed_state(rho, x);
  Listing out;
  out.add("psi", ps.free_energy.psi)
      .add("z", ps.free_energy.z)
      .add("araki_norm", araki_norm(x, rho))
      .add("rho_x", matrix_to_json(ps.state.op()));
  out.write(std::cout, report_format(g));
  return kExitOk;
}

int cmd_expand(const GlobalOptions& g, const std::string& rho_path, const std::string& x_path) {
  const FiniteWeight rho = read_weight(rho_path);
  const HermitianOperator x = read_matrix_file(x_path);
  const ExpansionResult r = dyson_series(rho, x, g.order);
  const HermitianOperator exact = perturbed_weight(rho, x).op();
  Listing out;
  out.add("order", static_cast<double>(r.order))
      .add("araki_norm", r.araki_m)
      .add("remainder_bound", r.remainder_bound)
      .add("error", operator_norm(r.partial_sum - exact))
      .add("term_norms", list_json(r.term_norms))
      .add("partial_sum", matrix_to_json(r.partial_sum));
  out.write(std::cout, report_format(g));
  return kExitOk;
}

int cmd_entropy(const GlobalOptions& g, const std::string& rho_path,
                const std::string& sigma_path) {
  const DensityState rho = read_state(rho_path);
  const DensityState sigma = read_state(sigma_path);
  require_same_dim(rho.op(), sigma.op(), "entropy");
  const double tol = g.tol.value_or(1e-10);
  const double s_rs = relative_entropy(rho, sigma);
  const double s_sr = relative_entropy(sigma, rho);
  const HermitianOperator x = relative_hamiltonian(rho, sigma);
  const InequalityCheck t5 = trace_norm_bound_check(rho, x, tol);
  const InequalityCheck kl = kullback_inequality_check(rho, sigma, tol);
  Listing out;
  out.add("s_rho_sigma", s_rs)
      .add("s_sigma_rho", s_sr)
      .add("symmetrized", s_rs + s_sr)
      .add("trace_distance", t5.lhs)
      .add("relative_hamiltonian_norm", t5.rhs)
      .add("trace_bound", t5.holds)
      .add("kullback_lhs", kl.lhs)
      .add("kullback", kl.holds);
  out.write(std::cout, report_format(g));
  return kExitOk;
}

int cmd_geodesic(const GlobalOptions& g, const std::string& rho0_path,
                 const std::string& rho1_path, double lambda, const std::string& connection) {
  Connection conn;
  if (connection == "plus" || connection == "+1" || connection == "e") {
    conn = Connection::Plus;
  } else if (connection == "minus" || connection == "-1" || connection == "m") {
    conn = Connection::Minus;
  } else {
    throw InvalidArgument("--connection must be plus or minus");
  }
  DensityState rho0 = read_state(rho0_path);
  DensityState rho1 = read_state(rho1_path);
  const DensityState r = geodesic(GeodesicSpec{std::move(rho0), std::move(rho1), conn, lambda});
  Listing out;
  out.add("connection", std::string(conn == Connection::Plus ? "plus" : "minus"))
      .add("lambda", lambda)
      .add("state", matrix_to_json(r.op()));
  out.write(std::cout, report_format(g));
  return kExitOk;
}

int cmd_separation(const GlobalOptions& g, Index nmax) {
  if (nmax < 4) throw InvalidArgument("separation: --nmax must be >= 4");
  const SeparationSweep sweep = separation_demo(nmax);
  const ReportFormat f = report_format(g);
  switch (f) {
    case ReportFormat::Table:
      std::cout << fmt::format("{:>6} {:>22} {:>22} {:>22}\n", "n", "delta", "trace_dist",
                               "rel_entropy");
      for (const auto& r : sweep.rows) {
        std::cout << fmt::format("{:>6} {:>22.15e} {:>22.15e} {:>22.15e}\n", r.n, r.delta,
                                 r.trace_dist, r.rel_entropy);
      }
      std::cout << "trace_dist_decreasing " << (sweep.trace_dist_decreasing ? "true" : "false")
                << "\nrel_entropy_increasing " << (sweep.rel_entropy_increasing ? "true" : "false")
                << " (n >= " << sweep.entropy_onset << ")\n";
      break;
    case ReportFormat::Csv:
      std::cout << "n,delta,trace_dist,rel_entropy\n";
      for (const auto& r : sweep.rows) {
        std::cout << fmt::format("{},{:.15e},{:.15e},{:.15e}\n", r.n, r.delta, r.trace_dist,
                                 r.rel_entropy);
      }
      break;
    case ReportFormat::JsonLines:
      for (const auto& r : sweep.rows) {
        std::cout << nlohmann::json{{"n", r.n},
                                    {"delta", r.delta},
                                    {"trace_dist", r.trace_dist},
                                    {"rel_entropy", r.rel_entropy}}
                         .dump()
                  << '\n';
      }
      std::cout << nlohmann::json{{"trace_dist_decreasing", sweep.trace_dist_decreasing},
                                  {"rel_entropy_increasing", sweep.rel_entropy_increasing},
                                  {"entropy_onset", sweep.entropy_onset}}
                       .dump()
                << '\n';
      break;
  }
  return kExitOk;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": JSON syntax error: " + e.what());
  }
}

int cmd_replay(const GlobalOptions& g, const std::string& path) {
  const nlohmann::json doc = read_json_file(path);
  ReplayCase rc = case_from_json(doc.contains("replay") ? doc["replay"] : doc);
  if (g.tol) rc.tol = AuditTolerances::uniform(*g.tol);
  AuditReport report;
  report.config.seed = g.seed;
  report.config.tol = g.tol;
  report.config.instances = 1;
  report.config.order = rc.order;
  report.config.dims = {static_cast<int>(rc.c.operators.begin()->second.dim())};
  report.config.kinds = {rc.c.kind};
  report.records = run_case(rc.c, rc.tol, rc.order);
  if (!report.all_pass()) report.failures.push_back(rc.c);
  write_report(std::cout, report, report_format(g));
  return report.all_pass() ? kExitOk : kExitAuditFailure;
}

int cmd_audit(const GlobalOptions& g, const std::vector<std::string>& only,
              const std::string& replay_dir) {
  AuditConfig config;
  config.seed = g.seed;
  config.tol = g.tol;
  config.dims = g.dims;
  config.instances = g.instances;
  config.order = g.order;
  if (!only.empty()) {
    config.kinds.clear();
    for (const auto& name : only) {
      const auto k = parse_audit_name(name);
      if (!k) throw InvalidArgument("unknown audit '" + name + "'");
      config.kinds.push_back(*k);
    }
  }
  const ReportFormat format = report_format(g);
  config.validate();
  const AuditReport report = run_audit(config);
  if (!replay_dir.empty() && !report.failures.empty()) {
    std::filesystem::create_directories(replay_dir);
    const AuditTolerances tol = config.tolerances();
    for (const auto& c : report.failures) {
      const auto file = std::filesystem::path(replay_dir) /
                        fmt::format("{}_{}.json", audit_name(c.kind), c.instance);
      std::ofstream out(file);
      if (!out) throw ParseError(file.string() + ": cannot open file for writing");
      out << case_to_json(c, tol, config.order).dump(1) << '\n';
    }
  }
  write_report(std::cout, report, format);
  return report.all_pass() ? kExitOk : kExitAuditFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qig: norms, nearby states, perturbation series and entropy geometry"};
  app.require_subcommand(1);
  GlobalOptions g;
  double tol = 0.0;

  app.add_option("--seed", g.seed, "Seed for random instances")->capture_default_str();
  auto* tol_opt = app.add_option("--tol", tol, "Tolerance override (> 0)");
  app.add_option("--format", g.format, "Output format: table, csv, json-lines")
      ->check(CLI::IsMember({"table", "csv", "json-lines"}))
      ->capture_default_str();
  app.add_option("--order", g.order, "Series truncation order")->capture_default_str();
  app.add_option("--dims", g.dims, "Audit dimensions")->delimiter(',');
  app.add_option("--instances", g.instances, "Audit instances per check")->capture_default_str();

  std::string a_path, b_path;
  double epsilon = 0.5, schatten = 1.0, p = 0.0, lambda = 0.5;
  std::string connection = "minus";
  Index nmax = 1024;
  std::string replay_file, replay_dir;
  std::vector<std::string> only;

  auto* norms = app.add_subcommand("norms", "All norms of X relative to a base weight");
  norms->add_option("x", a_path, "Perturbation X")->required()->check(CLI::ExistingFile);
  norms->add_option("base", b_path, "Base weight rho")->required()->check(CLI::ExistingFile);
  norms->add_option("--epsilon", epsilon, "Epsilon-norm parameter in [0, 1/2]")->capture_default_str();
  norms->add_option("--schatten", schatten, "Schatten exponent p > 0")->capture_default_str();

  auto* nearby = app.add_subcommand("nearby", "Nearby constant, p-nearby verdict, form bound");
  nearby->add_option("rho", a_path)->required()->check(CLI::ExistingFile);
  nearby->add_option("sigma", b_path)->required()->check(CLI::ExistingFile);
  nearby->add_option("-p,--power", p, "p in [0, 1)")->capture_default_str();

  auto* perturb = app.add_subcommand("perturb", "Perturbed state rho_X and free energy psi_X");
  perturb->add_option("rho", a_path)->required()->check(CLI::ExistingFile);
  perturb->add_option("x", b_path)->required()->check(CLI::ExistingFile);

  auto* expand = app.add_subcommand("expand", "Truncated Dyson series with remainder bound");
  expand->add_option("rho", a_path)->required()->check(CLI::ExistingFile);
  expand->add_option("x", b_path)->required()->check(CLI::ExistingFile);

  auto* entropy = app.add_subcommand("entropy", "Relative entropies and trace-distance bounds");
  entropy->add_option("rho", a_path)->required()->check(CLI::ExistingFile);
  entropy->add_option("sigma", b_path)->required()->check(CLI::ExistingFile);

  auto* geo = app.add_subcommand("geodesic", "Point on the plus or minus geodesic");
  geo->add_option("rho0", a_path)->required()->check(CLI::ExistingFile);
  geo->add_option("rho1", b_path)->required()->check(CLI::ExistingFile);
  geo->add_option("--lambda", lambda, "Affine parameter in [0, 1]")->capture_default_str();
  geo->add_option("--connection", connection, "plus or minus")->capture_default_str();

  auto* audit = app.add_subcommand("audit", "Seeded ensemble audits of every theorem check");
  audit->add_option("--replay", replay_file, "Re-run one dumped failing instance")
      ->check(CLI::ExistingFile);
  audit->add_option("--replay-dir", replay_dir, "Write every failing instance to this directory");
  audit->add_option("--only", only, "Restrict to the named audits")->delimiter(',');

  auto* sep = app.add_subcommand("separation", "Trace distance vs relative entropy sweep");
  sep->add_option("--nmax", nmax, "Largest dimension (power of two sweep from 4)")
      ->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (tol_opt->count() > 0) {
    if (!(tol > 0.0)) {
      std::cerr << "error: --tol must be > 0\n";
      return kExitUsage;
    }
    g.tol = tol;
  }

  try {
    if (*norms) return cmd_norms(g, a_path, b_path, epsilon, schatten);
    if (*nearby) return cmd_nearby(g, a_path, b_path, p);
    if (*perturb) return cmd_perturb(g, a_path, b_path);
    if (*expand) return cmd_expand(g, a_path, b_path);
    if (*entropy) return cmd_entropy(g, a_path, b_path);
    if (*geo) return cmd_geodesic(g, a_path, b_path, lambda, connection);
    if (*audit) {
      if (!replay_file.empty()) return cmd_replay(g, replay_file);
      return cmd_audit(g, only, replay_dir);
    }
    if (*sep) return cmd_separation(g, nmax);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
