#include "qig/audit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "qig/errors.hpp"
#include "qig/expansional.hpp"
#include "qig/geometry.hpp"
#include "qig/matrix_io.hpp"
#include "qig/norms.hpp"
#include "qig/random.hpp"
#include "qig/weight.hpp"

namespace qig {

namespace {

struct KindInfo {
  AuditKind kind;
  const char* name;
};

constexpr KindInfo kKindNames[] = {
    {AuditKind::Theorem1Log, "theorem1_log"},
    {AuditKind::Theorem1Form, "theorem1_form"},
    {AuditKind::Theorem2Sandwich, "theorem2_sandwich"},
    {AuditKind::DualityPairing, "duality_pairing"},
    {AuditKind::BkmHessian, "bkm_hessian"},
    {AuditKind::Theorem5Bound, "theorem5_bound"},
    {AuditKind::EntropyIdentity, "entropy_identity"},
    {AuditKind::Kullback, "kullback"},
    {AuditKind::MixtureClosure, "mixture_closure"},
    {AuditKind::NormChain, "norm_chain"},
    {AuditKind::DysonSeries, "dyson_series"},
};

std::uint64_t kind_index(AuditKind kind) {
  for (std::size_t i = 0; i < std::size(kKindNames); ++i) {
    if (kKindNames[i].kind == kind) return i;
  }
  throw InvalidArgument("unknown audit kind");
}

constexpr double kFormPowers[] = {0.0, 0.25, 0.5};
constexpr double kMixtureBasePowers[] = {0.0, 0.25, 0.5};
constexpr double kCertificateSlack = 1e-9;

AuditRecord make_record(const AuditCase& c, std::string detail, double lhs, double rhs) {
  AuditRecord r;
  r.kind = c.kind;
  r.instance = c.instance;
  r.dim = c.operators.begin()->second.dim();
  r.detail = std::move(detail);
  r.lhs = lhs;
  r.rhs = rhs;
  r.holds = lhs <= rhs;
  return r;
}

void check_theorem1_log(const AuditCase& c, const AuditTolerances& tol,
                        std::vector<AuditRecord>& out) {
  const DensityState rho(c.op("rho"));
  const DensityState sigma(c.op("sigma"));
  const double lhs = operator_norm(relative_hamiltonian(rho, sigma));
  const double rhs = std::log(nearby_constant(rho, sigma)) + tol.theorem1;
  out.push_back(make_record(c, "||log rho - log sigma|| vs log C*", lhs, rhs));
}

void check_theorem1_form(const AuditCase& c, const AuditTolerances& tol,
                         std::vector<AuditRecord>& out) {
  const DensityState rho(c.op("rho"));
  const DensityState sigma(c.op("sigma"));
  for (double p : kFormPowers) {
    const NearbyCertificate cert = minimal_certificate(rho, sigma, p, kCertificateSlack);
    const FormBoundResult fb = form_bound_check(rho, sigma, cert, tol.theorem1);
    out.push_back(make_record(c, fmt::format("p={} C={:.12e}", p, cert.c()),
                              -std::min(fb.margin_minus, fb.margin_plus), tol.theorem1));
  }
}

void check_theorem2(const AuditCase& c, const AuditTolerances& tol, std::vector<AuditRecord>& out) {
  const DensityState rho(c.op("rho"));
  const SandwichBounds sb = sandwich_bounds(rho, c.op("x"), tol.theorem2);
  out.push_back(make_record(c, fmt::format("M={:.12e}", sb.araki_m),
                            -std::min(sb.lower_margin, sb.upper_margin), tol.theorem2));
}

void check_duality(const AuditCase& c, const AuditTolerances& tol, std::vector<AuditRecord>& out) {
  const DensityState rho(c.op("rho"));
  const auto& x = c.op("x");
  const auto& y = c.op("y");
  const PairingCheck pc = duality_pairing_check(rho, x, y);
  const double scale = std::max(std::abs(pc.direct), bkm_norm(x, rho) * bkm_norm(y, rho));
  out.push_back(make_record(c, "|Tr(X lower(Y)) - g(X,Y)|", std::abs(pc.mixed - pc.direct),
                            tol.duality * scale));
}

void check_hessian(const AuditCase& c, const AuditTolerances& tol, std::vector<AuditRecord>& out) {
  const DensityState rho(c.op("rho"));
  const HessianCheck hc = bkm_hessian_check(rho, c.op("x"), 1e-3, tol.hessian);
  out.push_back(make_record(c, fmt::format("g={:.12e} fd={:.12e}", hc.closed_form, hc.fd_value),
                            std::abs(hc.fd_value - hc.closed_form), hc.tolerance));
}

void check_theorem5(const AuditCase& c, const AuditTolerances& tol, std::vector<AuditRecord>& out) {
  const DensityState rho(c.op("rho"));
  const InequalityCheck ic = trace_norm_bound_check(rho, c.op("x"), tol.theorem5);
  out.push_back(make_record(c, "||rho - sigma||_1 vs ||X||", ic.lhs, ic.rhs + tol.theorem5));
}

void check_identity(const AuditCase& c, const AuditTolerances& tol, std::vector<AuditRecord>& out) {
  const DensityState rho(c.op("rho"));
  const IdentityCheck ic = symmetrized_entropy_identity(rho, c.op("x"));
  out.push_back(make_record(c, fmt::format("S+S={:.12e}", ic.lhs), std::abs(ic.lhs - ic.rhs),
                            tol.identity * std::max(1.0, std::abs(ic.lhs))));
}

void check_kullback(const AuditCase& c, const AuditTolerances& tol, std::vector<AuditRecord>& out) {
  const DensityState rho(c.op("rho"));
  const DensityState sigma(c.op("sigma"));
  const InequalityCheck ic = kullback_inequality_check(rho, sigma, tol.kullback);
  out.push_back(make_record(c, "||rho - sigma||_1^2 vs S+S", ic.lhs, ic.rhs + tol.kullback));
}

void check_mixture(const AuditCase& c, const AuditTolerances& tol, std::vector<AuditRecord>& out) {
  const DensityState rho(c.op("rho"));
  const DensityState s1(c.op("sigma1"));
  const DensityState s2(c.op("sigma2"));
  const double p = c.param("p");
  const double cmin = std::max({p_nearby_constant(rho, s1, p), p_nearby_constant(rho, s2, p), 1.0});
  const NearbyCertificate cert(cmin * (1.0 + kCertificateSlack), p);
  // The certificate must witness both endpoints before closure is meaningful.
  const double endpoint = std::min(p_nearby_margin(rho, s1, cert), p_nearby_margin(rho, s2, cert));
  out.push_back(
      make_record(c, fmt::format("endpoints p={} C={:.12e}", p, cert.c()), -endpoint, tol.mixture));
  for (int k = 1; k <= 9; ++k) {
    const double lambda = 0.1 * k;
    const DensityState mix(s1.op() * (1.0 - lambda) + s2.op() * lambda);
    out.push_back(make_record(c, fmt::format("lambda={:.1f} p={}", lambda, p),
                              -p_nearby_margin(rho, mix, cert), tol.mixture));
  }
}

void check_norm_chain(const AuditCase& c, const AuditTolerances& tol,
                      std::vector<AuditRecord>& out) {
  const DensityState rho(c.op("rho"));
  const auto& x = c.op("x");
  const double a = araki_norm(x, rho);
  const double op = operator_norm(x);
  const double m = bkm_norm(x, rho);
  const double ratio = a > 0.0 ? std::max(op, m) / a : 0.0;
  out.push_back(make_record(c, fmt::format("||X||={:.12e} ||X||_M={:.12e} ||X||_A={:.12e}", op, m, a),
                            ratio, 1.0 + tol.norm_chain));
}

void check_dyson(const AuditCase& c, const AuditTolerances& tol, int order,
                 std::vector<AuditRecord>& out) {
  const DensityState rho(c.op("rho"));
  const auto& x = c.op("x");
  const ExpansionResult series = dyson_series(rho, x, order);
  const HermitianOperator exact = perturbed_weight(rho, x).op();
  const double floor = tol.series_floor * series.remainder_scale * std::exp(series.araki_m);
  double worst = 0.0;
  int worst_order = 0;
  for (int k = 0; k <= order; ++k) {
    const double err = operator_norm(series.partial_sums[static_cast<std::size_t>(k)] - exact);
    const double ratio = err / (series.remainder_bound_at(k) + floor);
    if (ratio > worst) {
      worst = ratio;
      worst_order = k;
    }
  }
  out.push_back(make_record(c, fmt::format("M={:.12e} worst N={}", series.araki_m, worst_order),
                            worst, 1.0));
  if (order >= 20 && series.araki_m <= 2.0) {
    const double err20 = operator_norm(series.partial_sums[20] - exact);
    out.push_back(make_record(c, fmt::format("M={:.12e} N=20 absolute", series.araki_m), err20,
                              1e-12));
  }
}

std::vector<AuditRecord> run_case_unchecked(const AuditCase& c, const AuditTolerances& tol,
                                            int order) {
  std::vector<AuditRecord> out;
  switch (c.kind) {
    case AuditKind::Theorem1Log: check_theorem1_log(c, tol, out); break;
    case AuditKind::Theorem1Form: check_theorem1_form(c, tol, out); break;
    case AuditKind::Theorem2Sandwich: check_theorem2(c, tol, out); break;
    case AuditKind::DualityPairing: check_duality(c, tol, out); break;
    case AuditKind::BkmHessian: check_hessian(c, tol, out); break;
    case AuditKind::Theorem5Bound: check_theorem5(c, tol, out); break;
    case AuditKind::EntropyIdentity: check_identity(c, tol, out); break;
    case AuditKind::Kullback: check_kullback(c, tol, out); break;
    case AuditKind::MixtureClosure: check_mixture(c, tol, out); break;
    case AuditKind::NormChain: check_norm_chain(c, tol, out); break;
    case AuditKind::DysonSeries: check_dyson(c, tol, order, out); break;
  }
  return out;
}

std::string join_dims(const std::vector<int>& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(dims[i]);
  }
  return s;
}

double ratio_of(const AuditRecord& r) {
  if (r.rhs > 0.0) return r.lhs / r.rhs;
  return r.holds ? 0.0 : INFINITY;
}

std::string num(double v) { return fmt::format("{:.12e}", v); }

struct CaseResult {
  std::vector<AuditRecord> records;
  bool failed = false;
  std::optional<AuditCase> failing;
};

template <class MapFn>
AuditReport run_audit_with(const AuditConfig& config, MapFn&& map) {
  config.validate();
  const AuditTolerances tol = config.tolerances();
  const std::size_t per_kind = config.instances;
  const std::size_t total = per_kind * config.kinds.size();
  std::vector<CaseResult> results = map(total, [&](std::size_t idx) {
    const AuditKind kind = config.kinds[idx / per_kind];
    const std::size_t instance = idx % per_kind;
    AuditCase c = make_case(kind, instance, config);
    CaseResult cr;
    cr.records = run_case(c, tol, config.order);
    cr.failed = std::any_of(cr.records.begin(), cr.records.end(),
                            [](const AuditRecord& r) { return !r.holds; });
    if (cr.failed) cr.failing = std::move(c);
    return cr;
  });
  AuditReport report;
  report.config = config;
  for (auto& cr : results) {
    for (auto& r : cr.records) report.records.push_back(std::move(r));
    if (cr.failing) report.failures.push_back(std::move(*cr.failing));
  }
  return report;
}

}  // namespace

const char* audit_name(AuditKind kind) { return kKindNames[kind_index(kind)].name; }

std::optional<AuditKind> parse_audit_name(std::string_view name) {
  for (const auto& k : kKindNames) {
    if (name == k.name) return k.kind;
  }
  return std::nullopt;
}

AuditTolerances AuditTolerances::uniform(double tol) {
  AuditTolerances t;
  t.theorem1 = t.theorem2 = t.duality = t.hessian = t.theorem5 = t.identity = t.kullback =
      t.mixture = t.norm_chain = t.series_floor = tol;
  return t;
}

nlohmann::json AuditTolerances::to_json() const {
  return nlohmann::json{{"theorem1", theorem1},     {"theorem2", theorem2},
                        {"duality", duality},       {"hessian", hessian},
                        {"theorem5", theorem5},     {"identity", identity},
                        {"kullback", kullback},     {"mixture", mixture},
                        {"norm_chain", norm_chain}, {"series_floor", series_floor}};
}

AuditTolerances AuditTolerances::from_json(const nlohmann::json& j) {
  AuditTolerances t;
  auto get = [&](const char* key, double& field) {
    if (j.contains(key)) {
      if (!j[key].is_number()) throw ParseError(std::string("tolerances: '") + key + "' must be a number");
      field = j[key].get<double>();
    }
  };
  get("theorem1", t.theorem1);
  get("theorem2", t.theorem2);
  get("duality", t.duality);
  get("hessian", t.hessian);
  get("theorem5", t.theorem5);
  get("identity", t.identity);
  get("kullback", t.kullback);
  get("mixture", t.mixture);
  get("norm_chain", t.norm_chain);
  get("series_floor", t.series_floor);
  return t;
}

AuditTolerances AuditConfig::tolerances() const {
  return tol ? AuditTolerances::uniform(*tol) : AuditTolerances{};
}

void AuditConfig::validate() const {
  if (instances < 1) throw InvalidArgument("audit: instances must be >= 1");
  if (dims.empty()) throw InvalidArgument("audit: dims must be non-empty");
  for (int d : dims) {
    if (d < 2) throw InvalidArgument(fmt::format("audit: dimension {} must be >= 2", d));
  }
  if (tol && !(*tol > 0.0)) throw InvalidArgument("audit: tol must be > 0");
  if (order < 0 || order > kMaxSeriesOrder) {
    throw InvalidArgument(fmt::format("audit: order must lie in [0, {}]", kMaxSeriesOrder));
  }
  if (kinds.empty()) throw InvalidArgument("audit: no audits selected");
}

const HermitianOperator& AuditCase::op(const std::string& name) const {
  auto it = operators.find(name);
  if (it == operators.end()) {
    throw InvalidArgument(fmt::format("audit case {}#{}: missing operator '{}'", audit_name(kind),
                                      instance, name));
  }
  return it->second;
}

double AuditCase::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) {
    throw InvalidArgument(fmt::format("audit case {}#{}: missing parameter '{}'", audit_name(kind),
                                      instance, name));
  }
  return it->second;
}

AuditCase make_case(AuditKind kind, std::size_t instance, const AuditConfig& config) {
  if (config.dims.empty()) throw InvalidArgument("make_case: dims must be non-empty");
  InstanceRng rng(config.seed, (kind_index(kind) << 32) | static_cast<std::uint64_t>(instance));
  const int pick = rng.uniform_int(0, static_cast<int>(config.dims.size()) - 1);
  const Index n = config.dims[static_cast<std::size_t>(pick)];

  AuditCase c;
  c.kind = kind;
  c.instance = instance;
  const DensityState rho = random_state(n, rng);
  c.operators.emplace("rho", rho.op());
  switch (kind) {
    case AuditKind::Theorem1Log:
    case AuditKind::Theorem1Form: {
      const HermitianOperator x = random_perturbation(rho, rng, rng.uniform(0.05, 3.0));
      c.operators.emplace("sigma", perturbed_state(rho, x).state.op());
      break;
    }
    case AuditKind::Theorem2Sandwich:
    case AuditKind::Theorem5Bound:
    case AuditKind::EntropyIdentity:
      c.operators.emplace("x", random_perturbation(rho, rng, rng.uniform(0.0, 3.0)));
      break;
    case AuditKind::DualityPairing:
      c.operators.emplace("x", random_hermitian(n, rng));
      c.operators.emplace("y", random_hermitian(n, rng));
      break;
    case AuditKind::BkmHessian: {
      const HermitianOperator x = random_perturbation(rho, rng, rng.uniform(0.1, 2.0));
      c.operators.emplace("x", center(Perturbation(rho, x)).x());
      break;
    }
    case AuditKind::Kullback:
      c.operators.emplace("sigma", random_state(n, rng).op());
      break;
    case AuditKind::MixtureClosure: {
      const std::size_t k = instance % std::size(kMixtureBasePowers);
      c.params.emplace("p", kMixtureBasePowers[k]);
      const HermitianOperator x1 = random_perturbation(rho, rng, rng.uniform(0.05, 3.0));
      const HermitianOperator x2 = random_perturbation(rho, rng, rng.uniform(0.05, 3.0));
      c.operators.emplace("sigma1", perturbed_state(rho, x1).state.op());
      c.operators.emplace("sigma2", perturbed_state(rho, x2).state.op());
      break;
    }
    case AuditKind::NormChain:
      c.operators.emplace("x", random_hermitian(n, rng, rng.uniform(0.1, 3.0)));
      break;
    case AuditKind::DysonSeries: {
      // M in (0, 2]
      const double m = 2.0 - rng.uniform(0.0, 2.0);
      c.operators.emplace("x", random_perturbation(rho, rng, m));
      break;
    }
  }
  return c;
}

std::vector<AuditRecord> run_case(const AuditCase& c, const AuditTolerances& tol, int order) {
  try {
    return run_case_unchecked(c, tol, order);
  } catch (const std::exception& e) {
    AuditRecord r;
    r.kind = c.kind;
    r.instance = c.instance;
    r.dim = c.operators.empty() ? 0 : c.operators.begin()->second.dim();
    r.detail = std::string("error: ") + e.what();
    r.lhs = INFINITY;
    r.rhs = 0.0;
    r.holds = false;
    return {r};
  }
}

std::vector<AuditSummary> AuditReport::summary() const {
  std::vector<AuditSummary> out;
  for (AuditKind k : config.kinds) {
    AuditSummary s{k};
    std::size_t last = SIZE_MAX;
    bool instance_ok = true;
    auto close = [&] {
      if (last != SIZE_MAX) {
        ++s.total;
        if (instance_ok) ++s.passed;
      }
    };
    for (const auto& r : records) {
      if (r.kind != k) continue;
      if (r.instance != last) {
        close();
        last = r.instance;
        instance_ok = true;
      }
      instance_ok = instance_ok && r.holds;
      s.worst_ratio = std::max(s.worst_ratio, ratio_of(r));
    }
    close();
    out.push_back(s);
  }
  return out;
}

bool AuditReport::all_pass() const {
  return std::all_of(records.begin(), records.end(), [](const AuditRecord& r) { return r.holds; });
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "table") return ReportFormat::Table;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json-lines") return ReportFormat::JsonLines;
  return std::nullopt;
}

AuditReport run_audit(const AuditConfig& config) {
  return run_audit_with(config, [](std::size_t n, auto&& fn) {
    return kernels::omp::map_indexed<CaseResult>(n, fn);
  });
}

AuditReport run_audit_serial(const AuditConfig& config) {
  return run_audit_with(config, [](std::size_t n, auto&& fn) {
    return kernels::serial::map_indexed<CaseResult>(n, fn);
  });
}

nlohmann::json case_to_json(const AuditCase& c, const AuditTolerances& tol, int order) {
  nlohmann::json ops = nlohmann::json::object();
  for (const auto& [name, a] : c.operators) ops[name] = matrix_to_json(a);
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [name, v] : c.params) params[name] = v;
  return nlohmann::json{{"audit", audit_name(c.kind)}, {"instance", c.instance},
                        {"order", order},              {"tolerances", tol.to_json()},
                        {"params", params},            {"operators", ops}};
}

ReplayCase case_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("replay: expected a JSON object");
  for (const char* key : {"audit", "operators"}) {
    if (!j.contains(key)) throw ParseError(std::string("replay: missing field '") + key + "'");
  }
  if (!j["audit"].is_string()) throw ParseError("replay: field 'audit' must be a string");
  const auto kind = parse_audit_name(j["audit"].get<std::string>());
  if (!kind) throw ParseError("replay: unknown audit '" + j["audit"].get<std::string>() + "'");
  ReplayCase rc;
  rc.c.kind = *kind;
  if (j.contains("instance")) {
    if (!j["instance"].is_number_unsigned()) {
      throw ParseError("replay: field 'instance' must be a non-negative integer");
    }
    rc.c.instance = j["instance"].get<std::size_t>();
  }
  if (j.contains("order")) {
    if (!j["order"].is_number_integer()) throw ParseError("replay: field 'order' must be an integer");
    rc.order = j["order"].get<int>();
  }
  if (j.contains("tolerances")) rc.tol = AuditTolerances::from_json(j["tolerances"]);
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw ParseError("replay: field 'params' must be an object");
    for (const auto& [name, v] : j["params"].items()) {
      if (!v.is_number()) throw ParseError("replay: parameter '" + name + "' must be a number");
      rc.c.params.emplace(name, v.get<double>());
    }
  }
  if (!j["operators"].is_object() || j["operators"].empty()) {
    throw ParseError("replay: field 'operators' must be a non-empty object");
  }
  for (const auto& [name, doc] : j["operators"].items()) {
    rc.c.operators.emplace(name, matrix_from_json(doc, "replay operator '" + name + "'"));
  }
  return rc;
}

void write_report(std::ostream& out, const AuditReport& report, ReportFormat format) {
  const auto& cfg = report.config;
  const AuditTolerances tol = cfg.tolerances();
  const std::string tol_text = cfg.tol ? num(*cfg.tol) : std::string("default");
  const auto summary = report.summary();

  switch (format) {
    case ReportFormat::Table: {
      out << fmt::format("audit seed={} instances={} dims={} order={} tol={}\n", cfg.seed,
                         cfg.instances, join_dims(cfg.dims), cfg.order, tol_text);
      out << fmt::format("{:<20} {:>8} {:>8} {:>20}\n", "audit", "passed", "total",
                         "worst lhs/rhs");
      for (const auto& s : summary) {
        out << fmt::format("{:<20} {:>8} {:>8} {:>20.6e}\n", audit_name(s.kind), s.passed, s.total,
                           s.worst_ratio);
      }
      constexpr std::size_t kMaxListed = 20;
      std::size_t listed = 0, failing = 0;
      for (const auto& r : report.records) {
        if (r.holds) continue;
        ++failing;
        if (listed < kMaxListed) {
          ++listed;
          out << fmt::format("FAIL {} instance={} n={} {} lhs={} rhs={}\n", audit_name(r.kind),
                             r.instance, r.dim, r.detail, num(r.lhs), num(r.rhs));
        }
      }
      if (failing > listed) out << fmt::format("... {} more failing checks\n", failing - listed);
      // One replay dump per failing audit kind.
      std::vector<AuditKind> dumped;
      for (const auto& c : report.failures) {
        if (std::find(dumped.begin(), dumped.end(), c.kind) != dumped.end()) continue;
        dumped.push_back(c.kind);
        out << "replay " << case_to_json(c, tol, cfg.order).dump() << '\n';
      }
      out << "result: " << (report.all_pass() ? "PASS" : "FAIL") << '\n';
      break;
    }
    case ReportFormat::Csv: {
      out << "audit,instance,dim,detail,lhs,rhs,holds\n";
      for (const auto& r : report.records) {
        out << fmt::format("{},{},{},\"{}\",{},{},{}\n", audit_name(r.kind), r.instance, r.dim,
                           r.detail, num(r.lhs), num(r.rhs), r.holds ? 1 : 0);
      }
      for (const auto& s : summary) {
        out << fmt::format("{},*,*,\"passed {} of {}\",{},,{}\n", audit_name(s.kind), s.passed,
                           s.total, num(s.worst_ratio), s.passed == s.total ? 1 : 0);
      }
      break;
    }
    case ReportFormat::JsonLines: {
      for (const auto& r : report.records) {
        nlohmann::json j{{"audit", audit_name(r.kind)}, {"instance", r.instance},
                         {"dim", r.dim},                {"detail", r.detail},
                         {"lhs", r.lhs},                {"rhs", r.rhs},
                         {"holds", r.holds}};
        out << j.dump() << '\n';
      }
      for (const auto& s : summary) {
        nlohmann::json j{{"summary", audit_name(s.kind)},
                         {"passed", s.passed},
                         {"total", s.total},
                         {"worst_ratio", s.worst_ratio}};
        out << j.dump() << '\n';
      }
      std::vector<AuditKind> dumped;
      for (const auto& c : report.failures) {
        if (std::find(dumped.begin(), dumped.end(), c.kind) != dumped.end()) continue;
        dumped.push_back(c.kind);
        out << nlohmann::json{{"replay", case_to_json(c, tol, cfg.order)}}.dump() << '\n';
      }
      break;
    }
  }
}

}  // namespace qig
