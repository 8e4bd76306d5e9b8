// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "qig/audit.hpp"
#include "qig/geometry.hpp"
#include "qig/norms.hpp"
#include "qig/random.hpp"
#include "support.hpp"

using namespace qig;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

AuditReport audit_of(std::initializer_list<AuditKind> kinds, std::size_t instances = 500) {
  AuditConfig c;
  c.seed = 1;
  c.instances = instances;
  c.kinds = kinds;
  return run_audit(c);
}

std::string summarize(const AuditReport& r) {
  std::string s;
  for (const auto& x : r.summary()) {
    if (!s.empty()) s += "; ";
    s += fmt::format("{} {}/{} worst lhs/rhs {:.3e}", audit_name(x.kind), x.passed, x.total,
                     x.worst_ratio);
  }
  return s;
}

Outcome criterion1() {
  const auto t0 = Clock::now();
  const AuditReport r = audit_of({AuditKind::Theorem2Sandwich});
  const double secs = seconds_since(t0);
  double max_m = 0.0;
  for (std::size_t i = 0; i < r.config.instances; ++i) {
    const auto c = make_case(AuditKind::Theorem2Sandwich, i, r.config);
    max_m = std::max(max_m, araki_norm(c.op("x"), FiniteWeight(c.op("rho"))));
  }
  const bool ok = r.all_pass() && secs < 30.0 && max_m <= 3.0 + 1e-12 &&
                  r.summary().front().total == 500;
  return {ok, fmt::format("{}; max M {:.4f}; {:.2f} s (limit 30 s)", summarize(r), max_m, secs)};
}

Outcome criterion2() {
  const AuditReport r = audit_of({AuditKind::Theorem1Log, AuditKind::Theorem1Form});
  return {r.all_pass(), summarize(r) + "; p in {0, 0.25, 0.5}"};
}

Outcome criterion3() {
  InstanceRng rng(3003, 0);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Index n = rng.uniform_int(2, 8);
    const auto rho = random_state(n, rng);
    const auto x = random_hermitian(n, rng);
    const double a = araki_norm(x, rho);
    const double s = araki_norm_scan(x, rho, 10000);
    worst = std::max(worst, std::abs(a - s) / a);
  }
  const oracle::Matrix rho_m = oracle::diag({0.8, 0.2});
  const double grid = oracle::araki_scan(oracle::pauli_x(), rho_m, 1001);
  const double closed = araki_norm(HermitianOperator(oracle::pauli_x()),
                                   FiniteWeight(HermitianOperator(rho_m)));
  const bool ok = worst <= 1e-6 && std::abs(closed - 2.0) <= 1e-12 && std::abs(grid - 2.0) <= 1e-12;
  return {ok, fmt::format("endpoint vs 1e4 scan worst rel {:.3e} on 200 (limit 1e-6); worked value "
                          "{:.15f} vs grid oracle {:.15f}",
                          worst, closed, grid)};
}

Outcome criterion4() {
  InstanceRng rng(4004, 0);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Index n = rng.uniform_int(2, 8);
    const auto rho = random_state(n, rng);
    const auto x = random_hermitian(n, rng);
    const auto y = random_hermitian(n, rng);
    const double qxx = oracle::bkm_quadrature(x.matrix(), x.matrix(), rho.matrix());
    worst = std::max(worst, std::abs(bkm_inner(x, x, rho) - qxx) / qxx);
    const double qxy = oracle::bkm_quadrature(x.matrix(), y.matrix(), rho.matrix());
    const double scale = std::max(std::abs(qxy), bkm_norm(x, rho) * bkm_norm(y, rho));
    worst = std::max(worst, std::abs(bkm_inner(x, y, rho) - qxy) / scale);
  }
  const AuditReport chain = audit_of({AuditKind::NormChain});
  return {worst <= 1e-8 && chain.all_pass(),
          fmt::format("closed form vs Gauss-Kronrod worst rel {:.3e} on 200 (limit 1e-8); {}", worst,
                      summarize(chain))};
}

Outcome criterion5() {
  const AuditReport r = audit_of({AuditKind::DysonSeries});
  // How often the floor is what saves the comparison, for the record.
  std::size_t below_rounding = 0, total = 0;
  double worst_n20 = 0.0;
  for (std::size_t i = 0; i < r.config.instances; ++i) {
    const auto c = make_case(AuditKind::DysonSeries, i, r.config);
    const FiniteWeight rho(c.op("rho"));
    const auto series = dyson_series(rho, c.op("x"), 20);
    const auto exact = perturbed_weight(rho, c.op("x")).op();
    for (int k = 0; k <= 20; ++k) {
      ++total;
      const double err = operator_norm(series.partial_sums[static_cast<std::size_t>(k)] - exact);
      if (err > series.remainder_bound_at(k)) ++below_rounding;
    }
    worst_n20 = std::max(worst_n20, operator_norm(series.partial_sum - exact));
  }
  return {r.all_pass() && worst_n20 <= 1e-12,
          fmt::format("{}; worst N=20 error {:.3e} (limit 1e-12); {}/{} (instance, N) pairs have "
                      "bound below the 1e-13 ||rho|| e^M rounding floor",
                      summarize(r), worst_n20, below_rounding, total)};
}

Outcome criterion6() {
  const AuditReport r = audit_of({AuditKind::DualityPairing, AuditKind::BkmHessian});
  return {r.all_pass(), summarize(r) + "; pairing at 1e-12 rel, Hessian at h=1e-3 within "
                                       "min(2x Richardson estimate, 1e-4 rel)"};
}

Outcome criterion7() {
  const AuditReport r =
      audit_of({AuditKind::Theorem5Bound, AuditKind::Kullback, AuditKind::EntropyIdentity});
  return {r.all_pass(), summarize(r)};
}

Outcome criterion8() {
  const AuditReport r = audit_of({AuditKind::MixtureClosure});
  return {r.all_pass(), summarize(r) + "; lambda = 0.1..0.9, p in {0, 0.25, 0.5}"};
}

Outcome criterion9() {
  const auto t0 = Clock::now();
  const SeparationSweep s = separation_demo(1024);
  const double secs = seconds_since(t0);
  double r16 = 0.0, r1024 = 0.0;
  for (const auto& row : s.rows) {
    if (row.n == 16) r16 = row.rel_entropy;
    if (row.n == 1024) r1024 = row.rel_entropy;
  }
  const double ratio = r1024 / r16;
  const bool ok = s.trace_dist_decreasing && s.rel_entropy_increasing && ratio >= 5.0 &&
                  secs < 60.0 && s.rows.size() == 9;
  return {ok, fmt::format("trace_dist decreasing {}, rel_entropy increasing beyond 16 {}, "
                          "S(1024)/S(16) = {:.3f} (limit 5), {:.2f} s (limit 60 s)",
                          s.trace_dist_decreasing, s.rel_entropy_increasing, ratio, secs)};
}

Outcome criterion10() {
  const std::string cmd = std::string(QIG_CLI_PATH) + " --seed 1 audit";
  std::string a, b;
  const int ra = oracle::run(cmd, &a);
  const int rb = oracle::run(cmd, &b);
  AuditConfig c;
  c.instances = 25;
  std::ostringstream sa, sb;
  write_report(sa, run_audit(c), ReportFormat::Csv);
  write_report(sb, run_audit_serial(c), ReportFormat::Csv);
  const bool ok = ra == 0 && rb == 0 && !a.empty() && a == b && sa.str() == sb.str();
  return {ok, fmt::format("two default CLI audit runs: exit {} / {}, {} bytes, identical {}; "
                          "OpenMP vs serial report identical {}",
                          ra, rb, a.size(), a == b, sa.str() == sb.str())};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Theorem 2 sandwich audit", criterion1},
      {"Theorem 1 boundedness converse and form bound", criterion2},
      {"Araki norm endpoint formula", criterion3},
      {"BKM closed form and norm chain", criterion4},
      {"Dyson series remainder", criterion5},
      {"Duality pairing and entropy Hessian", criterion6},
      {"Trace-norm bound, Kullback, entropy identity", criterion7},
      {"Mixture closure", criterion8},
      {"Separation demo", criterion9},
      {"Determinism", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] criterion %zu: %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
