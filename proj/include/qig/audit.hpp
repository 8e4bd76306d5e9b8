#pragma once

// Seeded ensemble audits of the theorem checks, with replayable failure dumps.

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qig/kernels.hpp"
#include "qig/spectral.hpp"

namespace qig {

enum class AuditKind {
  Theorem1Log,      ///< ||log rho - log sigma|| <= log C*
  Theorem1Form,     ///< form bound at p in {0, 1/4, 1/2}
  Theorem2Sandwich, ///< e^{-M} rho <= rho_X <= e^{M} rho
  DualityPairing,   ///< Tr(X lower(Y)) = g(X, Y)
  BkmHessian,       ///< entropy Hessian = BKM metric
  Theorem5Bound,    ///< ||rho - sigma||_1 <= ||X||
  EntropyIdentity,  ///< S(rho|sigma) + S(sigma|rho) = Tr((rho - sigma) X)
  Kullback,         ///< ||rho - sigma||_1^2 <= S(rho|sigma) + S(sigma|rho)
  MixtureClosure,   ///< mixtures of p-nearby states stay p-nearby
  NormChain,        ///< ||X||, ||X||_BKM <= ||X||_A
  DysonSeries,      ///< truncated series error <= remainder bound
};

inline constexpr AuditKind kAllAuditKinds[] = {
    AuditKind::Theorem1Log,     AuditKind::Theorem1Form,   AuditKind::Theorem2Sandwich,
    AuditKind::DualityPairing,  AuditKind::BkmHessian,     AuditKind::Theorem5Bound,
    AuditKind::EntropyIdentity, AuditKind::Kullback,       AuditKind::MixtureClosure,
    AuditKind::NormChain,       AuditKind::DysonSeries,
};

const char* audit_name(AuditKind kind);
std::optional<AuditKind> parse_audit_name(std::string_view name);

/// Per-audit tolerances. Defaults are the acceptance thresholds.
struct AuditTolerances {
  double theorem1 = 1e-9;
  double theorem2 = 1e-9;
  double duality = 1e-12;   ///< relative to max(|g(X,Y)|, ||X||_M ||Y||_M)
  double hessian = 1e-4;    ///< relative, on top of the Richardson estimate
  double theorem5 = 1e-10;
  double identity = 1e-10;  ///< relative to max(1, |lhs|)
  double kullback = 1e-10;
  double mixture = 1e-10;
  double norm_chain = 1e-10;
  double series_floor = 1e-13;  ///< rounding floor, times ||rho|| e^M

  /// Every tolerance set to `tol`.
  static AuditTolerances uniform(double tol);
  nlohmann::json to_json() const;
  static AuditTolerances from_json(const nlohmann::json& j);
};

struct AuditConfig {
  std::uint64_t seed = 1;
  std::optional<double> tol;  ///< overrides every per-audit tolerance
  std::vector<int> dims = {2, 3, 4, 5, 6, 7, 8};
  std::size_t instances = 500;
  int order = 20;
  std::vector<AuditKind> kinds{std::begin(kAllAuditKinds), std::end(kAllAuditKinds)};

  AuditTolerances tolerances() const;
  /// Throws InvalidArgument unless instances >= 1, dims all >= 2, tol > 0.
  void validate() const;
};

/// Inputs of one audited instance, sufficient to recompute its verdict.
struct AuditCase {
  AuditKind kind = AuditKind::Theorem2Sandwich;
  std::size_t instance = 0;
  std::map<std::string, HermitianOperator> operators;
  std::map<std::string, double> params;

  const HermitianOperator& op(const std::string& name) const;
  double param(const std::string& name) const;
};

/// One checked inequality or identity: holds iff lhs <= rhs.
struct AuditRecord {
  AuditKind kind = AuditKind::Theorem2Sandwich;
  std::size_t instance = 0;
  Index dim = 0;
  std::string detail;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// Draws instance `instance` of `kind`; depends only on (seed, kind, instance).
AuditCase make_case(AuditKind kind, std::size_t instance, const AuditConfig& config);

/// Runs the checks of one case. Exceptions become failing records.
std::vector<AuditRecord> run_case(const AuditCase& c, const AuditTolerances& tol, int order);

struct AuditSummary {
  AuditKind kind;
  std::size_t passed = 0;
  std::size_t total = 0;
  double worst_ratio = 0.0;  ///< max lhs / rhs over records with rhs > 0
};

struct AuditReport {
  AuditConfig config;
  std::vector<AuditRecord> records;
  std::vector<AuditCase> failures;

  std::vector<AuditSummary> summary() const;
  bool all_pass() const;
};

enum class ReportFormat { Table, Csv, JsonLines };

std::optional<ReportFormat> parse_report_format(std::string_view name);

/// Runs every configured audit; instances fan out over OpenMP.
AuditReport run_audit(const AuditConfig& config);
/// Same, single-threaded; produces an identical report.
AuditReport run_audit_serial(const AuditConfig& config);

void write_report(std::ostream& out, const AuditReport& report, ReportFormat format);

/// Replay document: the case inputs in the matrix interchange format plus
/// the tolerances and series order in force.
nlohmann::json case_to_json(const AuditCase& c, const AuditTolerances& tol, int order);

struct ReplayCase {
  AuditCase c;
  AuditTolerances tol;
  int order = 20;
};

ReplayCase case_from_json(const nlohmann::json& j);

}  // namespace qig
