#ifndef KCSC_REPORT_REPORT_HPP
#define KCSC_REPORT_REPORT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kcsc/lattice/types.hpp"
#include "kcsc/toric/fan.hpp"
#include "kcsc/tuning/tuning.hpp"

namespace kcsc::report {

enum class Verdict { full_desingularization, partial, not_balanced, not_applicable };

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& name);

/// Pipeline options. Absent values fall back to the fan file, then to the defaults noted.
struct ReportOptions {
  std::optional<int> k;                // polytope multiple; fan value, else the smallest integral one
  std::optional<Rational> s;           // scalar curvature; fan value, else 1
  std::optional<Rational> epsilon;     // tuning runs only when epsilon and c_gamma are both given
  std::optional<Rational> c_gamma;
  std::optional<Rational> delta;       // defaults to the midpoint of the gluing window
  unsigned threads = 1;
};

// Report records use plain vectors so that equality and JSON round trips are exact.

struct ConeEntry {
  std::string label;
  Integer order;
  bool smooth = false;
  bool isolated = false;
  bool su = false;
  std::optional<std::vector<Integer>> gorenstein_functional;
  std::vector<Integer> divisors;
  std::vector<std::vector<Rational>> weights;
  std::vector<Rational> vertex;

  bool operator==(const ConeEntry&) const = default;
};

struct PolytopeSummary {
  int k = 0;
  std::size_t vertex_count = 0;
  std::vector<Rational> barycenter;
  Rational volume;
  bool barycenter_at_origin = false;

  bool operator==(const PolytopeSummary&) const = default;
};

struct BalancingSummary {
  std::vector<std::string> points;
  long d = 0;
  long rank = 0;
  bool balanced = false;
  std::optional<std::vector<Rational>> b;
  std::optional<std::vector<Rational>> c;

  bool operator==(const BalancingSummary&) const = default;
};

struct BandEntry {
  std::string name;
  Rational exponent;
  bool counted = false;
  std::string note;

  bool operator==(const BandEntry&) const = default;
};

struct BudgetSummary {
  Rational principal;
  std::vector<BandEntry> bands;
  bool verdict = false;

  bool operator==(const BudgetSummary&) const = default;
};

/// Tuning data of one SU point, with b and c taken from the balancing witness.
struct TuningSummary {
  std::string point;
  int m = 0;
  Rational s;
  Integer order;
  Rational b;
  Rational c;
  Rational c_gamma;
  Rational epsilon;
  Rational delta;
  tuning::PiMultiple B_radicand;
  double B_value = 0;
  std::optional<tuning::PiMultiple> C;
  Rational w4_coeff;
  bool w4_log_branch = false;
  long w4_exponent = 0;
  bool tuning_ok = false;
  std::optional<tuning::PiSum> b_tilde_2m_leading;
  std::optional<Rational> b_tilde_error_exponent;
  tuning::RationalPower r_eps;
  tuning::RationalPower R_eps;
  bool schedule_identity = false;
  std::optional<BudgetSummary> budget;
  std::optional<tuning::PiMultiple> ale_volume;
  Rational leading_expansion_value;
  tuning::PiMultiple leading_ratio;
  bool leading_coincide = false;

  bool operator==(const TuningSummary&) const = default;
};

TuningSummary summarize(const tuning::TuningReport& r, const std::string& point);

struct FeasibilityReport {
  std::string name;
  int dim = 0;
  Rational s;
  std::vector<ConeEntry> cones;
  PolytopeSummary polytope;
  std::optional<BalancingSummary> balancing;
  std::vector<TuningSummary> tuning;
  Verdict verdict = Verdict::not_applicable;
  std::vector<std::string> notes;

  bool operator==(const FeasibilityReport&) const = default;
};

/**
 * Classification, polytope, balancing of the SU points and optional tuning.
 * Verdict: NOT_APPLICABLE without singular points, with a non-isolated singular
 * cone, without SU points or with the barycenter off the origin; NOT_BALANCED
 * when the SU points admit no positive full-rank witness; FULL when every
 * singular cone is SU and balanced; PARTIAL otherwise.
 */
FeasibilityReport run_report(const toric::Fan& fan, const ReportOptions& options = {});
FeasibilityReport run_report(const std::filesystem::path& path, const ReportOptions& options = {});

struct BatchEntry {
  std::string file;
  std::optional<FeasibilityReport> report;
  std::string error;   // empty on success
  int error_code = 0;  // 1 input error, 2 inconsistency
};

/// One entry per *.json file in `dir`, sorted by file name; failures are recorded, not thrown.
std::vector<BatchEntry> batch(const std::filesystem::path& dir, const ReportOptions& options = {});

}  // namespace kcsc::report

#endif  // KCSC_REPORT_REPORT_HPP
