#include "kcsc/report/report.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "kcsc/balancing/balancing.hpp"
#include "kcsc/moment/barycenter.hpp"
#include "kcsc/spectral/windows.hpp"
#include "kcsc/toric/classify.hpp"

namespace kcsc::report {

namespace {

std::vector<Rational> to_vector(const RatVector& v) { return {v.data(), v.data() + v.size()}; }

std::vector<Integer> to_vector(const IntVector& v) { return {v.data(), v.data() + v.size()}; }

ConeEntry cone_entry(const toric::SingularityReport& r, const RatVector& vertex) {
  ConeEntry c;
  c.label = r.label;
  c.order = r.order;
  c.smooth = r.is_smooth;
  c.isolated = r.is_isolated;
  c.su = r.is_su;
  if (r.gorenstein_functional) c.gorenstein_functional = to_vector(*r.gorenstein_functional);
  c.divisors = r.group.divisors;
  for (const auto& w : r.group.generator_weights) c.weights.push_back(to_vector(w));
  c.vertex = to_vector(vertex);
  return c;
}

Rational default_delta(int m) {
  const auto w = spectral::weight_window(m, spectral::WindowContext::gluing);
  return (w.lo + w.hi) / 2;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::full_desingularization: return "FULL_DESINGULARIZATION";
    case Verdict::partial: return "PARTIAL";
    case Verdict::not_balanced: return "NOT_BALANCED";
    case Verdict::not_applicable: return "NOT_APPLICABLE";
  }
  return "NOT_APPLICABLE";
}

Verdict parse_verdict(const std::string& name) {
  for (auto v : {Verdict::full_desingularization, Verdict::partial, Verdict::not_balanced, Verdict::not_applicable})
    if (to_string(v) == name) return v;
  throw InputError("unknown verdict \"" + name + "\"");
}

TuningSummary summarize(const tuning::TuningReport& r, const std::string& point) {
  TuningSummary t;
  t.point = point;
  t.m = r.inputs.m;
  t.s = r.inputs.s;
  t.order = r.inputs.order;
  t.b = r.inputs.b;
  t.c = r.inputs.c_value();
  t.c_gamma = r.inputs.c_gamma;
  t.epsilon = r.inputs.epsilon;
  t.delta = r.inputs.delta;
  t.B_radicand = r.B.radicand;
  t.B_value = r.B.value;
  t.C = r.C;
  t.w4_coeff = r.w4.coeff;
  t.w4_log_branch = r.w4.log_branch;
  t.w4_exponent = r.w4.exponent;
  t.tuning_ok = r.tuning_ok;
  t.b_tilde_2m_leading = r.b_tilde_2m_leading;
  t.b_tilde_error_exponent = r.b_tilde_error_exponent;
  t.r_eps = r.schedule.r_eps;
  t.R_eps = r.schedule.R_eps;
  t.schedule_identity = r.schedule.identity_holds;
  if (r.budget) {
    BudgetSummary b;
    b.principal = r.budget->principal;
    for (const auto& band : r.budget->bands) b.bands.push_back({band.name, band.exponent, band.counted, band.note});
    b.verdict = r.budget->verdict;
    t.budget = b;
  }
  if (r.ale_volume_exact) t.ale_volume = r.ale_volume;
  t.leading_expansion_value = r.leading.expansion_value;
  t.leading_ratio = r.leading.ratio;
  t.leading_coincide = r.leading.coincide;
  return t;
}

FeasibilityReport run_report(const toric::Fan& fan, const ReportOptions& options) {
  FeasibilityReport report;
  report.name = fan.name;
  report.dim = fan.dim;
  report.s = options.s ? *options.s : fan.scalar_curvature.value_or(Rational(1));
  if (report.s <= 0) throw InputError("scalar curvature must be positive");

  const auto singularities = toric::classify_fan(fan, std::max(1u, options.threads));
  const int k = options.k ? *options.k : fan.polytope_multiple.value_or(moment::default_multiple(fan));
  if (k < 1) throw InputError("polytope multiple must be positive");
  const moment::Polytope polytope = moment::anticanonical_polytope(fan, k);
  const moment::Centroid centroid = moment::centroid(polytope);

  report.polytope.k = k;
  report.polytope.vertex_count = polytope.vertices.size();
  report.polytope.barycenter = to_vector(centroid.barycenter);
  report.polytope.volume = centroid.volume;
  report.polytope.barycenter_at_origin = is_zero(centroid.barycenter);
  for (const auto& r : singularities) report.cones.push_back(cone_entry(r, polytope.vertex_of(r.label)));

  std::vector<std::string> su_labels;
  bool any_singular = false, all_isolated = true, all_su = true;
  for (const auto& r : singularities) {
    if (r.is_smooth) continue;
    any_singular = true;
    all_isolated = all_isolated && r.is_isolated;
    all_su = all_su && r.is_su;
    if (r.is_su) su_labels.push_back(r.label);
  }

  if (!any_singular) {
    report.notes.push_back("no singular points");
    return report;
  }
  if (!all_isolated) report.notes.push_back("some singular cone is not an isolated quotient singularity");
  if (su_labels.empty()) report.notes.push_back("no SU singular points");
  if (!report.polytope.barycenter_at_origin)
    report.notes.push_back("barycenter of the polytope is not the origin, so the base is not Kaehler-Einstein");

  if (!su_labels.empty()) {
    const auto table = moment::potentials_at_points(polytope, su_labels, centroid.barycenter);
    const auto problem = balancing::BalancingProblem::toric_einstein(fan.dim, report.s, table.values, table.points);
    const auto witness = balancing::solve_balancing(problem);
    BalancingSummary b;
    b.points = su_labels;
    b.d = static_cast<long>(problem.d());
    b.rank = static_cast<long>(balancing::check_nondegeneracy(problem.phi).rank);
    b.balanced = witness.has_value();
    if (witness) {
      b.rank = static_cast<long>(witness->rank);
      b.b = to_vector(witness->b);
      b.c = to_vector(witness->c);
    }
    report.balancing = b;

    if (witness && options.epsilon && options.c_gamma) {
      for (std::size_t j = 0; j < su_labels.size(); ++j) {
        tuning::TuningInputs t;
        t.m = fan.dim;
        t.s = report.s;
        t.order = std::find_if(singularities.begin(), singularities.end(), [&](const auto& r) {
                    return r.label == su_labels[j];
                  })->order;
        t.b = witness->b(static_cast<Index>(j));
        t.c = witness->c(static_cast<Index>(j));
        t.c_gamma = *options.c_gamma;
        t.epsilon = *options.epsilon;
        t.delta = options.delta ? *options.delta : default_delta(fan.dim);
        report.tuning.push_back(summarize(tuning::run_tuning(t), su_labels[j]));
      }
    }
  }

  if (!all_isolated || su_labels.empty() || !report.polytope.barycenter_at_origin)
    report.verdict = Verdict::not_applicable;
  else if (!report.balancing->balanced)
    report.verdict = Verdict::not_balanced;
  else
    report.verdict = all_su ? Verdict::full_desingularization : Verdict::partial;
  if (report.verdict == Verdict::partial)
    report.notes.push_back(std::to_string(su_labels.size()) + " SU points balanced, " +
                           std::to_string(std::count_if(singularities.begin(), singularities.end(),
                                                        [](const auto& r) { return !r.is_smooth && !r.is_su; })) +
                           " non-SU singular points remain");
  return report;
}

FeasibilityReport run_report(const std::filesystem::path& path, const ReportOptions& options) {
  return run_report(toric::load_fan(path), options);
}

std::vector<BatchEntry> batch(const std::filesystem::path& dir, const ReportOptions& options) {
  if (!std::filesystem::is_directory(dir)) throw InputError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) { return a.filename() < b.filename(); });

  std::vector<BatchEntry> out(files.size());
  ReportOptions single = options;
  single.threads = 1;
  auto work = [&](std::size_t i) {
    BatchEntry& e = out[i];
    e.file = files[i].filename().string();
    try {
      e.report = run_report(files[i], single);
    } catch (const InconsistencyError& ex) {
      e.error = ex.what();
      e.error_code = 2;
    } catch (const std::exception& ex) {
      e.error = ex.what();
      e.error_code = 1;
    }
  };
  const std::size_t workers = std::min<std::size_t>(std::max(1u, options.threads), std::max<std::size_t>(files.size(), 1));
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w)
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < files.size(); i += workers) work(i);
    }));
  for (auto& t : tasks) t.get();
  return out;
}

}  // namespace kcsc::report
