// Command-line front end: every pipeline stage is a subcommand.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "kcsc/balancing/balancing.hpp"
#include "kcsc/moment/barycenter.hpp"
#include "kcsc/report/json_io.hpp"
#include "kcsc/report/report.hpp"
#include "kcsc/report/text.hpp"
#include "kcsc/spectral/dtn.hpp"
#include "kcsc/spectral/eigen_data.hpp"
#include "kcsc/spectral/windows.hpp"
#include "kcsc/toric/classify.hpp"
#include "kcsc/toric/fan.hpp"
#include "kcsc/tuning/tuning.hpp"

using namespace kcsc;
using report::Json;

namespace {

// Accepts "p/q", integers, decimals ("0.25") and scientific notation ("1e-7"), all exactly.
Rational parse_number(const std::string& text) {
  const auto e = text.find_first_of("eE");
  const std::string mantissa = text.substr(0, e);
  Rational value;
  const auto dot = mantissa.find('.');
  if (dot == std::string::npos) {
    value = parse_rational(mantissa);
  } else {
    const std::string digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    value = parse_rational(digits.empty() || digits == "-" ? "0" : digits) /
            tuning::pow(Rational(10), static_cast<long>(mantissa.size() - dot - 1));
  }
  if (e != std::string::npos) {
    long exponent = 0;
    try {
      exponent = std::stol(text.substr(e + 1));
    } catch (const std::exception&) {
      throw InputError("malformed number \"" + text + "\"");
    }
    value *= tuning::pow(Rational(10), exponent);
  }
  return value;
}

std::optional<Rational> optional_number(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_number(text);
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<Rational> to_vector(const RatVector& v) { return {v.data(), v.data() + v.size()}; }

struct Common {
  bool json = false;
  bool text = false;
  unsigned threads = 1;
  int k = 0;
  std::string s, epsilon, delta, c_gamma;

  report::ReportOptions options() const {
    report::ReportOptions o;
    if (k > 0) o.k = k;
    o.s = optional_number(s);
    o.epsilon = optional_number(epsilon);
    o.delta = optional_number(delta);
    o.c_gamma = optional_number(c_gamma);
    o.threads = threads;
    return o;
  }
};

void print(const Common& c, const Json& j, const std::string& text) {
  if (c.json && !c.text)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

int cmd_classify(const Common& c, const std::string& path) {
  const auto fan = toric::load_fan(path);
  const auto reports = toric::classify_fan(fan, c.threads);
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    std::string weights;
    for (const auto& w : r.group.generator_weights) weights += report::format_vector(to_vector(w));
    rows.push_back({r.label, kcsc::to_string(r.order), r.is_smooth ? "-" : (r.is_isolated ? "yes" : "no"),
                    r.is_smooth ? "-" : (r.is_su ? "SU" : "U"), weights.empty() ? "-" : weights});
  }
  print(c, report::classification_json(reports),
        report::format_table({"cone", "|G|", "isolated", "group", "weights"}, rows));
  return 0;
}

int cmd_polytope(const Common& c, const std::string& path) {
  const auto fan = toric::load_fan(path);
  const auto p = c.k > 0 ? moment::anticanonical_polytope(fan, c.k) : moment::anticanonical_polytope(fan);
  const auto centroid = moment::centroid(p);
  std::vector<std::vector<std::string>> rows;
  for (const auto& label : p.cone_labels) rows.push_back({label, report::format_vector(to_vector(p.vertex_of(label)))});
  std::ostringstream text;
  text << "P_" << p.k << "K of " << fan.name << ": " << p.vertices.size() << " vertices\n\n"
       << report::format_table({"cone", "vertex"}, rows) << "\nbarycenter "
       << report::format_vector(to_vector(centroid.barycenter)) << ", volume " << kcsc::to_string(centroid.volume)
       << '\n';
  print(c, report::polytope_json(p, centroid), text.str());
  return 0;
}

int cmd_balance(const Common& c, const std::string& path, int m_flag) {
  const Json input = read_json(path);
  const Rational s = c.s.empty() ? Rational(1) : parse_number(c.s);
  balancing::BalancingProblem problem;
  if (input.contains("rays")) {
    const auto fan = toric::parse_fan(input.dump());
    std::vector<std::string> labels;
    for (const auto& r : toric::classify_fan(fan, c.threads))
      if (r.is_su) labels.push_back(r.label);
    if (labels.empty()) throw InputError("the fan has no SU singular points to balance");
    const auto p = c.k > 0 ? moment::anticanonical_polytope(fan, c.k) : moment::anticanonical_polytope(fan);
    const auto table = moment::potentials_at_points(p, labels);
    const Rational fan_s = c.s.empty() ? fan.scalar_curvature.value_or(Rational(1)) : s;
    problem = balancing::BalancingProblem::toric_einstein(fan.dim, fan_s, table.values, table.points);
  } else {
    const auto table = report::potential_table_from(input);
    const int m = input.contains("m") ? input.at("m").get<int>()
                                      : (m_flag > 0 ? m_flag : static_cast<int>(table.values.rows()));
    problem = balancing::BalancingProblem::toric_einstein(m, s, table.values, table.points);
    if (input.contains("lap_phi")) {
      const auto lap = report::potential_table_from({{"points", table.points}, {"values", input.at("lap_phi")}});
      problem.lap_phi = lap.values;
    }
    if (input.contains("volume")) problem.volume = report::rational_from(input.at("volume"));
    problem.validate();
  }
  const auto witness = balancing::solve_balancing(problem);
  const auto nd = balancing::check_nondegeneracy(problem.phi);
  Json j = witness ? report::witness_json(*witness) : Json{{"b", nullptr}, {"c", nullptr}, {"rank", nd.rank}, {"nu", nullptr}};
  j["points"] = problem.points;
  j["balanced"] = witness.has_value();
  std::ostringstream text;
  if (witness) {
    std::vector<std::vector<std::string>> rows;
    for (Index i = 0; i < problem.n_points(); ++i)
      rows.push_back({problem.points.empty() ? std::to_string(i + 1) : problem.points[static_cast<std::size_t>(i)],
                      kcsc::to_string(witness->b(i)), kcsc::to_string(witness->c(i))});
    text << "balanced, rank " << witness->rank << " of " << problem.d() << "\n\n"
         << report::format_table({"point", "b", "c"}, rows);
    if (witness->nu) text << "nu = " << kcsc::to_string(*witness->nu) << '\n';
  } else {
    text << "not balanced: no strictly positive full-rank witness (rank of phi " << nd.rank << " of " << nd.d << ")\n";
  }
  print(c, j, text.str());
  return 0;
}

int cmd_tune(const Common& c, int m, const std::string& order, const std::string& b, const std::string& explicit_c) {
  tuning::TuningInputs t;
  t.m = m;
  t.s = c.s.empty() ? Rational(1) : parse_number(c.s);
  t.order = Integer(order);
  t.b = parse_number(b);
  if (c.c_gamma.empty()) throw InputError("--c-gamma is required: the ALE constant depends on the chosen ALE metric");
  if (c.epsilon.empty()) throw InputError("--epsilon is required");
  t.c_gamma = parse_number(c.c_gamma);
  t.epsilon = parse_number(c.epsilon);
  if (c.delta.empty()) {
    const auto w = spectral::weight_window(m, spectral::WindowContext::gluing);
    t.delta = (w.lo + w.hi) / 2;
  } else {
    t.delta = parse_number(c.delta);
  }
  t.c = optional_number(explicit_c);
  const auto summary = report::summarize(tuning::run_tuning(t), "");
  std::ostringstream text;
  text << "B^" << 2 * m << " = " << summary.B_radicand.to_string() << "  (B = " << summary.B_value << ")\n"
       << "C = " << (summary.C ? summary.C->to_string() : "- (m = 2)") << '\n'
       << "W4 radial coefficient = " << kcsc::to_string(summary.w4_coeff)
       << (summary.w4_log_branch ? " on log|x|" : " on |x|^" + std::to_string(summary.w4_exponent)) << '\n'
       << "c = s b: " << (summary.tuning_ok ? "yes" : "no") << '\n'
       << "r_eps = " << summary.r_eps.to_string() << ", R_eps = " << summary.R_eps.to_string() << '\n';
  if (summary.b_tilde_error_exponent)
    text << "b~^" << 2 * m << " - B^" << 2 * m << " = O(eps^" << kcsc::to_string(*summary.b_tilde_error_exponent) << ")\n";
  if (summary.budget) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"principal", kcsc::to_string(summary.budget->principal), "reference"});
    for (const auto& band : summary.budget->bands)
      rows.push_back({band.name, kcsc::to_string(band.exponent), band.counted ? "counted" : "reported"});
    text << "\neps-exponents at delta = " << kcsc::to_string(t.delta) << "\n"
         << report::format_table({"band", "exponent", "role"}, rows)
         << "budget verdict: " << (summary.budget->verdict ? "every counted band beats the principal band" : "FAILS")
         << '\n';
  }
  if (summary.ale_volume) text << "ALE volume of |x| < R_eps: " << summary.ale_volume->to_string() << '\n';
  text << "leading b: expansion " << kcsc::to_string(summary.leading_expansion_value) << ", B^" << 2 * m << ' '
       << summary.B_radicand.to_string() << ", ratio " << summary.leading_ratio.to_string() << '\n';
  print(c, report::to_json(summary), text.str());
  return 0;
}

int cmd_report(const Common& c, const std::string& path) {
  const auto r = report::run_report(std::filesystem::path(path), c.options());
  print(c, report::to_json(r), report::format_report(r));
  return 0;
}

int cmd_batch(const Common& c, const std::string& dir) {
  const auto entries = report::batch(dir, c.options());
  Json j = Json::array();
  int code = 0;
  for (const auto& e : entries) {
    j.push_back(report::to_json(e));
    code = std::max(code, e.error_code);
  }
  print(c, j, report::format_batch(entries));
  return code;
}

int cmd_dtn(int m, long max_gamma) {
  if (m < 2) throw InputError("the DtN table needs m >= 2");
  spectral::write_dtn_table(std::cout, m, max_gamma);
  return 0;
}

int cmd_harmonics(const Common& c, int m, const std::string& weights, long max_gamma) {
  RatVector w = RatVector::Zero(m);
  if (!weights.empty()) {
    std::vector<Rational> parsed;
    std::stringstream in(weights);
    for (std::string item; std::getline(in, item, ',');) parsed.push_back(parse_number(item));
    if (static_cast<int>(parsed.size()) != m) throw InputError("--weights needs exactly m entries");
    for (int i = 0; i < m; ++i) w(i) = parsed[static_cast<std::size_t>(i)];
  }
  const auto g = toric::QuotientGroup::cyclic(w);
  Json rows = Json::array();
  std::vector<std::vector<std::string>> table;
  for (long gamma = 0; gamma <= max_gamma; ++gamma) {
    const auto lambda = spectral::eigenvalue(m, gamma);
    const auto dim = spectral::harmonic_dimension(m, gamma);
    const auto inv = spectral::invariant_harmonic_dimension(g, gamma);
    rows.push_back({{"gamma", gamma},
                    {"eigenvalue", kcsc::to_string(lambda)},
                    {"dimension", kcsc::to_string(dim)},
                    {"invariant_dimension", kcsc::to_string(inv)}});
    table.push_back({std::to_string(gamma), kcsc::to_string(lambda), kcsc::to_string(dim), kcsc::to_string(inv)});
  }
  Json j = {{"m", m}, {"order", kcsc::to_string(g.order)}, {"modes", rows}, {"first_invariant_mode", nullptr}};
  std::ostringstream text;
  text << "group of order " << kcsc::to_string(g.order) << " on C^" << m << "\n\n"
       << report::format_table({"gamma", "eigenvalue", "dim", "invariant dim"}, table);
  if (!g.is_trivial() && toric::acts_freely_off_origin(g)) {
    const long first = spectral::first_invariant_mode(g);
    j["first_invariant_mode"] = first;
    text << "first invariant mode: " << first << '\n';
  }
  print(c, j, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feasibility checks and gluing coefficients for Kcsc resolutions of toric orbifolds"};
  app.require_subcommand(1);
  Common common;
  auto add_format = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json, "Emit JSON");
    sub->add_flag("--text", common.text, "Emit aligned text tables (default)");
  };
  auto add_pipeline = [&](CLI::App* sub) {
    sub->add_option("--k", common.k, "Polytope multiple k in P_{-kK}");
    sub->add_option("--scalar-curvature", common.s, "Scalar curvature s of the base (default 1)");
    sub->add_option("--epsilon", common.epsilon, "Gluing parameter epsilon in (0, 1)");
    sub->add_option("--delta", common.delta, "Weight delta (default: midpoint of the gluing window)");
    sub->add_option("--c-gamma", common.c_gamma, "ALE constant c(Gamma) > 0 (no default)");
    sub->add_option("--threads", common.threads, "Worker threads")->check(CLI::PositiveNumber);
  };

  std::string path;
  auto* classify = app.add_subcommand("classify", "Classify the singular cones of a fan");
  classify->add_option("fan", path, "Fan file")->required();
  classify->add_option("--threads", common.threads, "Worker threads")->check(CLI::PositiveNumber);
  add_format(classify);

  auto* polytope = app.add_subcommand("polytope", "Anticanonical polytope, cone-vertex map and barycenter");
  polytope->add_option("fan", path, "Fan file")->required();
  polytope->add_option("--k", common.k, "Polytope multiple k");
  add_format(polytope);

  int m_flag = 0;
  auto* balance = app.add_subcommand("balance", "Positive balancing witness for a fan or a potential table");
  balance->add_option("input", path, "Fan file or potential-table JSON")->required();
  balance->add_option("--k", common.k, "Polytope multiple k (fan input)");
  balance->add_option("--scalar-curvature", common.s, "Scalar curvature s (default 1)");
  balance->add_option("--m", m_flag, "Complex dimension for potential tables without an \"m\" field");
  balance->add_option("--threads", common.threads, "Worker threads")->check(CLI::PositiveNumber);
  add_format(balance);

  int tune_m = 3;
  std::string order = "1", b = "1", explicit_c;
  auto* tune = app.add_subcommand("tune", "Tuning coefficients, epsilon schedule and gluing budget");
  tune->add_option("--m", tune_m, "Complex dimension")->check(CLI::Range(2, 1000));
  tune->add_option("--order", order, "Group order |Gamma|");
  tune->add_option("--b", b, "Weight b of the point");
  tune->add_option("--c", explicit_c, "Weight c (default s b)");
  tune->add_option("--scalar-curvature", common.s, "Scalar curvature s (default 1)");
  tune->add_option("--epsilon", common.epsilon, "Gluing parameter epsilon in (0, 1)");
  tune->add_option("--delta", common.delta, "Weight delta in the gluing window");
  tune->add_option("--c-gamma", common.c_gamma, "ALE constant c(Gamma) > 0 (required)");
  add_format(tune);

  auto* rep = app.add_subcommand("report", "Full feasibility report for one fan");
  rep->add_option("fan", path, "Fan file")->required();
  add_pipeline(rep);
  add_format(rep);

  auto* bat = app.add_subcommand("batch", "Feasibility reports for every fan file in a directory");
  bat->add_option("dir", path, "Directory of fan files")->required();
  add_pipeline(bat);
  add_format(bat);

  int dtn_m = 3;
  long max_gamma = 10;
  auto* dtn = app.add_subcommand("dtn-table", "Dirichlet-to-Neumann matrices per mode as CSV");
  dtn->add_option("--m", dtn_m, "Complex dimension");
  dtn->add_option("--max-gamma", max_gamma, "Largest mode index (negative gives an empty table)");

  int harm_m = 2;
  std::string weights;
  long harm_max = 6;
  auto* harm = app.add_subcommand("harmonics", "Eigenvalues and invariant harmonic dimensions");
  harm->add_option("--m", harm_m, "Complex dimension")->check(CLI::Range(1, 1000));
  harm->add_option("--weights", weights, "Comma-separated weights w_k of a cyclic diagonal action, e.g. 1/3,2/3");
  harm->add_option("--max-gamma", harm_max, "Largest mode index");
  add_format(harm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*classify) return cmd_classify(common, path);
    if (*polytope) return cmd_polytope(common, path);
    if (*balance) return cmd_balance(common, path, m_flag);
    if (*tune) return cmd_tune(common, tune_m, order, b, explicit_c);
    if (*rep) return cmd_report(common, path);
    if (*bat) return cmd_batch(common, path);
    if (*dtn) return cmd_dtn(dtn_m, max_gamma);
    if (*harm) return cmd_harmonics(common, harm_m, weights, harm_max);
  } catch (const InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
