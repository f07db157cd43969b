#include "kcsc/report/json_io.hpp"

namespace kcsc::report {

namespace {

Json integer_json(const Integer& z) { return kcsc::to_string(z); }

Integer integer_from(const Json& j) {
  if (!j.is_string()) throw InputError("expected an exact integer string, got " + j.dump());
  try {
    return Integer(j.get<std::string>());
  } catch (const std::exception&) {
    throw InputError("malformed integer " + j.dump());
  }
}

template <typename T, typename F>
Json list_json(const std::vector<T>& xs, F f) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(f(x));
  return out;
}

template <typename T, typename F>
std::vector<T> list_from(const Json& j, F f) {
  if (!j.is_array()) throw InputError("expected an array, got " + j.dump());
  std::vector<T> out;
  for (const auto& x : j) out.push_back(f(x));
  return out;
}

Json rationals_json(const std::vector<Rational>& xs) { return list_json(xs, rational_json); }
std::vector<Rational> rationals_from(const Json& j) { return list_from<Rational>(j, rational_from); }

template <typename T, typename F>
Json optional_json(const std::optional<T>& x, F f) {
  return x ? f(*x) : Json(nullptr);
}

template <typename T, typename F>
std::optional<T> optional_from(const Json& j, const char* key, F f) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return f(j.at(key));
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Json cone_json(const ConeEntry& c) {
  return {{"label", c.label},
          {"order", integer_json(c.order)},
          {"smooth", c.smooth},
          {"isolated", c.isolated},
          {"su", c.su},
          {"gorenstein_functional",
           optional_json(c.gorenstein_functional, [](const auto& v) { return list_json(v, integer_json); })},
          {"divisors", list_json(c.divisors, integer_json)},
          {"weights", list_json(c.weights, rationals_json)},
          {"vertex", rationals_json(c.vertex)}};
}

ConeEntry cone_from(const Json& j) {
  ConeEntry c;
  c.label = field(j, "label").get<std::string>();
  c.order = integer_from(field(j, "order"));
  c.smooth = field(j, "smooth").get<bool>();
  c.isolated = field(j, "isolated").get<bool>();
  c.su = field(j, "su").get<bool>();
  c.gorenstein_functional = optional_from<std::vector<Integer>>(
      j, "gorenstein_functional", [](const Json& v) { return list_from<Integer>(v, integer_from); });
  c.divisors = list_from<Integer>(field(j, "divisors"), integer_from);
  c.weights = list_from<std::vector<Rational>>(field(j, "weights"), rationals_from);
  c.vertex = rationals_from(field(j, "vertex"));
  return c;
}

Json budget_json(const BudgetSummary& b) {
  Json bands = Json::array();
  for (const auto& band : b.bands)
    bands.push_back({{"name", band.name},
                     {"exponent", rational_json(band.exponent)},
                     {"counted", band.counted},
                     {"note", band.note}});
  return {{"principal", rational_json(b.principal)}, {"bands", bands}, {"verdict", b.verdict}};
}

BudgetSummary budget_from(const Json& j) {
  BudgetSummary b;
  b.principal = rational_from(field(j, "principal"));
  for (const auto& band : field(j, "bands"))
    b.bands.push_back({field(band, "name").get<std::string>(), rational_from(field(band, "exponent")),
                       field(band, "counted").get<bool>(), field(band, "note").get<std::string>()});
  b.verdict = field(j, "verdict").get<bool>();
  return b;
}

}  // namespace

Json rational_json(const Rational& q) { return kcsc::to_string(q); }

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw InputError("expected an exact rational string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

Json pi_json(const tuning::PiMultiple& x) {
  return {{"coeff", rational_json(x.coeff)}, {"pi_pow", x.pi_pow}, {"approx", x.to_double()}};
}

tuning::PiMultiple pi_from(const Json& j) {
  return {rational_from(field(j, "coeff")), field(j, "pi_pow").get<int>()};
}

Json pi_sum_json(const tuning::PiSum& x) {
  Json terms = Json::array();
  for (const auto& [p, c] : x.terms) terms.push_back({{"coeff", rational_json(c)}, {"pi_pow", p}});
  return {{"terms", terms}, {"approx", x.to_double()}};
}

tuning::PiSum pi_sum_from(const Json& j) {
  tuning::PiSum out;
  for (const auto& t : field(j, "terms")) out.add(pi_from(t));
  return out;
}

Json power_json(const tuning::RationalPower& x) {
  const auto exact = x.exact();
  return {{"base", rational_json(x.base)},
          {"exponent", rational_json(x.exponent)},
          {"exact", exact ? rational_json(*exact) : Json(nullptr)},
          {"approx", x.to_double()}};
}

tuning::RationalPower power_from(const Json& j) {
  return {rational_from(field(j, "base")), rational_from(field(j, "exponent"))};
}

Json vector_json(const RatVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(rational_json(v(i)));
  return out;
}

RatVector rat_vector_from(const Json& j) {
  const auto xs = rationals_from(j);
  RatVector v(static_cast<Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Index>(i)) = xs[i];
  return v;
}

Json to_json(const TuningSummary& t) {
  return {{"point", t.point},
          {"m", t.m},
          {"s", rational_json(t.s)},
          {"order", integer_json(t.order)},
          {"b", rational_json(t.b)},
          {"c", rational_json(t.c)},
          {"c_gamma", rational_json(t.c_gamma)},
          {"epsilon", rational_json(t.epsilon)},
          {"delta", rational_json(t.delta)},
          {"B_2m", pi_json(t.B_radicand)},
          {"B", t.B_value},
          {"C", optional_json(t.C, pi_json)},
          {"W4", {{"coeff", rational_json(t.w4_coeff)}, {"log_branch", t.w4_log_branch}, {"exponent", t.w4_exponent}}},
          {"tuning_ok", t.tuning_ok},
          {"b_tilde_2m_leading", optional_json(t.b_tilde_2m_leading, pi_sum_json)},
          {"b_tilde_error_exponent", optional_json(t.b_tilde_error_exponent, rational_json)},
          {"r_eps", power_json(t.r_eps)},
          {"R_eps", power_json(t.R_eps)},
          {"schedule_identity", t.schedule_identity},
          {"budget", optional_json(t.budget, budget_json)},
          {"ale_volume", optional_json(t.ale_volume, pi_json)},
          {"leading_b",
           {{"expansion_value", rational_json(t.leading_expansion_value)},
            {"ratio", pi_json(t.leading_ratio)},
            {"coincide", t.leading_coincide}}}};
}

TuningSummary tuning_from_json(const Json& j) {
  TuningSummary t;
  t.point = field(j, "point").get<std::string>();
  t.m = field(j, "m").get<int>();
  t.s = rational_from(field(j, "s"));
  t.order = integer_from(field(j, "order"));
  t.b = rational_from(field(j, "b"));
  t.c = rational_from(field(j, "c"));
  t.c_gamma = rational_from(field(j, "c_gamma"));
  t.epsilon = rational_from(field(j, "epsilon"));
  t.delta = rational_from(field(j, "delta"));
  t.B_radicand = pi_from(field(j, "B_2m"));
  t.B_value = field(j, "B").get<double>();
  t.C = optional_from<tuning::PiMultiple>(j, "C", pi_from);
  const Json& w4 = field(j, "W4");
  t.w4_coeff = rational_from(field(w4, "coeff"));
  t.w4_log_branch = field(w4, "log_branch").get<bool>();
  t.w4_exponent = field(w4, "exponent").get<long>();
  t.tuning_ok = field(j, "tuning_ok").get<bool>();
  t.b_tilde_2m_leading = optional_from<tuning::PiSum>(j, "b_tilde_2m_leading", pi_sum_from);
  t.b_tilde_error_exponent = optional_from<Rational>(j, "b_tilde_error_exponent", rational_from);
  t.r_eps = power_from(field(j, "r_eps"));
  t.R_eps = power_from(field(j, "R_eps"));
  t.schedule_identity = field(j, "schedule_identity").get<bool>();
  t.budget = optional_from<BudgetSummary>(j, "budget", budget_from);
  t.ale_volume = optional_from<tuning::PiMultiple>(j, "ale_volume", pi_from);
  const Json& lead = field(j, "leading_b");
  t.leading_expansion_value = rational_from(field(lead, "expansion_value"));
  t.leading_ratio = pi_from(field(lead, "ratio"));
  t.leading_coincide = field(lead, "coincide").get<bool>();
  return t;
}

Json to_json(const FeasibilityReport& r) {
  Json cones = Json::array();
  for (const auto& c : r.cones) cones.push_back(cone_json(c));
  Json balancing = nullptr;
  if (r.balancing) {
    const auto& b = *r.balancing;
    balancing = {{"points", b.points},
                 {"d", b.d},
                 {"rank", b.rank},
                 {"balanced", b.balanced},
                 {"b", optional_json(b.b, rationals_json)},
                 {"c", optional_json(b.c, rationals_json)}};
  }
  Json tuning = Json::array();
  for (const auto& t : r.tuning) tuning.push_back(to_json(t));
  return {{"name", r.name},
          {"dim", r.dim},
          {"s", rational_json(r.s)},
          {"cones", cones},
          {"polytope",
           {{"k", r.polytope.k},
            {"vertex_count", r.polytope.vertex_count},
            {"barycenter", rationals_json(r.polytope.barycenter)},
            {"volume", rational_json(r.polytope.volume)},
            {"barycenter_at_origin", r.polytope.barycenter_at_origin}}},
          {"balancing", balancing},
          {"tuning", tuning},
          {"verdict", to_string(r.verdict)},
          {"notes", r.notes}};
}

FeasibilityReport report_from_json(const Json& j) {
  FeasibilityReport r;
  r.name = field(j, "name").get<std::string>();
  r.dim = field(j, "dim").get<int>();
  r.s = rational_from(field(j, "s"));
  r.cones = list_from<ConeEntry>(field(j, "cones"), cone_from);
  const Json& p = field(j, "polytope");
  r.polytope.k = field(p, "k").get<int>();
  r.polytope.vertex_count = field(p, "vertex_count").get<std::size_t>();
  r.polytope.barycenter = rationals_from(field(p, "barycenter"));
  r.polytope.volume = rational_from(field(p, "volume"));
  r.polytope.barycenter_at_origin = field(p, "barycenter_at_origin").get<bool>();
  if (j.contains("balancing") && !j.at("balancing").is_null()) {
    const Json& b = j.at("balancing");
    BalancingSummary s;
    s.points = field(b, "points").get<std::vector<std::string>>();
    s.d = field(b, "d").get<long>();
    s.rank = field(b, "rank").get<long>();
    s.balanced = field(b, "balanced").get<bool>();
    s.b = optional_from<std::vector<Rational>>(b, "b", rationals_from);
    s.c = optional_from<std::vector<Rational>>(b, "c", rationals_from);
    r.balancing = s;
  }
  r.tuning = list_from<TuningSummary>(field(j, "tuning"), tuning_from_json);
  r.verdict = parse_verdict(field(j, "verdict").get<std::string>());
  r.notes = field(j, "notes").get<std::vector<std::string>>();
  return r;
}

Json to_json(const BatchEntry& e) {
  return {{"file", e.file},
          {"report", e.report ? to_json(*e.report) : Json(nullptr)},
          {"error", e.error.empty() ? Json(nullptr) : Json(e.error)},
          {"error_code", e.error_code}};
}

Json classification_json(const std::vector<toric::SingularityReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) {
    Json functional = nullptr;
    if (r.gorenstein_functional) {
      functional = Json::array();
      for (Index i = 0; i < r.gorenstein_functional->size(); ++i)
        functional.push_back(integer_json((*r.gorenstein_functional)(i)));
    }
    Json weights = Json::array();
    for (const auto& w : r.group.generator_weights) weights.push_back(vector_json(w));
    out.push_back({{"label", r.label},
                   {"order", integer_json(r.order)},
                   {"smooth", r.is_smooth},
                   {"isolated", r.is_isolated},
                   {"su", r.is_su},
                   {"gorenstein_functional", functional},
                   {"divisors", list_json(r.group.divisors, integer_json)},
                   {"weights", weights}});
  }
  return out;
}

Json polytope_json(const moment::Polytope& p, const moment::Centroid& c) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices) vertices.push_back(vector_json(v));
  Json correspondence = Json::array();
  for (const auto& label : p.cone_labels)
    correspondence.push_back({{"cone", label}, {"vertex", vector_json(p.vertex_of(label))}});
  return {{"dim", p.dim},
          {"k", p.k},
          {"vertices", vertices},
          {"cone_vertex", correspondence},
          {"barycenter", vector_json(c.barycenter)},
          {"volume", rational_json(c.volume)}};
}

Json potential_table_json(const moment::PotentialTable& t) {
  Json values = Json::array();
  for (Index i = 0; i < t.values.rows(); ++i) values.push_back(vector_json(RatVector(t.values.row(i).transpose())));
  return {{"points", t.points},
          {"values", values},
          {"barycenter", vector_json(t.barycenter)},
          {"normalization", t.normalization}};
}

moment::PotentialTable potential_table_from(const Json& j) {
  moment::PotentialTable t;
  t.points = field(j, "points").get<std::vector<std::string>>();
  const auto rows = list_from<RatVector>(field(j, "values"), rat_vector_from);
  const Index n = static_cast<Index>(t.points.size());
  t.values.resize(static_cast<Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw InputError("every row of \"values\" needs one entry per point");
    t.values.row(static_cast<Index>(i)) = rows[i].transpose();
  }
  if (j.contains("barycenter")) t.barycenter = rat_vector_from(j.at("barycenter"));
  if (j.contains("normalization")) t.normalization = j.at("normalization").get<std::string>();
  return t;
}

Json witness_json(const balancing::BalancingWitness& w) {
  return {{"b", vector_json(w.b)},
          {"c", vector_json(w.c)},
          {"rank", w.rank},
          {"nu", w.nu ? rational_json(*w.nu) : Json(nullptr)}};
}

}  // namespace kcsc::report
