#ifndef KCSC_REPORT_JSON_IO_HPP
#define KCSC_REPORT_JSON_IO_HPP

#include <json.hpp>
#include <vector>

#include "kcsc/balancing/balancing.hpp"
#include "kcsc/moment/barycenter.hpp"
#include "kcsc/report/report.hpp"
#include "kcsc/toric/classify.hpp"

namespace kcsc::report {

using Json = nlohmann::ordered_json;

// Exact numbers are strings ("p/q"); pi multiples are {"coeff": "p/q", "pi_pow": k}.
// Float companions are written under "approx" and ignored when reading back.

Json rational_json(const Rational& q);
Rational rational_from(const Json& j);
Json pi_json(const tuning::PiMultiple& x);
tuning::PiMultiple pi_from(const Json& j);
Json pi_sum_json(const tuning::PiSum& x);
tuning::PiSum pi_sum_from(const Json& j);
Json power_json(const tuning::RationalPower& x);
tuning::RationalPower power_from(const Json& j);
Json vector_json(const RatVector& v);
RatVector rat_vector_from(const Json& j);

Json to_json(const FeasibilityReport& r);
FeasibilityReport report_from_json(const Json& j);

Json to_json(const TuningSummary& t);
TuningSummary tuning_from_json(const Json& j);

Json to_json(const BatchEntry& e);

Json classification_json(const std::vector<toric::SingularityReport>& reports);
Json polytope_json(const moment::Polytope& p, const moment::Centroid& c);

/// {"points": [...], "values": [["p/q", ...], ...], "barycenter": [...], "normalization": str}
Json potential_table_json(const moment::PotentialTable& t);
moment::PotentialTable potential_table_from(const Json& j);

/// {"b": [...], "c": [...], "rank": d, "nu": "p/q" or null}
Json witness_json(const balancing::BalancingWitness& w);

}  // namespace kcsc::report

#endif  // KCSC_REPORT_JSON_IO_HPP
