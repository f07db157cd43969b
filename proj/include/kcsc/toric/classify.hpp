#ifndef KCSC_TORIC_CLASSIFY_HPP
#define KCSC_TORIC_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "kcsc/toric/cone.hpp"
#include "kcsc/toric/fan.hpp"

namespace kcsc::toric {

struct SingularityReport {
  std::string label;
  Integer order;
  bool is_smooth = false;
  bool is_isolated = false;
  bool is_su = false;
  std::optional<IntVector> gorenstein_functional;
  QuotientGroup group;
};

SingularityReport classify_cone(const Cone& c);

/// One report per maximal cone, in input order. Cones are classified on up to `threads` workers.
std::vector<SingularityReport> classify_fan(const Fan& f, unsigned threads = 1);

}  // namespace kcsc::toric

#endif  // KCSC_TORIC_CLASSIFY_HPP
