#include "kcsc/toric/classify.hpp"

#include <future>

namespace kcsc::toric {

SingularityReport classify_cone(const Cone& c) {
  SingularityReport r;
  r.label = c.label;
  r.group = quotient_group(c);
  r.order = r.group.order;
  r.is_smooth = r.order == 1;
  r.is_isolated = is_isolated(c);
  const SuTest su = is_su_singularity(c);
  r.is_su = su.is_su;
  r.gorenstein_functional = su.functional;
  return r;
}

std::vector<SingularityReport> classify_fan(const Fan& f, unsigned threads) {
  const auto cones = f.cones();
  std::vector<SingularityReport> out(cones.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < cones.size(); ++i) out[i] = classify_cone(cones[i]);
    return out;
  }
  // Strided workers; results land in their input slot so order is preserved.
  std::vector<std::future<void>> workers;
  for (unsigned t = 0; t < threads; ++t)
    workers.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < cones.size(); i += threads) out[i] = classify_cone(cones[i]);
    }));
  for (auto& w : workers) w.get();
  return out;
}

}  // namespace kcsc::toric
