#include "kcsc/spectral/windows.hpp"

namespace kcsc::spectral {

std::string to_string(WindowContext c) {
  switch (c) {
    case WindowContext::base: return "base";
    case WindowContext::model: return "model";
    case WindowContext::gap: return "gap";
    case WindowContext::gluing: return "gluing";
  }
  return "?";
}

WindowContext parse_window_context(const std::string& name) {
  for (auto c : {WindowContext::base, WindowContext::model, WindowContext::gap, WindowContext::gluing})
    if (to_string(c) == name) return c;
  throw InputError("unknown weight window context '" + name + "'");
}

bool IndicialRoots::is_indicial(long delta) const {
  if (m == 2) return true;
  return !(delta >= 5 - 2 * m && delta <= -1);
}

bool IndicialRoots::is_indicial(const Rational& delta) const {
  if (boost::multiprecision::denominator(delta) != 1) return false;
  return is_indicial(boost::multiprecision::numerator(delta).convert_to<long>());
}

std::string IndicialRoots::describe() const {
  if (m == 2) return "Z";
  return "Z \\ {" + std::to_string(5 - 2 * m) + ", ..., -1}";
}

IndicialRoots indicial_roots(int m, Location) {
  if (m < 2) throw InputError("indicial roots need m >= 2");
  return {m};
}

std::string Interval::to_string() const { return "(" + kcsc::to_string(lo) + ", " + kcsc::to_string(hi) + ")"; }

Interval weight_window(int m, WindowContext context) {
  if (m < 2) throw InputError("weight windows need m >= 2");
  const Rational mm(m);
  switch (context) {
    case WindowContext::base:
    case WindowContext::model:
      if (m == 2) return {0, 1};
      return {4 - 2 * mm, 0};
    case WindowContext::gap:
      if (m == 2) throw InputError("gap window is unsupported for m = 2 (its upper end 4-2m collides with 0)");
      return {2 - 2 * mm, 4 - 2 * mm};
    case WindowContext::gluing:
      return {4 - 2 * mm, 5 - 2 * mm};
  }
  throw InputError("unknown weight window context");
}

}  // namespace kcsc::spectral
