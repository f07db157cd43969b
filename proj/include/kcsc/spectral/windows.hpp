#ifndef KCSC_SPECTRAL_WINDOWS_HPP
#define KCSC_SPECTRAL_WINDOWS_HPP

#include <string>

#include "kcsc/lattice/types.hpp"

namespace kcsc::spectral {

enum class Location { origin, infinity };
enum class WindowContext { base, model, gap, gluing };

std::string to_string(WindowContext c);
WindowContext parse_window_context(const std::string& name);

/// Integer exponents at which the bi-Laplacian fails to be Fredholm on weighted spaces.
struct IndicialRoots {
  int m = 0;
  /// m >= 3: every integer except 5-2m, ..., -1; m = 2: every integer.
  bool is_indicial(long delta) const;
  bool is_indicial(const Rational& delta) const;
  std::string describe() const;
};

/// The same set at the origin and at infinity.
IndicialRoots indicial_roots(int m, Location where = Location::origin);

/// Open interval (lo, hi).
struct Interval {
  Rational lo;
  Rational hi;
  bool contains(const Rational& x) const { return lo < x && x < hi; }
  std::string to_string() const;
};

/**
 * Admissible weights: base/model (4-2m, 0), or (0, 1) for m = 2; gap (2-2m, 4-2m);
 * gluing (4-2m, 5-2m). The gap window is unsupported for m = 2.
 */
Interval weight_window(int m, WindowContext context);

}  // namespace kcsc::spectral

#endif  // KCSC_SPECTRAL_WINDOWS_HPP
