#ifndef KCSC_TORIC_FAN_HPP
#define KCSC_TORIC_FAN_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kcsc/lattice/types.hpp"
#include "kcsc/toric/cone.hpp"

namespace kcsc::toric {

/** Fan-file problem, with a location such as "line 3, column 7" or "max_cones[2]". */
class FanParseError : public InputError {
 public:
  FanParseError(const std::string& location, const std::string& message)
      : InputError(location + ": " + message), location_(location) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

/**
 * Simplicial fan of a toric orbifold: primitive rays in Z^m and maximal cones
 * given as index sets of exactly m linearly independent rays.
 */
struct Fan {
  std::string name;
  int dim = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<Index>> max_cones;
  std::optional<int> polytope_multiple;
  std::optional<Rational> scalar_curvature;

  /// 1-based labels "C1", "C2", ... in input order.
  std::string cone_label(std::size_t i) const;
  Cone cone(std::size_t i) const;
  std::vector<Cone> cones() const;
};

/**
 * Parses the JSON fan format
 *
 *   { "name": str, "dim": m, "rays": [[int...]...], "max_cones": [[idx...]...],
 *     "polytope_multiple": k (optional), "scalar_curvature": "p/q" (optional) }
 *
 * Rays are divided by the gcd of their entries. Unknown keys, duplicate rays,
 * dimension mismatches and cones that are not simplicial and full-dimensional
 * are rejected with a FanParseError.
 */
Fan parse_fan(std::string_view text);

Fan load_fan(const std::filesystem::path& path);

/// Serializes back to the fan-file format (rays as stored, i.e. primitive).
std::string dump_fan(const Fan& fan);

}  // namespace kcsc::toric

#endif  // KCSC_TORIC_FAN_HPP
