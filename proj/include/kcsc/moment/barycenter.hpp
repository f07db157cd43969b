#ifndef KCSC_MOMENT_BARYCENTER_HPP
#define KCSC_MOMENT_BARYCENTER_HPP

#include <optional>
#include <string>
#include <vector>

#include "kcsc/moment/polytope.hpp"

namespace kcsc::moment {

struct Centroid {
  RatVector barycenter;
  Rational volume;
};

/**
 * Exact centroid by coning the polytope from an interior apex (the vertex
 * average) over its facets. Facet j is the face of normal j; its vertices are
 * the cones containing ray j, ordered cyclically by codimension-one adjacency
 * and fan-triangulated. Supports dimensions 1 to 3.
 *
 * `facet_order` permutes the order in which facets are accumulated; the result
 * is independent of it.
 */
Centroid centroid(const Polytope& p, const std::vector<std::size_t>& facet_order = {});

RatVector barycenter(const Polytope& p);
Rational volume(const Polytope& p);

/// phi_i(p_j) = (vertex(sigma_j) - barycenter)_i; one column per selected cone.
struct PotentialTable {
  std::vector<std::string> points;
  RatMatrix values;  // dim x points.size()
  RatVector barycenter;
  std::string normalization = "unnormalized moment coordinates centred at the barycenter";
};

/// Throws InputError on an unknown label.
PotentialTable potentials_at_points(const Polytope& p, const std::vector<std::string>& labels);

/// As above with a precomputed barycenter.
PotentialTable potentials_at_points(const Polytope& p, const std::vector<std::string>& labels,
                                    const RatVector& barycenter);

}  // namespace kcsc::moment

#endif  // KCSC_MOMENT_BARYCENTER_HPP
