#ifndef KCSC_MOMENT_POLYTOPE_HPP
#define KCSC_MOMENT_POLYTOPE_HPP

#include <map>
#include <string>
#include <vector>

#include "kcsc/lattice/types.hpp"
#include "kcsc/toric/fan.hpp"

namespace kcsc::moment {

/**
 * k-anticanonical moment polytope {u : <u, v> >= -k for every ray v}.
 * For a simplicial fan each maximal cone contributes the vertex where the
 * inequalities of its rays are tight.
 */
struct Polytope {
  int dim = 0;
  int k = 1;
  std::vector<IntVector> normals;               // ray v_j gives the inequality <u, v_j> >= -k
  std::vector<RatVector> vertices;               // distinct vertices, in order of first cone
  std::vector<std::string> cone_labels;          // input order
  std::vector<std::vector<Index>> cone_rays;     // ray indices of each maximal cone
  std::map<std::string, std::size_t> cone_vertex;  // label -> index into vertices

  const RatVector& vertex_of(const std::string& label) const;
};

/// Vertex of one cone: the solution of <u, v_i> = -k over its generators.
RatVector cone_vertex(const toric::Cone& c, int k);

/// Smallest k in 1..60 making every cone vertex integral.
int default_multiple(const toric::Fan& f);

/// Throws InputError if some vertex violates an inequality (the fan is not Fano-compatible).
Polytope anticanonical_polytope(const toric::Fan& f, int k);

/// Uses the fan's polytope_multiple, else default_multiple.
Polytope anticanonical_polytope(const toric::Fan& f);

/// Label -> vertex, one entry per maximal cone.
std::map<std::string, RatVector> cone_vertex_correspondence(const Polytope& p);

/// Same polytope with every vertex shifted by t (the inequalities are not kept in sync).
Polytope translated(const Polytope& p, const RatVector& t);

}  // namespace kcsc::moment

#endif  // KCSC_MOMENT_POLYTOPE_HPP
