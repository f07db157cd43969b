#include "kcsc/moment/polytope.hpp"

#include "kcsc/lattice/elimination.hpp"

namespace kcsc::moment {

const RatVector& Polytope::vertex_of(const std::string& label) const {
  const auto it = cone_vertex.find(label);
  if (it == cone_vertex.end()) throw InputError("unknown cone label " + label);
  return vertices[it->second];
}

RatVector cone_vertex(const toric::Cone& c, int k) {
  const RatMatrix at = to_rational(IntMatrix(c.generators.transpose()));
  return lattice::solve_exact(at, RatVector::Constant(c.dim(), Rational(-k)));
}

int default_multiple(const toric::Fan& f) {
  Integer l = 1;
  for (const auto& c : f.cones()) {
    const RatVector u = cone_vertex(c, 1);
    for (Index i = 0; i < u.size(); ++i) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(u(i)));
  }
  if (l > 60) throw InputError("no multiple k <= 60 makes the polytope integral (need " + to_string(l) + ")");
  return l.convert_to<int>();
}

Polytope anticanonical_polytope(const toric::Fan& f, int k) {
  if (k < 1) throw InputError("polytope multiple must be positive");
  Polytope p;
  p.dim = f.dim;
  p.k = k;
  p.normals = f.rays;
  p.cone_rays = f.max_cones;
  for (std::size_t i = 0; i < f.max_cones.size(); ++i) {
    const toric::Cone c = f.cone(i);
    const RatVector u = cone_vertex(c, k);
    for (std::size_t j = 0; j < f.rays.size(); ++j) {
      const Rational pairing = (u.transpose() * f.rays[j].cast<Rational>())(0);
      if (pairing < -k)
        throw InputError("vertex of " + c.label + " violates the inequality of ray " + std::to_string(j) +
                         " (fan is not Fano-compatible)");
    }
    std::size_t index = p.vertices.size();
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
      if (exactly_equal(p.vertices[v], u)) index = v;
    if (index == p.vertices.size()) p.vertices.push_back(u);
    p.cone_labels.push_back(c.label);
    p.cone_vertex[c.label] = index;
  }
  return p;
}

Polytope anticanonical_polytope(const toric::Fan& f) {
  return anticanonical_polytope(f, f.polytope_multiple ? *f.polytope_multiple : default_multiple(f));
}

std::map<std::string, RatVector> cone_vertex_correspondence(const Polytope& p) {
  std::map<std::string, RatVector> out;
  for (const auto& label : p.cone_labels) out[label] = p.vertex_of(label);
  return out;
}

Polytope translated(const Polytope& p, const RatVector& t) {
  Polytope q = p;
  for (auto& v : q.vertices) v += t;
  return q;
}

}  // namespace kcsc::moment
