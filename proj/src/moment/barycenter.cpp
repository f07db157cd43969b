#include "kcsc/moment/barycenter.hpp"

#include <numeric>
#include <set>

#include "kcsc/lattice/elimination.hpp"

namespace kcsc::moment {

namespace {

// Indices of the cones whose ray sets contain ray j.
std::vector<std::size_t> cones_on_facet(const Polytope& p, Index j) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < p.cone_rays.size(); ++c)
    for (Index r : p.cone_rays[c])
      if (r == j) out.push_back(c);
  return out;
}

std::size_t shared_rays(const std::vector<Index>& a, const std::vector<Index>& b) {
  std::size_t n = 0;
  for (Index x : a)
    for (Index y : b)
      if (x == y) ++n;
  return n;
}

// Cyclic order of a 3-dimensional polytope's facet polygon, walking cones that share a 2-face.
std::vector<std::size_t> polygon_cycle(const Polytope& p, const std::vector<std::size_t>& cones, Index ray) {
  const std::size_t n = cones.size();
  if (n < 3) throw InputError("facet of ray " + std::to_string(ray) + " has fewer than three vertices");
  std::vector<std::vector<std::size_t>> nbr(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && shared_rays(p.cone_rays[cones[a]], p.cone_rays[cones[b]]) >= 2) nbr[a].push_back(b);
  for (std::size_t a = 0; a < n; ++a)
    if (nbr[a].size() != 2)
      throw InputError("facet of ray " + std::to_string(ray) + " cannot be triangulated: " + p.cone_labels[cones[a]] +
                       " has " + std::to_string(nbr[a].size()) + " adjacent cones");
  std::vector<std::size_t> order{0};
  std::size_t prev = 0, cur = nbr[0][0];
  while (cur != 0) {
    order.push_back(cur);
    const std::size_t next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
    prev = cur;
    cur = next;
    if (order.size() > n) break;
  }
  if (order.size() != n)
    throw InputError("facet of ray " + std::to_string(ray) + " is not a single cycle of adjacent cones");
  return order;
}

Rational factorial(int m) {
  Rational f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

Centroid centroid(const Polytope& p, const std::vector<std::size_t>& facet_order) {
  const int m = p.dim;
  if (m < 1 || m > 3) throw InputError("barycenter supports dimensions 1 to 3, got " + std::to_string(m));
  if (p.vertices.empty()) throw InputError("polytope has no vertices");

  RatVector apex = RatVector::Zero(m);
  for (const auto& v : p.vertices) apex += v;
  apex /= Rational(static_cast<long>(p.vertices.size()));

  std::vector<std::size_t> order = facet_order;
  if (order.empty()) {
    order.resize(p.normals.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  if (order.size() != p.normals.size() || std::set<std::size_t>(order.begin(), order.end()).size() != order.size())
    throw InputError("facet order must be a permutation of the facets");

  const Rational simplex_scale = factorial(m);
  Rational total = 0;
  RatVector moment = RatVector::Zero(m);
  auto add_simplex = [&](const std::vector<RatVector>& corners) {
    RatMatrix edges(m, m);
    for (int i = 0; i < m; ++i) edges.col(i) = corners[static_cast<std::size_t>(i)] - apex;
    const Rational vol = abs(lattice::determinant(edges)) / simplex_scale;
    RatVector c = apex;
    for (const auto& x : corners) c += x;
    c /= Rational(m + 1);
    total += vol;
    moment += c * vol;
  };

  for (std::size_t j : order) {
    const Index ray = static_cast<Index>(j);
    const auto cones = cones_on_facet(p, ray);
    auto vertex = [&](std::size_t local) -> const RatVector& { return p.vertex_of(p.cone_labels[cones[local]]); };
    if (m == 1) {
      if (cones.size() != 1) throw InputError("ray " + std::to_string(j) + " must lie in exactly one cone");
      add_simplex({vertex(0)});
    } else if (m == 2) {
      if (cones.size() != 2) throw InputError("ray " + std::to_string(j) + " must lie in exactly two cones");
      add_simplex({vertex(0), vertex(1)});
    } else {
      const auto cycle = polygon_cycle(p, cones, ray);
      for (std::size_t i = 1; i + 1 < cycle.size(); ++i) add_simplex({vertex(cycle[0]), vertex(cycle[i]), vertex(cycle[i + 1])});
    }
  }
  if (total <= 0) throw InputError("polytope has zero volume");
  return {moment / total, total};
}

RatVector barycenter(const Polytope& p) { return centroid(p).barycenter; }

Rational volume(const Polytope& p) { return centroid(p).volume; }

PotentialTable potentials_at_points(const Polytope& p, const std::vector<std::string>& labels) {
  return potentials_at_points(p, labels, barycenter(p));
}

PotentialTable potentials_at_points(const Polytope& p, const std::vector<std::string>& labels,
                                    const RatVector& barycenter) {
  PotentialTable t;
  t.points = labels;
  t.barycenter = barycenter;
  t.values.resize(p.dim, static_cast<Index>(labels.size()));
  for (std::size_t j = 0; j < labels.size(); ++j)
    t.values.col(static_cast<Index>(j)) = p.vertex_of(labels[j]) - barycenter;
  return t;
}

}  // namespace kcsc::moment
