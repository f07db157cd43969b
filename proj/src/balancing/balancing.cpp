#include "kcsc/balancing/balancing.hpp"

#include "kcsc/lattice/elimination.hpp"
#include "kcsc/lattice/positive_kernel.hpp"

namespace kcsc::balancing {

BalancingProblem BalancingProblem::toric_einstein(int m, Rational s, RatMatrix phi, std::vector<std::string> points) {
  BalancingProblem p;
  p.m = m;
  p.s = std::move(s);
  p.lap_phi = phi * Rational(-p.s / m);
  p.phi = std::move(phi);
  p.points = std::move(points);
  p.validate();
  return p;
}

bool BalancingProblem::einstein_mode() const {
  return m > 0 && exactly_equal(lap_phi, RatMatrix(phi * Rational(-s / m)));
}

void BalancingProblem::validate() const {
  if (m < 1) throw InputError("balancing problem needs m >= 1");
  if (phi.rows() != lap_phi.rows() || phi.cols() != lap_phi.cols())
    throw InputError("phi and lap_phi must have the same shape");
  if (phi_q && phi_q->rows() != phi.rows()) throw InputError("phi_q must have one row per potential");
  if (volume && *volume <= 0) throw InputError("volume must be positive");
  if (!points.empty() && static_cast<Index>(points.size()) != phi.cols())
    throw InputError("one label per marked point expected");
}

RatMatrix build_theta(const BalancingProblem& p, const RatVector& b, const RatVector& c) {
  if (b.size() != p.n_points() || c.size() != p.n_points())
    throw InputError("weights b and c must have one entry per marked point");
  RatMatrix theta(p.d(), p.n_points());
  for (Index j = 0; j < p.n_points(); ++j) theta.col(j) = p.lap_phi.col(j) * b(j) + p.phi.col(j) * c(j);
  return theta;
}

RatMatrix build_xi(const BalancingProblem& p, const RatVector& a) {
  if (!p.phi_q) throw InputError("no values at the points q_l were supplied");
  if (a.size() != p.phi_q->cols()) throw InputError("weights a must have one entry per point q_l");
  RatMatrix xi = *p.phi_q;
  for (Index l = 0; l < a.size(); ++l) xi.col(l) *= a(l);
  return xi;
}

Rational ke_theta_factor(int m, const Rational& s) {
  if (m < 2) throw InputError("Kaehler-Einstein factor needs m >= 2");
  return Rational(m - 1) * s / m;
}

Nondegeneracy check_nondegeneracy(const RatMatrix& theta, const std::optional<RatMatrix>& xi) {
  RatMatrix joined = theta;
  if (xi) {
    if (xi->rows() != theta.rows()) throw InputError("Xi and Theta must have the same number of rows");
    joined.resize(theta.rows(), xi->cols() + theta.cols());
    joined << *xi, theta;
  }
  Nondegeneracy out;
  out.d = theta.rows();
  out.rank = lattice::rank(joined);
  out.full_rank = out.rank == out.d;
  return out;
}

std::optional<BalancingWitness> solve_balancing(const BalancingProblem& p) {
  p.validate();
  const RatMatrix reduced = p.lap_phi + p.phi * p.s;
  const auto b = lattice::positive_nullspace_witness(reduced);
  if (!b) return std::nullopt;
  BalancingWitness w;
  w.b = *b;
  w.c = *b * p.s;
  const RatMatrix theta = build_theta(p, w.b, w.c);
  if (!is_zero(theta * RatVector::Ones(p.n_points())))
    throw InconsistencyError("balancing witness does not annihilate the balancing rows");
  const auto nd = check_nondegeneracy(theta);
  w.rank = nd.rank;
  if (!nd.full_rank) return std::nullopt;
  if (p.volume) w.nu = nu_constant(RatVector(), w.c, *p.volume);
  return w;
}

GeneralCheck general_balancing_check(const BalancingProblem& p, const RatVector& f, const RatVector& a,
                                     const RatVector& b, const RatVector& c) {
  if (!p.volume) throw InputError("the balancing check needs the volume of the base");
  if (f.size() != p.d() + 1) throw InputError("f must have d + 1 entries");
  RatVector rows = f.tail(p.d()) + build_theta(p, b, c) * RatVector::Ones(p.n_points());
  if (a.size() > 0) rows += build_xi(p, a) * RatVector::Ones(a.size());
  GeneralCheck out;
  out.balanced = is_zero(rows);
  out.nu = f(0) + nu_constant(a, c, *p.volume);
  return out;
}

Rational nu_constant(const RatVector& a, const RatVector& c, const Rational& vol) {
  if (vol <= 0) throw InputError("volume must be positive");
  return (a.sum() + c.sum()) / vol;
}

}  // namespace kcsc::balancing
