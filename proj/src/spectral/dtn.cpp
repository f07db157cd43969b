#include "kcsc/spectral/dtn.hpp"

#include "kcsc/spectral/radial_profile.hpp"

namespace kcsc::spectral {

DtNMatrix dtn_matrix(int m, long gamma) {
  DtNMatrix d;
  d.m = m;
  d.gamma = gamma;
  d.entries.resize(2, 2);
  const Rational unit[2][2] = {{1, 0}, {0, 1}};
  for (int col = 0; col < 2; ++col) {
    const RadialProfile jump =
        outer_extension(m, gamma, unit[col][0], unit[col][1]) - inner_extension(m, gamma, unit[col][0], unit[col][1]);
    d.entries(0, col) = jump.derivative_at_one();
    d.entries(1, col) = laplacian(jump).derivative_at_one();
  }
  d.determinant = d.entries(0, 0) * d.entries(1, 1) - d.entries(0, 1) * d.entries(1, 0);
  return d;
}

RatMatrix dtn_inverse(const DtNMatrix& d) {
  if (d.determinant == 0)
    throw InconsistencyError("Dirichlet-to-Neumann matrix is singular at m = " + std::to_string(d.m) +
                             ", gamma = " + std::to_string(d.gamma));
  RatMatrix inv(2, 2);
  inv << d.entries(1, 1), -d.entries(0, 1), -d.entries(1, 0), d.entries(0, 0);
  return inv / d.determinant;
}

void write_dtn_table(std::ostream& out, int m, long max_gamma, bool header) {
  if (header) out << "m,gamma,p11,p12,p21,p22,det\n";
  for (long gamma = 0; gamma <= max_gamma; ++gamma) {
    const DtNMatrix d = dtn_matrix(m, gamma);
    out << m << ',' << gamma << ',' << to_string(d.entries(0, 0)) << ',' << to_string(d.entries(0, 1)) << ','
        << to_string(d.entries(1, 0)) << ',' << to_string(d.entries(1, 1)) << ',' << to_string(d.determinant) << '\n';
  }
}

}  // namespace kcsc::spectral
