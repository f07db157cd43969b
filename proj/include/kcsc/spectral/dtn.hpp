#ifndef KCSC_SPECTRAL_DTN_HPP
#define KCSC_SPECTRAL_DTN_HPP

#include <ostream>

#include "kcsc/lattice/types.hpp"

namespace kcsc::spectral {

/**
 * Mode-wise Dirichlet-to-Neumann map: boundary data (h, k) on the unit sphere goes to
 * (d/dr (out - in), d/dr Laplacian (out - in)) at r = 1, where out and in are the
 * outer and inner biharmonic extensions of (h, k).
 */
struct DtNMatrix {
  int m = 0;
  long gamma = 0;
  RatMatrix entries;  // 2 x 2, columns are the images of (1, 0) and (0, 1)
  Rational determinant;
};

DtNMatrix dtn_matrix(int m, long gamma);

/// Exact inverse; a zero determinant raises InconsistencyError.
RatMatrix dtn_inverse(const DtNMatrix& d);

/// CSV rows "m,gamma,p11,p12,p21,p22,det" for gamma = 0..max_gamma (none when max_gamma < 0).
void write_dtn_table(std::ostream& out, int m, long max_gamma, bool header = true);

}  // namespace kcsc::spectral

#endif  // KCSC_SPECTRAL_DTN_HPP
