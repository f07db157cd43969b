#ifndef KCSC_BALANCING_GREEN_HPP
#define KCSC_BALANCING_GREEN_HPP

#include "kcsc/lattice/types.hpp"
#include "kcsc/tuning/symbolic.hpp"

namespace kcsc::balancing {

/// Coefficients of the Laplacian and bi-Laplacian Green functions in a deficiency element W_{beta,gamma}.
struct DeficiencyCoefficients {
  tuning::PiMultiple green_laplacian;
  tuning::PiMultiple green_bilaplacian;
};

/**
 * m >= 3: beta |G| / (2(m-1)|S|) and -(gamma/(4(m-2)) - s beta (m^2-m+2)/((m-2)m(m+1))) |G| / (2(m-1)|S|);
 * m = 2: beta |G| / |S^3| and (gamma/4 - s beta/6) |G| / |S^3|. Here |S| = |S^{2m-1}|, |G| the group order.
 */
DeficiencyCoefficients deficiency_coefficients(int m, const Rational& s, const Integer& order, const Rational& beta,
                                               const Rational& gamma);

/// Distributional constants of the orbifold Green functions at a point with group of the given order.
struct GreenConstants {
  tuning::PiMultiple laplacian;             // 2(m-1)|S|/|G|, or |S^3|/|G| for m = 2
  tuning::PiMultiple laplacian_correction;  // s(m^2-m+2)/(m(m+1)), or 2s|S^3|/(3|G|) for m = 2
  tuning::PiMultiple bilaplacian;           // 2(m-1)|S| 4(m-2)/|G|, or 4|S^3|/|G| for m = 2
};

GreenConstants green_constants(int m, const Rational& s, const Integer& order);

}  // namespace kcsc::balancing

#endif  // KCSC_BALANCING_GREEN_HPP
