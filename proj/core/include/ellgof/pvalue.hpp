#pragma once

namespace ellgof {

// Upper tail P(X >= x) for a chi-square variable with nu degrees of freedom.
double chi_square_sf(double x, double nu);

// Upper-tail quantile: smallest x with P(X >= x) <= p.
double chi_square_upper_quantile(double p, double nu);

}  // namespace ellgof
