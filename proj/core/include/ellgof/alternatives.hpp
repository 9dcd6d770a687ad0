#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

namespace ellgof {

// Bivariate alternative generators used by the power studies. Draws are a
// pure function of (seed, replicate), so studies are reproducible across
// worker counts.
//
//   khintchine       scale mixture with angular structure concentrated in
//                    the degree-4 harmonics of the direction
//   contaminated_mvn 0.8 N(0, I) + 0.2 N((1,1), diag(1,2))
//   laplace_type     differences of independent unit exponentials sharing
//                    one common term
//   power_exp_2      radius Gamma(shape 2, scale 2) times a uniform direction
//
// The name "mvn" (standard bivariate normal) is also accepted as a null
// reference for calibration checks; it is not listed among the alternatives.
std::vector<std::string> alternative_names();

Eigen::MatrixXd sample_alternative(const std::string& name, int n, std::uint64_t seed,
                                   std::uint64_t replicate);

}  // namespace ellgof
