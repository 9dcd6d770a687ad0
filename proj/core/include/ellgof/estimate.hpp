#pragma once

#include <Eigen/Core>

#include "ellgof/family.hpp"

namespace ellgof {

struct EllipticalFit {
    Eigen::VectorXd mu;
    Eigen::MatrixXd V;  // scatter matrix at the likelihood scale
    int iterations = 0;
    double gap = 0.0;  // last fixed-point step size
};

// Maximum-likelihood location and scatter for the family. The Gaussian case
// is closed form (mean and covariance with divisor n); other families run
// the reweighting fixed point with weights g(y) from the Gaussian start,
// backtracking when a step leaves the family's support, until the step size
// falls below 1e-10 (at most 500 iterations, then numeric_error).
EllipticalFit fit_mle(const Eigen::MatrixXd& X, const NullFamily& family);

// Rows z_i = V^{-1/2} (x_i - mu) using the symmetric square root.
Eigen::MatrixXd standardize(const Eigen::MatrixXd& X, const EllipticalFit& fit);

// Squared Mahalanobis radii (x_i - mu)' V^{-1} (x_i - mu).
Eigen::VectorXd squared_radii(const Eigen::MatrixXd& X, const EllipticalFit& fit);

}  // namespace ellgof
