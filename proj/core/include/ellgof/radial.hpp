#pragma once

#include <vector>

namespace ellgof {

// Orthonormal radial polynomial s_{j,i}: degree j in y = r^2, orthonormal
// against the weight y^i under the null law of y, with positive leading
// coefficient. The companion factor r^i is carried by the angular part.
struct RadialPolynomial {
    int j = 0;
    int i = 0;
    std::vector<double> coef;  // ascending powers of y, size j + 1

    double operator()(double y) const;
};

// Build s_{j,i} from the null moments of y: moments[t] must hold E[y^t] for
// t = 0 .. 2j + i. Solves the Hankel system for the monic orthogonal
// polynomial and normalizes; throws numeric_error when the moment matrix is
// not positive definite or the residual norm is not positive.
RadialPolynomial radial_polynomial(const std::vector<double>& moments, int j, int i);

// Closed form for the Gaussian null in dimension m (generalized Laguerre in
// y/2); agrees with radial_polynomial on Gaussian moments exactly, including
// the sign convention.
RadialPolynomial gaussian_radial_polynomial(int m, int j, int i);

}  // namespace ellgof
