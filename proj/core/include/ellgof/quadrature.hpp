#pragma once

#include <vector>

namespace ellgof {

struct QuadratureNode {
    double x;
    double w;
};

// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree 2n-1.
std::vector<QuadratureNode> gauss_legendre(int n);

// Gauss rule for the weight (1-x)^alpha (1+x)^beta on [-1, 1]; exact for
// polynomials of degree 2n-1 against that weight (alpha, beta > -1).
std::vector<QuadratureNode> gauss_jacobi(int n, double alpha, double beta);

// Product rule over the unit sphere in R^m with weights normalized to sum to
// one; integrates every polynomial of total degree <= max_degree exactly.
// Built from symmetric Gauss-Jacobi rules in the polar cosines and a uniform
// rule on the final circle, so odd monomials integrate to exactly zero.
struct SphereQuadrature {
    int m = 0;
    std::vector<std::vector<double>> points;  // each of length m, unit norm
    std::vector<double> weights;              // sums to 1
};
SphereQuadrature sphere_product_rule(int m, int max_degree);

}  // namespace ellgof
