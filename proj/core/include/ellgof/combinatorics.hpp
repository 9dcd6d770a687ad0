#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ellgof {

// Exact binomial coefficient; 0 when k < 0 or k > n.
std::int64_t binomial(int n, int k);

// Number of linearly independent degree-k spherical harmonics in dimension m:
// 1 for k = 0, m for k = 1, C(m+k-1, m-1) - C(m+k-3, m-1) for k >= 2.
int harmonic_dimension(int m, int k);

// Dimension of the full degree-k product block: C(m+k-1, k).
std::int64_t degree_space_dimension(int m, int k);

// Mean of u1^e1 * ... * um^em over the unit sphere in R^m (surface measure
// normalized to total mass one). Zero when any exponent is odd; otherwise an
// exact dyadic-rational recursion keeps the value exact in double precision.
double sphere_monomial_moment(std::span<const int> exponents);

// All exponent tuples of length m summing to degree, in lexicographic order
// (first coordinate most significant, descending).
std::vector<std::vector<int>> monomials_of_degree(int m, int degree);

}  // namespace ellgof
