#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ellgof {

// A polynomial in the coordinates of u, stored as monomial terms. Harmonics
// are kept in homogeneous form: every term of a degree-k harmonic has total
// degree k, so evaluating the stored polynomial at an unnormalized vector y
// yields ||y||^k times its value at u = y/||y||.
struct SpherePoly {
    int m = 0;
    int degree = 0;
    std::vector<std::pair<std::vector<int>, double>> terms;

    double operator()(const double* u) const;
    double operator()(const std::vector<double>& u) const { return (*this)(u.data()); }
};

// Multiply sign by -1 if needed so that the largest-magnitude coefficient
// (ties broken by lexicographically smallest exponent tuple, within a
// relative tolerance of 1e-9) is positive. Used when comparing bases whose
// per-function sign is conventional.
void canonicalize_sign(SpherePoly& p);

// Orthonormal real harmonics on the unit sphere under the normalized surface
// measure: mean of Psi_{k,l} * Psi_{k',l'} over the sphere is delta delta.
// Degree k holds exactly harmonic_dimension(m, k) functions; Psi_{0,1} = 1.
struct HarmonicBasis {
    int m = 0;
    int k_max = 0;
    std::vector<std::vector<SpherePoly>> by_degree;  // by_degree[k][l-1]

    const SpherePoly& at(int k, int l) const;  // l is 1-based
};

// m = 2: closed trigonometric pairs (sqrt(2) cos k theta, sqrt(2) sin k theta).
// m = 3: associated-Legendre products, polar axis u2, azimuth in (u1, u3),
//        ordered zonal first then (cos, sin) pairs of increasing frequency.
// m >= 4: numerical Gram-Schmidt over degree-k monomials restricted to the
//        sphere, projecting out all lower-degree polynomials, using exact
//        monomial moments; candidates whose residual falls below 1e-9 of
//        their original norm are discarded as dependent.
HarmonicBasis build_harmonics(int m, int k_max);

enum class OrthonormalityMethod { quadrature, montecarlo };

struct OrthonormalityReport {
    std::string method;
    double max_abs_deviation = 0.0;  // of the Gram matrix from the identity
    double three_sigma_band = 0.0;   // 0 for the exact quadrature method
    std::size_t evaluations = 0;
};

OrthonormalityReport verify_orthonormality(const HarmonicBasis& basis,
                                           OrthonormalityMethod method,
                                           std::size_t montecarlo_draws = 1000000,
                                           std::uint64_t seed = 1);

}  // namespace ellgof
