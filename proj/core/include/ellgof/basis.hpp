#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "ellgof/family.hpp"
#include "ellgof/harmonics.hpp"
#include "ellgof/radial.hpp"

namespace ellgof {

// Component blocks of the score decomposition: pure angular terms (U),
// pure radial terms (R), and angular-radial cross terms graded by the
// angular degree kappa = k - 2j they carry.
enum class Block { uniformity, radius, cross1, cross2, cross3 };

std::string block_name(Block b);

// A retained index group (k, j): radial factor s_{j,kappa}(y) times each of
// the e_m(kappa) degree-kappa harmonics, kappa = k - 2j.
struct BasisGroup {
    int k = 0;
    int j = 0;
    int kappa = 0;
    Block block = Block::uniformity;
    RadialPolynomial radial;
    int harmonic_count = 0;
    int offset = 0;  // first column of this group in evaluate_basis output
};

struct PiTerm {
    int rpow = 0;                // power of the radius
    std::vector<int> exponents;  // direction monomial, total degree kappa
    double coef = 0.0;
};

struct BasisSet {
    FamilyId family_id = FamilyId::mvn;
    int m = 0;
    int K = 0;
    int k_min = 0;
    std::vector<BasisGroup> groups;  // ordered U, R, I1, I2, I3; (k, j) ascending within
    HarmonicBasis harmonics;
    int total = 0;

    const BasisGroup* find(int k, int j) const;  // nullptr when not retained
    std::vector<int> groups_in(Block b) const;

    // Flattened evaluation tables: all angular factors share one monomial
    // pool so each monomial is computed once per observation.
    std::vector<std::vector<int>> monomials;
    std::vector<int> fn_group;                                // per column
    std::vector<std::vector<std::pair<int, double>>> fn_terms;  // per column
};

Block classify_group(int k, int j);

// Retains every group with k_min <= k <= K, j = 0 .. floor(k/2). Radial
// factors are built from the family's null moments of y. k_min defaults to
// the family's smallest retained degree; a larger override restricts the
// basis to higher degrees (reporting option), a smaller one is rejected.
BasisSet build_basis(const NullFamily& family, int K, int k_min_override = -1);

// Values of all retained functions at standardized rows Z (n x m): entry
// (r, c) is s_{j,kappa}(|z_r|^2) times the homogenized degree-kappa harmonic
// at z_r. Under the null each column has mean zero and unit variance, and
// distinct columns are uncorrelated.
Eigen::MatrixXd evaluate_basis(const BasisSet& basis, const Eigen::MatrixXd& Z);

// Column index of each function when the block layout is re-ordered to
// lexicographic (k, j, l): perm[p] is the block-layout column holding the
// p-th function in lexicographic order. A bijection, so applying it and
// inverting it round-trips exactly.
std::vector<int> lexicographic_permutation(const BasisSet& basis);

// One function expanded into radius-power / direction-monomial terms, for
// printing and table comparison; l is 1-based within the group.
std::vector<PiTerm> flatten_function(const BasisSet& basis, int group_index, int l);

// Flip the overall sign so the lexicographically first term among those of
// (near-)maximal magnitude has a positive coefficient.
void canonicalize_sign(std::vector<PiTerm>& terms);

}  // namespace ellgof
