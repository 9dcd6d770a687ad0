#pragma once

#include <Eigen/Core>
#include <map>
#include <string>
#include <vector>

#include "ellgof/basis.hpp"
#include "ellgof/family.hpp"

namespace ellgof {

// Correction constants induced by estimating location and scatter. The c
// vectors hold one entry per retained group of the matching block, ascending
// in (k, j); the d factors weight the rank-one corrections and must be
// positive for the decomposition to be a sum of squares.
struct DecompositionConstants {
    double sigma1 = 0.0;  // E[y g(y)^2]
    double sigma2 = 0.0;  // m (m + 2) / E[zeta^2]
    Eigen::VectorXd c0;   // radius block
    Eigen::VectorXd c1;   // cross block, angular degree 1
    Eigen::VectorXd c2;   // cross block, angular degree 2
    double d0 = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

DecompositionConstants decomposition_constants(const NullFamily& family, const BasisSet& basis);

struct DegreesOfFreedom {
    int Q = 0;
    int U = 0;
    int I = 0;
    int R = 0;
};

DegreesOfFreedom degrees_of_freedom(int m, int K, int k_min);

struct TestStatistics {
    int n = 0;
    double Q = 0.0, U = 0.0, I = 0.0, R = 0.0;          // raw decomposition, Q = U + I + R
    double Q_s = 0.0, U_s = 0.0, I_s = 0.0, R_s = 0.0;  // per-group studentized versions
    std::map<std::string, double> group_raw;             // "C2_k_j"
    std::map<std::string, double> group_scaled;          // "Cs2_k_j"
    DegreesOfFreedom dof;
};

// Z must be standardized data (rows z_i). The scaled statistics studentize
// each group mean by its empirical covariance (centered at the group mean,
// divisor n - 1); a singular group covariance raises numeric_error.
TestStatistics compute_statistics(const BasisSet& basis, const DecompositionConstants& constants,
                                  const Eigen::MatrixXd& Z);

struct SelectionResult {
    int K_hat = 0;
    std::vector<int> candidates;
    std::vector<double> Q_values;
    std::vector<double> penalized;  // Q_k minus (retained dimension) log n
};

// Data-driven degree: the smallest candidate k in [k_min, d_n] maximizing
// Q_k - nu_Q(k) log n, all constants rebuilt per candidate.
SelectionResult select_K(const NullFamily& family, const Eigen::MatrixXd& Z, int d_n);

}  // namespace ellgof
