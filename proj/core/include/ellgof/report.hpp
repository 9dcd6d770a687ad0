#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>

#include "ellgof/decomposition.hpp"
#include "ellgof/estimate.hpp"
#include "ellgof/family.hpp"
#include "ellgof/montecarlo.hpp"

namespace ellgof {

struct TestOptions {
    int K = 5;
    bool select = false;  // choose the degree by the penalized rule up to d_n
    int d_n = 8;
    double level = 0.05;
    int mc_replicates = 2000;  // 0 disables the Monte Carlo reference
    std::uint64_t seed = 1;
    int workers = 0;
    const NullTable* null_table = nullptr;  // reuse a stored table instead of building
    bool high_degree_report = false;        // also report the degree >= 3 restriction
};

struct TestOutcome {
    EllipticalFit fit;
    TestStatistics statistics;
    int K = 0;
    std::optional<SelectionResult> selection;
    nlohmann::json report;
};

// Full pipeline: fit, standardize, decompose, reference p-values, JSON
// report. The headline entries are Q (raw, asymptotically chi-square nu_Q)
// and the scaled components U_s / I_s / R_s (chi-square nu_U / nu_I / nu_R);
// Monte Carlo p-values use a table with exactly matching key. Diagnostics
// list which departures the flagged components point to.
TestOutcome run_test(const Eigen::MatrixXd& X, const NullFamily& family,
                     const TestOptions& options);

// Machine-readable description of every retained basis function: radial
// coefficients per group plus the radius-power / monomial expansion.
nlohmann::json basis_dump_json(const NullFamily& family, int K);

}  // namespace ellgof
