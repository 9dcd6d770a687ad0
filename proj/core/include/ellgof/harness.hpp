#pragma once

#include <cstdint>
#include <map>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace ellgof {

struct PowerCase {
    std::string alternative;
    int n = 0;
};

// Desk-scale defaults: 500 power replicates against 2000-replicate null
// tables at level 0.05. The null hypothesis throughout is the bivariate
// Gaussian family, fitted by maximum likelihood to every draw.
struct PowerStudyConfig {
    std::vector<PowerCase> cases = {{"khintchine", 400},
                                    {"contaminated_mvn", 400},
                                    {"laplace_type", 75},
                                    {"power_exp_2", 100}};
    int K = 5;
    std::string sweep_alternative = "khintchine";
    int sweep_n = 400;
    std::vector<int> sweep_degrees = {3, 4, 5, 6, 7};
    double level = 0.05;
    int power_replicates = 500;
    int null_replicates = 2000;
    std::uint64_t seed = 20260816;
    int workers = 0;
    bool include_scaled_sum = false;  // also track the scaled total Q_s
};

PowerStudyConfig load_power_config(const std::string& path);

struct PowerRow {
    std::string alternative;
    int n = 0;
    int K = 0;
    std::map<std::string, double> rejection;       // statistic name -> rejection rate
    std::map<std::string, double> standard_error;  // binomial sqrt(p(1-p)/reps)
};

struct NullTableSeed {
    int n = 0;
    int K = 0;
    std::uint64_t seed = 0;
};

struct PowerStudyResult {
    PowerStudyConfig config;
    std::vector<PowerRow> cases;  // one row per configured alternative at K
    std::vector<PowerRow> sweep;  // one row per sweep degree
    std::vector<NullTableSeed> table_seeds;
    double runtime_seconds = 0.0;
};

// Rejection: Monte Carlo p-value against the matching null table at or below
// the configured level. Reproducible for a fixed seed at any worker count.
PowerStudyResult run_power_study(const PowerStudyConfig& config);

// Power-by-degree series for one alternative: one row per entry of degrees,
// each carrying every tracked statistic so callers can follow a single
// component across K. A one-element series equals the matching
// run_power_study cell exactly (same seeds, same tables).
std::vector<PowerRow> component_sweep(const PowerStudyConfig& config,
                                      const std::string& alternative, int n,
                                      const std::vector<int>& degrees);

std::string format_power_table(const std::vector<PowerRow>& rows, const std::string& title);

nlohmann::json power_study_json(const PowerStudyResult& result);

}  // namespace ellgof
