#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ellgof/family.hpp"

namespace ellgof {

// Label of the group-covariance convention used by the scaled statistics;
// stored in every table so tables from other conventions cannot be reused.
inline constexpr const char* kScalingConvention = "center_n1";

struct NullTableKey {
    std::string family;
    double shape = 0.0;  // NaN when the family has none
    int m = 0;
    int n = 0;
    int K = 0;
    int k_min = 0;
    std::string scaling = kScalingConvention;
};

bool same_key(const NullTableKey& a, const NullTableKey& b);
NullTableKey table_key(const NullFamily& family, int n, int K);

// Reference distribution of every statistic under the fitted null: each
// entry holds the B replicate values sorted ascending.
struct NullTable {
    NullTableKey key;
    std::uint64_t seed = 0;
    int replicates = 0;
    int redraws = 0;  // extra attempts spent on replicates that failed numerically
    std::string warning;  // set when redraws exceed 1% of the replicates
    std::string created;
    std::map<std::string, std::vector<double>> values;
};

// Simulates B datasets of size n from the family (location zero, identity
// scatter), refits each by maximum likelihood, and records Q, U, I, R, their
// scaled versions, and every per-group statistic. Replicate r is a pure
// function of (seed, r, attempt), so any worker count yields byte-identical
// tables; numerically failed replicates are redrawn with the next attempt.
NullTable build_null_table(const NullFamily& family, int n, int K, int B, std::uint64_t seed,
                           int workers = 0);

// One JSON object per line, {"statistic": name, "values": [...]}, plus a
// sidecar <path>.meta.json holding the key and provenance.
void write_null_table(const NullTable& table, const std::string& path);
NullTable read_null_table(const std::string& path);

// usage_error when a stored table was built under a different configuration.
void require_key_match(const NullTableKey& table, const NullTableKey& wanted);

// Monte Carlo p-value (1 + #{values >= observed}) / (1 + B).
double mc_pvalue(const std::vector<double>& sorted_values, double observed);

// Empirical quantile with linear interpolation between order statistics.
double mc_quantile(const std::vector<double>& sorted_values, double p);

}  // namespace ellgof
