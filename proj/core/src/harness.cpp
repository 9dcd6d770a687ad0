#include "ellgof/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "ellgof/alternatives.hpp"
#include "ellgof/basis.hpp"
#include "ellgof/decomposition.hpp"
#include "ellgof/errors.hpp"
#include "ellgof/estimate.hpp"
#include "ellgof/montecarlo.hpp"
#include "ellgof/rng.hpp"

namespace ellgof {

namespace {

void check_keys(const nlohmann::json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed) ok = ok || it.key() == k;
        if (!ok) throw usage_error("unknown key '" + it.key() + "' in " + where);
    }
}

std::vector<std::string> tracked_statistics(const PowerStudyConfig& config) {
    std::vector<std::string> stats = {"Q", "U_s", "I_s", "R_s"};
    if (config.include_scaled_sum) stats.push_back("Q_s");
    return stats;
}

}  // namespace

PowerStudyConfig load_power_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw data_error("bad study configuration in '" + path + "': " + e.what());
    }

    PowerStudyConfig config;
    try {
        check_keys(j,
                   {"cases", "K", "sweep", "level", "power_replicates", "null_replicates", "seed",
                    "workers", "include_scaled_sum"},
                   "the study configuration");
        if (j.contains("cases")) {
            config.cases.clear();
            for (const auto& c : j.at("cases")) {
                check_keys(c, {"alternative", "n"}, "a study case");
                config.cases.push_back({c.at("alternative").get<std::string>(), c.at("n").get<int>()});
            }
        }
        if (j.contains("K")) config.K = j.at("K").get<int>();
        if (j.contains("sweep")) {
            const auto& s = j.at("sweep");
            check_keys(s, {"alternative", "n", "degrees"}, "the sweep block");
            if (s.contains("alternative")) config.sweep_alternative = s.at("alternative").get<std::string>();
            if (s.contains("n")) config.sweep_n = s.at("n").get<int>();
            if (s.contains("degrees")) config.sweep_degrees = s.at("degrees").get<std::vector<int>>();
        }
        if (j.contains("level")) config.level = j.at("level").get<double>();
        if (j.contains("power_replicates")) config.power_replicates = j.at("power_replicates").get<int>();
        if (j.contains("null_replicates")) config.null_replicates = j.at("null_replicates").get<int>();
        if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("workers")) config.workers = j.at("workers").get<int>();
        if (j.contains("include_scaled_sum")) config.include_scaled_sum = j.at("include_scaled_sum").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw usage_error("bad study configuration in '" + path + "': " + std::string(e.what()));
    }
    if (!(config.level > 0.0 && config.level < 1.0)) {
        throw usage_error("study level must be in (0, 1)");
    }
    if (config.power_replicates < 1 || config.null_replicates < 1) {
        throw usage_error("study replicate counts must be positive");
    }
    return config;
}

namespace {

PowerRow run_case(const NullFamily& family, const NullTable& table, const std::string& alternative,
                  int n, int K, const PowerStudyConfig& config) {
    BasisSet basis = build_basis(family, K);
    DecompositionConstants constants = decomposition_constants(family, basis);
    std::vector<std::string> stats = tracked_statistics(config);

    PowerRow row;
    row.alternative = alternative;
    row.n = n;
    row.K = K;
    std::map<std::string, int> rejections;
    for (const auto& s : stats) rejections[s] = 0;

    for (int rep = 0; rep < config.power_replicates; ++rep) {
        TestStatistics st;
        bool done = false;
        for (int attempt = 0; attempt < 100 && !done; ++attempt) {
            try {
                Eigen::MatrixXd X = sample_alternative(
                    alternative, n, config.seed,
                    static_cast<std::uint64_t>(rep) + 1000000ULL * attempt);
                EllipticalFit fit = fit_mle(X, family);
                st = compute_statistics(basis, constants, standardize(X, fit));
                done = true;
            } catch (const numeric_error&) {
                // Redraw this replicate.
            }
        }
        if (!done) throw numeric_error("power replicate failed numerically in 100 redraws");
        std::map<std::string, double> observed = {{"Q", st.Q},     {"U_s", st.U_s},
                                                  {"I_s", st.I_s}, {"R_s", st.R_s},
                                                  {"Q_s", st.Q_s}};
        for (const auto& s : stats) {
            double p = mc_pvalue(table.values.at(s), observed.at(s));
            if (p <= config.level) ++rejections[s];
        }
    }
    for (const auto& s : stats) {
        double p = static_cast<double>(rejections[s]) / config.power_replicates;
        row.rejection[s] = p;
        row.standard_error[s] = std::sqrt(p * (1.0 - p) / config.power_replicates);
    }
    return row;
}

// Null tables are shared between entries with the same size and degree, and
// their seeds derive only from (study seed, n, K) so separate invocations
// rebuild identical tables.
class TableCache {
  public:
    TableCache(const NullFamily& family, const PowerStudyConfig& config)
        : family_(family), config_(config) {}

    const NullTable& at(int n, int K) {
        auto it = tables_.find({n, K});
        if (it == tables_.end()) {
            std::uint64_t table_seed = mix_seed(config_.seed, 0x7ab1e5ULL, n, K);
            it = tables_
                     .emplace(std::make_pair(n, K),
                              build_null_table(family_, n, K, config_.null_replicates, table_seed,
                                               config_.workers))
                     .first;
            seeds_.push_back({n, K, table_seed});
        }
        return it->second;
    }

    const std::vector<NullTableSeed>& seeds() const { return seeds_; }

  private:
    const NullFamily& family_;
    const PowerStudyConfig& config_;
    std::map<std::pair<int, int>, NullTable> tables_;
    std::vector<NullTableSeed> seeds_;
};

}  // namespace

PowerStudyResult run_power_study(const PowerStudyConfig& config) {
    auto start = std::chrono::steady_clock::now();
    std::unique_ptr<NullFamily> family = make_family(FamilyId::mvn, 2);
    TableCache tables(*family, config);

    PowerStudyResult result;
    result.config = config;
    for (const auto& c : config.cases) {
        result.cases.push_back(
            run_case(*family, tables.at(c.n, config.K), c.alternative, c.n, config.K, config));
    }
    for (int k : config.sweep_degrees) {
        result.sweep.push_back(run_case(*family, tables.at(config.sweep_n, k),
                                        config.sweep_alternative, config.sweep_n, k, config));
    }
    result.table_seeds = tables.seeds();
    result.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<PowerRow> component_sweep(const PowerStudyConfig& config,
                                      const std::string& alternative, int n,
                                      const std::vector<int>& degrees) {
    std::unique_ptr<NullFamily> family = make_family(FamilyId::mvn, 2);
    TableCache tables(*family, config);
    std::vector<PowerRow> rows;
    for (int k : degrees) {
        rows.push_back(run_case(*family, tables.at(n, k), alternative, n, k, config));
    }
    return rows;
}

std::string format_power_table(const std::vector<PowerRow>& rows, const std::string& title) {
    std::ostringstream out;
    out << title << '\n';
    if (rows.empty()) return out.str();

    std::vector<std::string> stats;
    for (const auto& [name, rate] : rows.front().rejection) {
        (void)rate;
        stats.push_back(name);
    }
    out << "  " << std::left;
    out.width(20);
    out << "alternative";
    out << std::right;
    out.width(6);
    out << "n";
    out.width(4);
    out << "K";
    for (const auto& s : stats) {
        out.width(8);
        out << s;
    }
    out << '\n';
    for (const auto& row : rows) {
        out << "  " << std::left;
        out.width(20);
        out << row.alternative;
        out << std::right;
        out.width(6);
        out << row.n;
        out.width(4);
        out << row.K;
        out.setf(std::ios::fixed);
        out.precision(3);
        for (const auto& s : stats) {
            out.width(8);
            out << row.rejection.at(s);
        }
        out.unsetf(std::ios::fixed);
        out << '\n';
    }
    return out.str();
}

nlohmann::json power_study_json(const PowerStudyResult& result) {
    nlohmann::json j;
    j["config"] = {{"K", result.config.K},
                   {"level", result.config.level},
                   {"power_replicates", result.config.power_replicates},
                   {"null_replicates", result.config.null_replicates},
                   {"seed", result.config.seed},
                   {"scaling", kScalingConvention}};
    auto rows_json = [](const std::vector<PowerRow>& rows) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json r;
            r["alternative"] = row.alternative;
            r["n"] = row.n;
            r["K"] = row.K;
            r["rejection"] = row.rejection;
            r["standard_error"] = row.standard_error;
            arr.push_back(std::move(r));
        }
        return arr;
    };
    j["cases"] = rows_json(result.cases);
    j["sweep"] = rows_json(result.sweep);
    nlohmann::json seeds = nlohmann::json::array();
    for (const auto& s : result.table_seeds) {
        seeds.push_back({{"n", s.n}, {"K", s.K}, {"seed", s.seed}});
    }
    j["null_table_seeds"] = std::move(seeds);
    j["runtime_seconds"] = result.runtime_seconds;
    return j;
}

}  // namespace ellgof
