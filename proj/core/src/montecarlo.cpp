#include "ellgof/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <mutex>
#include <nlohmann/json.hpp>
#include <thread>

#include "ellgof/basis.hpp"
#include "ellgof/decomposition.hpp"
#include "ellgof/errors.hpp"
#include "ellgof/estimate.hpp"
#include "ellgof/rng.hpp"

namespace ellgof {

namespace {

std::string iso_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::tm tm_utc;
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::map<std::string, double> replicate_statistics(const TestStatistics& st) {
    std::map<std::string, double> out;
    out["Q"] = st.Q;
    out["U"] = st.U;
    out["I"] = st.I;
    out["R"] = st.R;
    out["Q_s"] = st.Q_s;
    out["U_s"] = st.U_s;
    out["I_s"] = st.I_s;
    out["R_s"] = st.R_s;
    out.insert(st.group_raw.begin(), st.group_raw.end());
    out.insert(st.group_scaled.begin(), st.group_scaled.end());
    return out;
}

}  // namespace

bool same_key(const NullTableKey& a, const NullTableKey& b) {
    bool shape_ok = (std::isnan(a.shape) && std::isnan(b.shape)) || a.shape == b.shape;
    return a.family == b.family && shape_ok && a.m == b.m && a.n == b.n && a.K == b.K &&
           a.k_min == b.k_min && a.scaling == b.scaling;
}

NullTableKey table_key(const NullFamily& family, int n, int K) {
    NullTableKey key;
    key.family = family.name();
    key.shape = family.shape();
    key.m = family.dimension();
    key.n = n;
    key.K = K;
    key.k_min = family.k_min();
    key.scaling = kScalingConvention;
    return key;
}

NullTable build_null_table(const NullFamily& family, int n, int K, int B, std::uint64_t seed,
                           int workers) {
    if (B < 100) throw usage_error("build_null_table: need at least 100 replicates");
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min(workers, B);

    BasisSet basis = build_basis(family, K);
    DecompositionConstants constants = decomposition_constants(family, basis);

    std::vector<std::map<std::string, double>> results(B);
    std::vector<int> attempts_used(B, 0);
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::string failure_message;
    std::mutex failure_mutex;

    auto worker = [&] {
        while (true) {
            int r = next.fetch_add(1);
            if (r >= B || failed.load()) return;
            bool done = false;
            try {
                for (int attempt = 0; attempt < 100 && !done; ++attempt) {
                    try {
                        std::mt19937_64 gen = substream(seed, static_cast<std::uint64_t>(r),
                                                        static_cast<std::uint64_t>(attempt));
                        Eigen::MatrixXd X = family.sample_standard(gen, n);
                        EllipticalFit fit = fit_mle(X, family);
                        Eigen::MatrixXd Z = standardize(X, fit);
                        results[r] = replicate_statistics(compute_statistics(basis, constants, Z));
                        attempts_used[r] = attempt;
                        done = true;
                    } catch (const numeric_error&) {
                        // Redraw this replicate from its next substream.
                    }
                }
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failed.store(true);
                failure_message = e.what();
                return;
            }
            if (!done) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failed.store(true);
                failure_message = "replicate " + std::to_string(r) +
                                  " failed numerically in 100 consecutive redraws";
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failed.load()) throw numeric_error("build_null_table: " + failure_message);

    NullTable table;
    table.key = table_key(family, n, K);
    table.seed = seed;
    table.replicates = B;
    table.created = iso_now();
    for (int r = 0; r < B; ++r) table.redraws += attempts_used[r];
    if (table.redraws * 100 > B) {
        table.warning = std::to_string(table.redraws) + " redraws over " + std::to_string(B) +
                        " replicates exceeds 1%; the fit may be fragile at this sample size";
    }

    for (const auto& [name, v0] : results[0]) {
        (void)v0;
        std::vector<double> column(B);
        for (int r = 0; r < B; ++r) {
            auto it = results[r].find(name);
            if (it == results[r].end()) {
                throw numeric_error("build_null_table: inconsistent statistic sets");
            }
            column[r] = it->second;
        }
        std::sort(column.begin(), column.end());
        table.values.emplace(name, std::move(column));
    }
    return table;
}

void write_null_table(const NullTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot write '" + path + "'");
    for (const auto& [name, column] : table.values) {
        out << "{\"statistic\":\"" << name << "\",\"values\":[";
        for (std::size_t i = 0; i < column.size(); ++i) {
            out << (i ? "," : "") << format_value(column[i]);
        }
        out << "]}\n";
    }
    if (!out) throw data_error("failed while writing '" + path + "'");
    out.close();

    nlohmann::json meta;
    meta["family"] = table.key.family;
    if (std::isnan(table.key.shape)) {
        meta["shape"] = nullptr;
    } else {
        meta["shape"] = table.key.shape;
    }
    meta["m"] = table.key.m;
    meta["n"] = table.key.n;
    meta["K"] = table.key.K;
    meta["k_min"] = table.key.k_min;
    meta["scaling"] = table.key.scaling;
    meta["replicates"] = table.replicates;
    meta["seed"] = table.seed;
    meta["redraws"] = table.redraws;
    if (!table.warning.empty()) meta["warning"] = table.warning;
    meta["created"] = table.created;
    std::ofstream metaout(path + ".meta.json");
    if (!metaout) throw data_error("cannot write '" + path + ".meta.json'");
    metaout << meta.dump(2) << '\n';
    if (!metaout) throw data_error("failed while writing '" + path + ".meta.json'");
}

NullTable read_null_table(const std::string& path) {
    std::ifstream metain(path + ".meta.json");
    if (!metain) throw data_error("cannot open '" + path + ".meta.json'");
    nlohmann::json meta;
    try {
        metain >> meta;
    } catch (const nlohmann::json::exception& e) {
        throw data_error("bad table metadata in '" + path + ".meta.json': " + e.what());
    }

    NullTable table;
    try {
        table.key.family = meta.at("family").get<std::string>();
        table.key.shape = meta.at("shape").is_null()
                              ? std::numeric_limits<double>::quiet_NaN()
                              : meta.at("shape").get<double>();
        table.key.m = meta.at("m").get<int>();
        table.key.n = meta.at("n").get<int>();
        table.key.K = meta.at("K").get<int>();
        table.key.k_min = meta.at("k_min").get<int>();
        table.key.scaling = meta.at("scaling").get<std::string>();
        table.replicates = meta.at("replicates").get<int>();
        table.seed = meta.at("seed").get<std::uint64_t>();
        table.redraws = meta.value("redraws", 0);
        table.warning = meta.value("warning", std::string());
        table.created = meta.value("created", std::string());
    } catch (const nlohmann::json::exception& e) {
        throw data_error("incomplete table metadata in '" + path + ".meta.json': " + e.what());
    }

    std::ifstream in(path);
    if (!in) throw data_error("cannot open '" + path + "'");
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json row;
        try {
            row = nlohmann::json::parse(line);
            std::string name = row.at("statistic").get<std::string>();
            std::vector<double> column = row.at("values").get<std::vector<double>>();
            std::sort(column.begin(), column.end());
            table.values.emplace(std::move(name), std::move(column));
        } catch (const nlohmann::json::exception& e) {
            throw data_error("bad table line " + std::to_string(lineno) + " in '" + path +
                             "': " + e.what());
        }
    }
    if (table.values.empty()) throw data_error("'" + path + "' holds no statistics");
    for (const auto& [name, column] : table.values) {
        if (static_cast<int>(column.size()) != table.replicates) {
            throw data_error("statistic '" + name + "' in '" + path +
                             "' does not match the declared replicate count");
        }
    }
    return table;
}

void require_key_match(const NullTableKey& table, const NullTableKey& wanted) {
    if (same_key(table, wanted)) return;
    auto show = [](const NullTableKey& k) {
        std::string s = k.family;
        if (!std::isnan(k.shape)) s += "(" + std::to_string(k.shape) + ")";
        s += " m=" + std::to_string(k.m) + " n=" + std::to_string(k.n) +
             " K=" + std::to_string(k.K) + " k_min=" + std::to_string(k.k_min) +
             " scaling=" + k.scaling;
        return s;
    };
    throw usage_error("null table mismatch: table is [" + show(table) + "], test needs [" +
                      show(wanted) + "]");
}

double mc_pvalue(const std::vector<double>& sorted_values, double observed) {
    if (sorted_values.empty()) throw usage_error("mc_pvalue: empty reference table");
    auto it = std::lower_bound(sorted_values.begin(), sorted_values.end(), observed);
    std::size_t count_ge = sorted_values.end() - it;
    return (1.0 + static_cast<double>(count_ge)) / (1.0 + static_cast<double>(sorted_values.size()));
}

double mc_quantile(const std::vector<double>& sorted_values, double p) {
    if (sorted_values.empty()) throw usage_error("mc_quantile: empty reference table");
    if (!(p >= 0.0 && p <= 1.0)) throw usage_error("mc_quantile: p must be in [0, 1]");
    double h = p * (static_cast<double>(sorted_values.size()) - 1.0);
    std::size_t lo = static_cast<std::size_t>(std::floor(h));
    std::size_t hi = std::min(lo + 1, sorted_values.size() - 1);
    double frac = h - static_cast<double>(lo);
    return sorted_values[lo] * (1.0 - frac) + sorted_values[hi] * frac;
}

}  // namespace ellgof
