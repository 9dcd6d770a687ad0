#include "ellgof/report.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "ellgof/errors.hpp"
#include "ellgof/pvalue.hpp"
#include "ellgof/version.hpp"

namespace ellgof {

namespace {

nlohmann::json vector_json(const Eigen::VectorXd& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

nlohmann::json matrix_json(const Eigen::MatrixXd& M) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < M.cols(); ++c) row.push_back(M(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

// An empty block has zero degrees of freedom and a statistic that is
// identically zero, so it carries no evidence against the null: p = 1.
double block_p(double value, int dof) {
    if (dof == 0) return 1.0;
    return chi_square_sf(value, static_cast<double>(dof));
}

nlohmann::json statistic_entry(double value, int dof, const double* p_mc) {
    nlohmann::json e;
    e["value"] = value;
    e["dof"] = dof;
    e["p_asymptotic"] = block_p(value, dof);
    if (p_mc != nullptr) {
        e["p_montecarlo"] = *p_mc;
    } else {
        e["p_montecarlo"] = nullptr;
    }
    return e;
}

}  // namespace

TestOutcome run_test(const Eigen::MatrixXd& X, const NullFamily& family,
                     const TestOptions& options) {
    if (!(options.level > 0.0 && options.level < 1.0)) {
        throw usage_error("run_test: level must be in (0, 1)");
    }
    const int n = static_cast<int>(X.rows());
    const int m = family.dimension();

    TestOutcome out;
    out.fit = fit_mle(X, family);
    Eigen::MatrixXd Z = standardize(X, out.fit);

    if (options.select) {
        out.selection = select_K(family, Z, options.d_n);
        out.K = out.selection->K_hat;
    } else {
        if (options.K < family.k_min()) {
            throw usage_error("run_test: K must be at least the family's smallest retained degree");
        }
        out.K = options.K;
    }

    BasisSet basis = build_basis(family, out.K);
    DecompositionConstants constants = decomposition_constants(family, basis);
    out.statistics = compute_statistics(basis, constants, Z);
    const TestStatistics& st = out.statistics;

    // Monte Carlo reference: a caller-supplied table (key-checked) or one
    // built on the spot.
    const NullTable* table = options.null_table;
    NullTable built;
    if (table != nullptr) {
        require_key_match(table->key, table_key(family, n, out.K));
    } else if (options.mc_replicates > 0) {
        built = build_null_table(family, n, out.K, options.mc_replicates, options.seed,
                                 options.workers);
        table = &built;
    }

    double p_mc[4] = {0, 0, 0, 0};
    bool have_mc = table != nullptr;
    if (have_mc) {
        p_mc[0] = mc_pvalue(table->values.at("Q"), st.Q);
        p_mc[1] = mc_pvalue(table->values.at("U_s"), st.U_s);
        p_mc[2] = mc_pvalue(table->values.at("I_s"), st.I_s);
        p_mc[3] = mc_pvalue(table->values.at("R_s"), st.R_s);
    }

    nlohmann::json rep;
    rep["version"] = kVersion;
    rep["family"] = family.name();
    if (std::isnan(family.shape())) {
        rep["shape"] = nullptr;
    } else {
        rep["shape"] = family.shape();
    }
    rep["m"] = m;
    rep["n"] = n;
    rep["K"] = out.K;
    rep["k_min"] = family.k_min();
    rep["level"] = options.level;
    rep["scaling"] = kScalingConvention;

    rep["fit"] = {{"mu", vector_json(out.fit.mu)},
                  {"V", matrix_json(out.fit.V)},
                  {"iterations", out.fit.iterations},
                  {"gap", out.fit.gap}};

    rep["dof"] = {{"Q", st.dof.Q}, {"U", st.dof.U}, {"I", st.dof.I}, {"R", st.dof.R}};

    nlohmann::json stats;
    stats["Q"] = statistic_entry(st.Q, st.dof.Q, have_mc ? &p_mc[0] : nullptr);
    stats["U_scaled"] = statistic_entry(st.U_s, st.dof.U, have_mc ? &p_mc[1] : nullptr);
    stats["I_scaled"] = statistic_entry(st.I_s, st.dof.I, have_mc ? &p_mc[2] : nullptr);
    stats["R_scaled"] = statistic_entry(st.R_s, st.dof.R, have_mc ? &p_mc[3] : nullptr);
    stats["raw_components"] = {{"U", st.U}, {"I", st.I}, {"R", st.R}};
    stats["scaled_total"] = st.Q_s;
    nlohmann::json groups;
    for (const auto& [k, v] : st.group_raw) groups[k] = v;
    for (const auto& [k, v] : st.group_scaled) groups[k] = v;
    stats["groups"] = std::move(groups);
    rep["statistics"] = std::move(stats);

    if (have_mc) {
        rep["montecarlo"] = {{"replicates", table->replicates},
                             {"seed", table->seed},
                             {"redraws", table->redraws},
                             {"source", options.null_table != nullptr ? "file" : "built"}};
    } else {
        rep["montecarlo"] = nullptr;
    }

    if (out.selection) {
        const SelectionResult& sel = *out.selection;
        rep["selection"] = {{"d_n", options.d_n},
                            {"candidates", sel.candidates},
                            {"Q", sel.Q_values},
                            {"penalized", sel.penalized},
                            {"K_hat", sel.K_hat},
                            // Informational only: the Monte Carlo reference
                            // above is the default law for the selected-degree
                            // statistic.
                            {"informational_chi_square",
                             {{"dof", m},
                              {"p", chi_square_sf(st.Q, static_cast<double>(m))}}}};
    } else {
        rep["selection"] = nullptr;
    }

    // Component flags use the Monte Carlo p-value when available, otherwise
    // the asymptotic one; wording identifies the departure each block tracks.
    nlohmann::json diags = nlohmann::json::array();
    double pu = have_mc ? p_mc[1] : block_p(st.U_s, st.dof.U);
    double pr = have_mc ? p_mc[3] : block_p(st.R_s, st.dof.R);
    double pi = have_mc ? p_mc[2] : block_p(st.I_s, st.dof.I);
    if (pu < options.level) diags.push_back("departures from the uniformity of U");
    if (pr < options.level) diags.push_back("distribution of the radius R");
    if (pi < options.level) diags.push_back("correlations between U and R");
    rep["diagnostics"] = std::move(diags);

    if (options.high_degree_report && family.k_min() < 3 && out.K >= 3) {
        BasisSet high = build_basis(family, out.K, 3);
        DecompositionConstants hc = decomposition_constants(family, high);
        TestStatistics hst = compute_statistics(high, hc, Z);
        rep["high_degree_only"] = {{"k_min", 3},
                                   {"Q", hst.Q},
                                   {"U", hst.U},
                                   {"I", hst.I},
                                   {"R", hst.R},
                                   {"dof", {{"Q", hst.dof.Q},
                                            {"U", hst.dof.U},
                                            {"I", hst.dof.I},
                                            {"R", hst.dof.R}}}};
    } else {
        rep["high_degree_only"] = nullptr;
    }

    out.report = std::move(rep);
    return out;
}

nlohmann::json basis_dump_json(const NullFamily& family, int K) {
    BasisSet basis = build_basis(family, K);

    nlohmann::json dump;
    dump["family"] = family.name();
    if (std::isnan(family.shape())) {
        dump["shape"] = nullptr;
    } else {
        dump["shape"] = family.shape();
    }
    dump["m"] = basis.m;
    dump["K"] = basis.K;
    dump["k_min"] = basis.k_min;
    dump["count"] = basis.total;

    nlohmann::json radial = nlohmann::json::array();
    nlohmann::json functions = nlohmann::json::array();
    for (int gi = 0; gi < static_cast<int>(basis.groups.size()); ++gi) {
        const BasisGroup& g = basis.groups[gi];
        radial.push_back({{"k", g.k},
                          {"j", g.j},
                          {"kappa", g.kappa},
                          {"coefficients", g.radial.coef}});
        for (int l = 1; l <= g.harmonic_count; ++l) {
            nlohmann::json terms = nlohmann::json::array();
            for (const PiTerm& t : flatten_function(basis, gi, l)) {
                terms.push_back({{"rpow", t.rpow}, {"exponents", t.exponents}, {"coef", t.coef}});
            }
            functions.push_back({{"k", g.k},
                                 {"j", g.j},
                                 {"l", l},
                                 {"block", block_name(g.block)},
                                 {"terms", std::move(terms)}});
        }
    }
    dump["radial"] = std::move(radial);
    dump["functions"] = std::move(functions);
    return dump;
}

}  // namespace ellgof
