// Acceptance gate: reproduces every published target the library claims —
// the worked-example statistics and p-values on the bundled marks data, the
// printed basis tables and family constants, the classical skewness/kurtosis
// identities, invariance properties, null calibration, desk-scale power
// bands, and the always-on property suite. One line per check; the process
// fails when any check other than the documented published-value
// inconsistency (see the criterion-1 notes below) fails.

#include <Eigen/Core>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ellgof/alternatives.hpp"
#include "ellgof/basis.hpp"
#include "ellgof/combinatorics.hpp"
#include "ellgof/decomposition.hpp"
#include "ellgof/estimate.hpp"
#include "ellgof/family.hpp"
#include "ellgof/harmonics.hpp"
#include "ellgof/harness.hpp"
#include "ellgof/io.hpp"
#include "ellgof/montecarlo.hpp"
#include "ellgof/report.hpp"
#include "ellgof/rng.hpp"
#include "expected_basis_tables.hpp"
#include "expected_family_constants.hpp"
#include "support/test_support.hpp"

#ifndef ELLGOF_DATA_DIR
#error "ELLGOF_DATA_DIR must be defined by the build"
#endif

namespace {

int g_pass = 0;
int g_fail = 0;
int g_known = 0;

void check(bool ok, const std::string& label) {
    if (ok) {
        ++g_pass;
        std::printf("  PASS  %s\n", label.c_str());
    } else {
        ++g_fail;
        std::printf("  FAIL  %s\n", label.c_str());
    }
}

void check_near(double got, double want, double tol, const std::string& label) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s: got %.10g, want %.10g +/- %.3g", label.c_str(), got,
                  want, tol);
    check(std::abs(got - want) <= tol, buf);
}

// A check expected to fail because the published decimal it targets is
// internally inconsistent; it is reported honestly but does not gate.
void check_known_discrepancy(bool ok, const std::string& label, const std::string& analysis) {
    if (ok) {
        ++g_pass;
        std::printf("  PASS  %s (published value matched after all)\n", label.c_str());
    } else {
        ++g_known;
        std::printf("  FAIL (known published inconsistency)  %s\n        %s\n", label.c_str(),
                    analysis.c_str());
    }
}

void banner(int criterion, const std::string& text) {
    std::printf("criterion %d: %s\n", criterion, text.c_str());
}

Eigen::MatrixXd load_marks() {
    std::string path = std::string(ELLGOF_DATA_DIR) + "/exam_marks_vas.csv";
    return ellgof::read_csv(path).data;
}

// ---------------------------------------------------------------------------
// Criterion 1: worked-example reproduction on the bundled marks data.
// ---------------------------------------------------------------------------
void criterion_1() {
    banner(1, "bundled marks data reproduces the published statistics and p-values");
    Eigen::MatrixXd X = load_marks();
    auto fam = ellgof::make_family("mvn", 3);
    ellgof::TestOptions opts;
    opts.K = 5;
    opts.mc_replicates = 20000;
    opts.seed = 20260816;
    ellgof::TestOutcome outcome = ellgof::run_test(X, *fam, opts);
    const ellgof::TestStatistics& st = outcome.statistics;

    check_near(st.Q, 98.62, 0.05, "global statistic Q at degree 5");
    check_near(st.U_s, 37.38, 0.05, "scaled directional component U");
    check_near(st.I_s, 33.14, 0.05, "scaled cross component I");
    check_near(st.R_s, 0.77, 0.02, "scaled radial component R");
    check(st.dof.Q == 46 && st.dof.U == 27 && st.dof.I == 18 && st.dof.R == 1,
          "degrees of freedom are exactly 46 / 27 / 18 / 1");

    const auto& stats = outcome.report.at("statistics");
    double pU = stats.at("U_scaled").at("p_asymptotic").get<double>();
    double pI = stats.at("I_scaled").at("p_asymptotic").get<double>();
    double pR = stats.at("R_scaled").at("p_asymptotic").get<double>();
    double pQ = stats.at("Q").at("p_asymptotic").get<double>();
    check_near(pU, 0.088, 0.002, "asymptotic p-value of U");
    check_near(pI, 0.016, 0.002, "asymptotic p-value of I");
    check_near(pR, 0.381, 0.002, "asymptotic p-value of R");
    {
        char analysis[360];
        std::snprintf(analysis, sizeof(analysis),
                      "computed %.4g; the printed decimal 0.004 contradicts the printed "
                      "statistic/dof pair it accompanies: the chi-square(46) survival value at "
                      "98.62 is 1.06e-05. Every other entry of the same table row matches.",
                      pQ);
        check_known_discrepancy(std::abs(pQ - 0.004) <= 0.002,
                                "asymptotic p-value of Q vs printed 0.004 +/- 0.002", analysis);
    }

    double mQ = stats.at("Q").at("p_montecarlo").get<double>();
    double mU = stats.at("U_scaled").at("p_montecarlo").get<double>();
    double mI = stats.at("I_scaled").at("p_montecarlo").get<double>();
    double mR = stats.at("R_scaled").at("p_montecarlo").get<double>();
    check_near(mQ, 0.027, 0.01, "Monte Carlo p-value of Q (20000 replicates)");
    check_near(mU, 0.163, 0.01, "Monte Carlo p-value of U (20000 replicates)");
    check_near(mI, 0.028, 0.01, "Monte Carlo p-value of I (20000 replicates)");
    check_near(mR, 0.466, 0.01, "Monte Carlo p-value of R (20000 replicates)");
}

// ---------------------------------------------------------------------------
// Criterion 2: basis tables coefficient for coefficient.
// ---------------------------------------------------------------------------
std::map<std::pair<int, int>, std::vector<ellgof_test::TermMap>> reference_groups(
    const ellgof_test::RefEntry* entries, std::size_t entry_count,
    const ellgof_test::RefTerm* terms, int m) {
    std::map<std::pair<int, int>, std::vector<ellgof_test::TermMap>> out;
    for (std::size_t e = 0; e < entry_count; ++e) {
        const auto& entry = entries[e];
        std::vector<ellgof::PiTerm> fn;
        for (std::size_t t = entry.first; t < entry.first + entry.count; ++t) {
            ellgof::PiTerm pt;
            pt.rpow = terms[t].rpow;
            pt.exponents.assign(terms[t].e.begin(), terms[t].e.begin() + m);
            pt.coef = terms[t].c;
            fn.push_back(std::move(pt));
        }
        ellgof::canonicalize_sign(fn);
        out[{entry.k, entry.j}].push_back(ellgof_test::term_map(fn));
    }
    return out;
}

void match_basis_table(int m, const ellgof_test::RefEntry* entries, std::size_t entry_count,
                       const ellgof_test::RefTerm* terms) {
    auto fam = ellgof::make_family("mvn", m);
    ellgof::BasisSet basis = ellgof::build_basis(*fam, 5);
    auto refs = reference_groups(entries, entry_count, terms, m);

    bool all = true;
    double worst_overall = 0.0;
    std::size_t matched_functions = 0;
    for (const auto& [key, ref_fns] : refs) {
        const ellgof::BasisGroup* group = basis.find(key.first, key.second);
        if (group == nullptr || group->harmonic_count != static_cast<int>(ref_fns.size())) {
            all = false;
            continue;
        }
        std::vector<ellgof_test::TermMap> lib_fns;
        int gidx = static_cast<int>(group - basis.groups.data());
        for (int l = 1; l <= group->harmonic_count; ++l) {
            auto fn = ellgof::flatten_function(basis, gidx, l);
            ellgof::canonicalize_sign(fn);
            lib_fns.push_back(ellgof_test::term_map(fn));
        }
        double worst = 0.0;
        if (!ellgof_test::match_sets(ref_fns, lib_fns, 1e-10, &worst)) {
            all = false;
        } else {
            worst_overall = std::max(worst_overall, worst);
            matched_functions += ref_fns.size();
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "dimension %d: %zu functions match bijectively after sign canonicalization "
                  "(worst coefficient gap %.2e, tolerance 1e-10)",
                  m, matched_functions, worst_overall);
    check(all && matched_functions == static_cast<std::size_t>(basis.total), buf);
}

void criterion_2() {
    banner(2, "published degree <= 5 basis tables reproduce coefficient for coefficient");
    match_basis_table(2, ellgof_test::kRefEntriesM2, std::size(ellgof_test::kRefEntriesM2),
                      ellgof_test::kRefTermsM2);
    match_basis_table(3, ellgof_test::kRefEntriesM3, std::size(ellgof_test::kRefEntriesM3),
                      ellgof_test::kRefTermsM3);
}

// ---------------------------------------------------------------------------
// Criterion 3: printed family constants.
// ---------------------------------------------------------------------------
double radial_table_gap(const ellgof::NullFamily& fam, const ellgof_test::RefRadial* ref,
                        std::size_t count) {
    std::vector<double> mom(12);
    for (int t = 0; t < 12; ++t) mom[t] = fam.radial_moment(t);
    double worst = 0.0;
    for (std::size_t idx = 0; idx < count; ++idx) {
        ellgof::RadialPolynomial s = ellgof::radial_polynomial(mom, ref[idx].j, ref[idx].i);
        for (int t = 0; t <= ref[idx].j; ++t)
            worst = std::max(worst, std::abs(s.coef[t] - ref[idx].coef[t]));
    }
    return worst;
}

double constants_gap(const ellgof::NullFamily& fam, const ellgof_test::RefFamilyConstants& ref) {
    ellgof::BasisSet basis = ellgof::build_basis(fam, 5);
    ellgof::DecompositionConstants cons = ellgof::decomposition_constants(fam, basis);
    double worst = std::abs(cons.sigma1 - ref.sigma1);
    worst = std::max(worst, std::abs(cons.sigma2 - ref.sigma2));
    worst = std::max(worst, std::abs(cons.d0 - ref.d0));
    worst = std::max(worst, std::abs(cons.d1 - ref.d1));
    worst = std::max(worst, std::abs(cons.d2 - ref.d2));
    for (int i = 0; i < 2; ++i) worst = std::max(worst, std::abs(cons.c0(i) - ref.c0[i]));
    for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(cons.c1(i) - ref.c1[i]));
    for (int i = 0; i < 2; ++i) worst = std::max(worst, std::abs(cons.c2(i) - ref.c2[i]));
    return worst;
}

void criterion_3() {
    banner(3, "printed family constants (radial tables, sigmas, correction vectors)");
    using namespace ellgof_test;

    auto laplace = ellgof::make_family("laplace", 2);
    double lap_radial = radial_table_gap(*laplace, kPublishedRadialLaplaceM2,
                                         std::size(kPublishedRadialLaplaceM2));
    check(lap_radial <= 1e-4, "exponential-tail family: 11 printed radial polynomials within "
                              "1e-4 (worst gap " + std::to_string(lap_radial) + ")");
    {
        ellgof::BasisSet basis = ellgof::build_basis(*laplace, 5);
        auto cons = ellgof::decomposition_constants(*laplace, basis);
        check(std::abs(cons.sigma1 - 1.0) <= 1e-4, "exponential-tail family: sigma1 equals 1");
        double worst = 0.0;
        double s0 = std::sqrt(cons.d0), s1 = std::sqrt(cons.d1), s2 = std::sqrt(cons.d2);
        for (int i = 0; i < 2; ++i)
            worst = std::max(worst, std::abs(s0 * cons.c0(i) - kPublishedSd0c0LaplaceM2[i]));
        for (int i = 0; i < 3; ++i)
            worst = std::max(worst, std::abs(s1 * cons.c1(i) - kPublishedSd1c1LaplaceM2[i]));
        for (int i = 0; i < 2; ++i)
            worst = std::max(worst, std::abs(s2 * cons.c2(i) - kPublishedSd2c2LaplaceM2[i]));
        check(worst <= 1e-4, "exponential-tail family: three scaled correction vectors within "
                             "1e-4 (worst gap " + std::to_string(worst) + ")");
    }

    auto logistic = ellgof::make_family("logistic", 2);
    double log_radial = radial_table_gap(*logistic, kPublishedRadialLogisticM2,
                                         std::size(kPublishedRadialLogisticM2));
    check(log_radial <= 1e-4, "logistic family: 11 printed radial polynomials within 1e-4 "
                              "(worst gap " + std::to_string(log_radial) + ")");
    {
        ellgof::BasisSet basis = ellgof::build_basis(*logistic, 5);
        auto cons = ellgof::decomposition_constants(*logistic, basis);
        check_near(cons.sigma1, kPublishedSigma1LogisticM2, 1e-4, "logistic family: sigma1");
        check_near(cons.sigma2, kPublishedSigma2LogisticM2, 1e-4, "logistic family: sigma2");
        double worst = 0.0;
        double s0 = std::sqrt(cons.d0), s1 = std::sqrt(cons.d1), s2 = std::sqrt(cons.d2);
        for (int i = 0; i < 2; ++i)
            worst = std::max(worst, std::abs(s0 * cons.c0(i) - kPublishedSd0c0LogisticM2[i]));
        for (int i = 0; i < 3; ++i)
            worst = std::max(worst, std::abs(s1 * cons.c1(i) - kPublishedSd1c1LogisticM2[i]));
        for (int i = 0; i < 2; ++i)
            worst = std::max(worst, std::abs(s2 * cons.c2(i) - kPublishedSd2c2LogisticM2[i]));
        check(worst <= 1e-4, "logistic family: three scaled correction vectors within 1e-4 "
                             "(worst gap " + std::to_string(worst) + ")");
    }

    struct P2 {
        double shape;
        int m;
        const ellgof_test::RefFamilyConstants* ref;
    };
    for (const P2& p : {P2{2.0, 2, &kConstPearson2A2M2}, P2{5.0, 2, &kConstPearson2A5M2},
                        P2{2.0, 3, &kConstPearson2A2M3}, P2{5.0, 3, &kConstPearson2A5M3}}) {
        auto fam = ellgof::make_family("pearson2", p.m, p.shape);
        double gap = constants_gap(*fam, *p.ref);
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "bounded-support family, exponent %.0f, dimension %d: constants match the "
                      "exact rational values within 1e-8 (worst gap %.2e)",
                      p.shape, p.m, gap);
        check(gap <= 1e-8, buf);
    }
}

// ---------------------------------------------------------------------------
// Criterion 4: classical skewness/kurtosis identities.
// ---------------------------------------------------------------------------
void criterion_4() {
    banner(4, "degree-3 and degree-4 statistics reduce to the classical "
              "skewness/kurtosis measures on 50 random datasets");
    std::mt19937_64 gen = ellgof::substream(20260816, 44);
    double worst_skew = 0.0, worst_kurt = 0.0;
    bool ok = true;
    for (int rep = 0; rep < 50; ++rep) {
        int m = rep % 2 == 0 ? 2 : 3;
        const int n = 200;
        Eigen::MatrixXd X = ellgof_test::gaussian_data(n, m, gen);
        X.col(0) *= 1.6;
        X.col(m - 1).array() += 0.7;

        auto fam = ellgof::make_family("mvn", m);
        Eigen::MatrixXd Z = ellgof::standardize(X, ellgof::fit_mle(X, *fam));
        double b1 = ellgof_test::skewness_double_sum(Z);
        double b2 = ellgof_test::kurtosis_mean(Z);

        ellgof::BasisSet basis3 = ellgof::build_basis(*fam, 3);
        auto cons3 = ellgof::decomposition_constants(*fam, basis3);
        double q3 = ellgof::compute_statistics(basis3, cons3, Z).Q;
        double want3 = n * b1 / 6.0;
        double rel3 = std::abs(q3 - want3) / std::max(1.0, std::abs(want3));
        worst_skew = std::max(worst_skew, rel3);

        ellgof::BasisSet basis4 = ellgof::build_basis(*fam, 4);
        auto cons4 = ellgof::decomposition_constants(*fam, basis4);
        double r4 = ellgof::compute_statistics(basis4, cons4, Z).group_raw.at("C2_4_2");
        double gap = b2 - m * (m + 2.0);
        double want4 = n * gap * gap / (8.0 * m * (m + 2.0));
        double rel4 = std::abs(r4 - want4) / std::max(1.0, std::abs(want4));
        worst_kurt = std::max(worst_kurt, rel4);

        ok = ok && rel3 <= 1e-8 && rel4 <= 1e-8;
    }
    char buf[220];
    std::snprintf(buf, sizeof(buf),
                  "50 datasets (dimensions 2 and 3, n = 200): worst relative gap %.2e for the "
                  "skewness identity, %.2e for the kurtosis identity (tolerance 1e-8)",
                  worst_skew, worst_kurt);
    check(ok, buf);
}

// ---------------------------------------------------------------------------
// Criterion 5: invariance.
// ---------------------------------------------------------------------------
double affine_invariance_gap(const ellgof::NullFamily& fam, const Eigen::MatrixXd& X, int maps,
                             std::mt19937_64& gen) {
    auto stats = [&](const Eigen::MatrixXd& D) {
        ellgof::BasisSet basis = ellgof::build_basis(fam, 5);
        auto cons = ellgof::decomposition_constants(fam, basis);
        Eigen::MatrixXd Z = ellgof::standardize(D, ellgof::fit_mle(D, fam));
        return ellgof::compute_statistics(basis, cons, Z);
    };
    ellgof::TestStatistics base = stats(X);
    double worst = 0.0;
    for (int rep = 0; rep < maps; ++rep) {
        Eigen::MatrixXd A;
        Eigen::VectorXd b;
        ellgof_test::random_affine(static_cast<int>(X.cols()), gen, A, b);
        ellgof::TestStatistics other = stats(ellgof_test::apply_affine(X, A, b));
        auto gap = [&](double x, double y) {
            return std::abs(x - y) / std::max(1.0, std::max(std::abs(x), std::abs(y)));
        };
        worst = std::max({worst, gap(base.Q, other.Q), gap(base.U, other.U),
                          gap(base.I, other.I), gap(base.R, other.R), gap(base.Q_s, other.Q_s),
                          gap(base.U_s, other.U_s), gap(base.I_s, other.I_s),
                          gap(base.R_s, other.R_s)});
    }
    return worst;
}

void criterion_5() {
    banner(5, "statistics are invariant to affine maps and to orthogonal recombination "
              "inside degree blocks");
    std::mt19937_64 gen = ellgof::substream(20260816, 55);
    {
        auto fam2 = ellgof::make_family("mvn", 2);
        Eigen::MatrixXd X2 = fam2->sample_standard(gen, 150);
        double gap2 = affine_invariance_gap(*fam2, X2, 20, gen);
        auto fam3 = ellgof::make_family("mvn", 3);
        Eigen::MatrixXd X3 = fam3->sample_standard(gen, 130);
        double gap3 = affine_invariance_gap(*fam3, X3, 20, gen);
        char buf[180];
        std::snprintf(buf, sizeof(buf),
                      "closed-form fit: 20 random affine maps per dataset, worst relative "
                      "change %.2e (tolerance 1e-8)",
                      std::max(gap2, gap3));
        check(std::max(gap2, gap3) <= 1e-8, buf);
    }
    {
        auto laplace = ellgof::make_family("laplace", 2);
        Eigen::MatrixXd Xl = laplace->sample_standard(gen, 150);
        double gap_l = affine_invariance_gap(*laplace, Xl, 20, gen);
        auto logistic = ellgof::make_family("logistic", 2);
        Eigen::MatrixXd Xg = logistic->sample_standard(gen, 150);
        double gap_g = affine_invariance_gap(*logistic, Xg, 20, gen);
        char buf[180];
        std::snprintf(buf, sizeof(buf),
                      "iterative fits: 20 random affine maps per dataset, worst relative "
                      "change %.2e (tolerance 1e-6)",
                      std::max(gap_l, gap_g));
        check(std::max(gap_l, gap_g) <= 1e-6, buf);
    }
    {
        double worst = 0.0;
        for (const char* name : {"mvn", "laplace"}) {
            auto fam = ellgof::make_family(name, 2);
            ellgof::BasisSet basis = ellgof::build_basis(*fam, 5);
            auto cons = ellgof::decomposition_constants(*fam, basis);
            Eigen::MatrixXd X = fam->sample_standard(gen, 160);
            Eigen::MatrixXd Z = ellgof::standardize(X, ellgof::fit_mle(X, *fam));
            ellgof::TestStatistics plain = ellgof::compute_statistics(basis, cons, Z);
            for (int rep = 0; rep < 5; ++rep) {
                ellgof::BasisSet mixed = basis;
                for (const auto& group : basis.groups) {
                    int e = group.harmonic_count;
                    if (e < 2) continue;
                    Eigen::MatrixXd O = ellgof_test::random_orthogonal(e, gen);
                    std::vector<std::map<int, double>> combos(e);
                    for (int lnew = 0; lnew < e; ++lnew)
                        for (int lold = 0; lold < e; ++lold)
                            for (const auto& [mono, coef] : basis.fn_terms[group.offset + lold])
                                combos[lnew][mono] += O(lnew, lold) * coef;
                    for (int lnew = 0; lnew < e; ++lnew)
                        mixed.fn_terms[group.offset + lnew].assign(combos[lnew].begin(),
                                                                   combos[lnew].end());
                }
                ellgof::TestStatistics other = ellgof::compute_statistics(mixed, cons, Z);
                auto gap = [&](double x, double y) {
                    return std::abs(x - y) / std::max(1.0, std::max(std::abs(x), std::abs(y)));
                };
                worst = std::max({worst, gap(plain.Q, other.Q), gap(plain.U_s, other.U_s),
                                  gap(plain.I_s, other.I_s), gap(plain.R_s, other.R_s)});
            }
        }
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "orthogonal recombination inside every multi-function group leaves all "
                      "statistics unchanged (worst relative change %.2e, tolerance 1e-10)",
                      worst);
        check(worst <= 1e-10, buf);
    }
}

// ---------------------------------------------------------------------------
// Criterion 6: null calibration at the 5% level.
// ---------------------------------------------------------------------------
void criterion_6() {
    banner(6, "null rejection rates sit inside the binomial three-sigma band "
              "[3.2%, 7.1%] (dimension 2, n = 400, degree 5, 2000-replicate table, "
              "1000 fresh datasets)");
    auto fam = ellgof::make_family("mvn", 2);
    const int n = 400, K = 5;
    ellgof::NullTable table = ellgof::build_null_table(*fam, n, K, 2000, 606, 0);
    ellgof::BasisSet basis = ellgof::build_basis(*fam, K);
    auto cons = ellgof::decomposition_constants(*fam, basis);

    std::map<std::string, int> rejections;
    const int fresh = 1000;
    for (int r = 0; r < fresh; ++r) {
        std::mt19937_64 gen = ellgof::substream(ellgof::mix_seed(606, 0xFE11), r);
        Eigen::MatrixXd X = fam->sample_standard(gen, n);
        Eigen::MatrixXd Z = ellgof::standardize(X, ellgof::fit_mle(X, *fam));
        ellgof::TestStatistics st = ellgof::compute_statistics(basis, cons, Z);
        if (ellgof::mc_pvalue(table.values.at("Q"), st.Q) <= 0.05) rejections["Q"]++;
        if (ellgof::mc_pvalue(table.values.at("U_s"), st.U_s) <= 0.05) rejections["U_s"]++;
        if (ellgof::mc_pvalue(table.values.at("I_s"), st.I_s) <= 0.05) rejections["I_s"]++;
        if (ellgof::mc_pvalue(table.values.at("R_s"), st.R_s) <= 0.05) rejections["R_s"]++;
    }
    const char* labels[4] = {"Q", "U_s", "I_s", "R_s"};
    const char* names[4] = {"global statistic", "directional component", "cross component",
                            "radial component"};
    for (int i = 0; i < 4; ++i) {
        double rate = rejections[labels[i]] / static_cast<double>(fresh);
        char buf[140];
        std::snprintf(buf, sizeof(buf), "%s rejects %.1f%% of fresh null datasets", names[i],
                      100.0 * rate);
        check(rate >= 0.032 && rate <= 0.071, buf);
    }
}

// ---------------------------------------------------------------------------
// Criteria 7 and 8: desk-scale power bands and the power-by-degree sweep.
// ---------------------------------------------------------------------------
void criteria_7_and_8() {
    banner(7, "desk-scale power table with 500 replicates per case");
    ellgof::PowerStudyConfig config;  // the published four cases at K = 5
    config.power_replicates = 500;
    config.null_replicates = 2000;
    config.seed = 20260816;
    config.workers = 0;
    config.sweep_alternative = "khintchine";
    config.sweep_n = 400;
    config.sweep_degrees = {3, 4, 5, 6};
    ellgof::PowerStudyResult result = ellgof::run_power_study(config);

    std::map<std::pair<std::string, int>, const ellgof::PowerRow*> rows;
    for (const auto& row : result.cases) rows[{row.alternative, row.n}] = &row;

    auto rate = [&](const std::string& alt, int n, const char* stat) {
        return rows.at({alt, n})->rejection.at(stat);
    };
    auto band = [&](const std::string& alt, int n, const char* stat, double lo, double hi,
                    const std::string& label) {
        double p = rate(alt, n, stat);
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s: %.3f in [%.2f, %.2f]", label.c_str(), p, lo, hi);
        check(p >= lo && p <= hi, buf);
    };

    band("khintchine", 400, "U_s", 0.90, 1.0, "angular mixture, n=400: directional power");
    band("khintchine", 400, "I_s", 0.01, 0.12, "angular mixture, n=400: cross power stays small");
    band("khintchine", 400, "R_s", 0.01, 0.12, "angular mixture, n=400: radial power stays small");
    band("contaminated_mvn", 400, "R_s", 0.01, 0.10,
         "contaminated normal, n=400: radial power stays small");
    band("contaminated_mvn", 400, "I_s", 0.30, 1.0,
         "contaminated normal, n=400: cross power engages");
    band("laplace_type", 75, "R_s", 0.12, 1.0, "heavy-tail mixture, n=75: radial power engages");
    band("laplace_type", 75, "I_s", 0.0, 0.15,
         "heavy-tail mixture, n=75: cross power stays small");
    band("power_exp_2", 100, "R_s", 0.85, 1.0, "light-tail law, n=100: radial power dominates");
    band("power_exp_2", 100, "Q", 0.0, 0.02,
         "light-tail law, n=100: the omnibus statistic stays blind");

    banner(8, "power concentrates at the right degree in the sweep");
    std::map<int, const ellgof::PowerRow*> sweep;
    for (const auto& row : result.sweep) sweep[row.K] = &row;
    auto sweep_band = [&](int K, const char* stat, double lo, double hi,
                          const std::string& label) {
        double p = sweep.at(K)->rejection.at(stat);
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s: %.3f in [%.2f, %.2f]", label.c_str(), p, lo, hi);
        check(p >= lo && p <= hi, buf);
    };
    sweep_band(3, "U_s", 0.0, 0.10, "degree 3 sees no directional signal");
    sweep_band(4, "U_s", 0.90, 1.0, "degree 4 captures the directional signal");
    sweep_band(5, "I_s", 0.0, 0.10, "cross component stays quiet at degree 5");
    sweep_band(6, "I_s", 0.40, 1.0, "cross component wakes at degree 6");
}

// ---------------------------------------------------------------------------
// Criterion 9: always-on property suite.
// ---------------------------------------------------------------------------
double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
    double h = (b - a) / intervals;
    double total = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) total += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return total * h / 3.0;
}

double radial_orthonormality_gap(const ellgof::NullFamily& fam,
                                 const std::function<double(double)>& phi, double y_max) {
    std::vector<double> mom(12);
    for (int t = 0; t < 12; ++t) mom[t] = fam.radial_moment(t);
    int m = fam.dimension();
    auto integrate = [&](const std::function<double(double)>& h) {
        return simpson(
            [&](double u) {
                double y = u * u;
                return 2.0 * u * std::pow(y, 0.5 * m - 1.0) * phi(y) * h(y);
            },
            0.0, std::sqrt(y_max), 40000);
    };
    double mass = integrate([](double) { return 1.0; });
    double worst = 0.0;
    for (int i = 0; i <= 2; ++i) {
        std::vector<ellgof::RadialPolynomial> polys;
        for (int j = 0; j <= 3; ++j) polys.push_back(ellgof::radial_polynomial(mom, j, i));
        for (std::size_t a = 0; a < polys.size(); ++a) {
            for (std::size_t b = a; b < polys.size(); ++b) {
                double ip = integrate([&](double y) {
                                return std::pow(y, i) * polys[a](y) * polys[b](y);
                            }) /
                            mass;
                worst = std::max(worst, std::abs(ip - (a == b ? 1.0 : 0.0)));
            }
        }
    }
    return worst;
}

void criterion_9() {
    banner(9, "always-on property suite");
    {
        double worst23 = 0.0;
        for (int m : {2, 3}) {
            auto rep = ellgof::verify_orthonormality(ellgof::build_harmonics(m, 6),
                                                     ellgof::OrthonormalityMethod::quadrature);
            worst23 = std::max(worst23, rep.max_abs_deviation);
        }
        auto rep4 = ellgof::verify_orthonormality(ellgof::build_harmonics(4, 4),
                                                  ellgof::OrthonormalityMethod::quadrature);
        char buf[170];
        std::snprintf(buf, sizeof(buf),
                      "harmonic Gram deviation %.2e (dims 2-3, tol 1e-10) and %.2e (dim 4, "
                      "tol 1e-8)",
                      worst23, rep4.max_abs_deviation);
        check(worst23 <= 1e-10 && rep4.max_abs_deviation <= 1e-8, buf);
    }
    {
        double worst = 0.0;
        worst = std::max(worst, radial_orthonormality_gap(
                                    *ellgof::make_family("mvn", 3),
                                    [](double y) { return std::exp(-0.5 * y); }, 320.0));
        worst = std::max(worst, radial_orthonormality_gap(
                                    *ellgof::make_family("laplace", 2),
                                    [](double y) { return std::exp(-std::sqrt(y)); }, 3600.0));
        worst = std::max(worst, radial_orthonormality_gap(
                                    *ellgof::make_family("logistic", 2),
                                    [](double y) {
                                        double c = std::cosh(0.5 * y);
                                        return 1.0 / (4.0 * c * c);
                                    },
                                    700.0));
        worst = std::max(worst, radial_orthonormality_gap(
                                    *ellgof::make_family("pearson2", 2, 2.0),
                                    [](double y) {
                                        return y < 1.0 ? (1.0 - y) * (1.0 - y) : 0.0;
                                    },
                                    1.0));
        char buf[150];
        std::snprintf(buf, sizeof(buf),
                      "radial orthonormality against independent quadrature of each family's "
                      "law: worst deviation %.2e (tolerance 1e-8)",
                      worst);
        check(worst <= 1e-8, buf);
    }
    {
        std::mt19937_64 gen = ellgof::substream(20260816, 99);
        double worst = 0.0;
        struct Case {
            const char* name;
            int m;
            double shape;
        };
        for (const Case& c :
             {Case{"mvn", 2, std::nan("")}, Case{"laplace", 2, std::nan("")},
              Case{"logistic", 3, std::nan("")}, Case{"pearson2", 2, 4.0}}) {
            auto fam = ellgof::make_family(c.name, c.m, c.shape);
            Eigen::MatrixXd X = ellgof_test::gaussian_data(170, c.m, gen) * 0.4;
            ellgof::BasisSet basis = ellgof::build_basis(*fam, 5);
            auto cons = ellgof::decomposition_constants(*fam, basis);
            Eigen::MatrixXd Z = ellgof::standardize(X, ellgof::fit_mle(X, *fam));
            ellgof::TestStatistics st = ellgof::compute_statistics(basis, cons, Z);
            worst = std::max(worst,
                             std::abs(st.Q - (st.U + st.I + st.R)) / std::max(1.0, st.Q));
        }
        char buf[130];
        std::snprintf(buf, sizeof(buf),
                      "decomposition additivity across four families: worst relative gap %.2e "
                      "(tolerance 1e-12)",
                      worst);
        check(worst <= 1e-12, buf);
    }
    {
        bool ok = true;
        for (int m = 2; m <= 5; ++m) {
            for (int k = 0; k <= 8; ++k) {
                std::int64_t d = ellgof::binomial(m + k - 1, k);
                std::int64_t e = k == 0 ? 1
                                 : k == 1
                                     ? m
                                     : ellgof::binomial(m + k - 1, m - 1) -
                                           ellgof::binomial(m + k - 3, m - 1);
                ok = ok && ellgof::degree_space_dimension(m, k) == d &&
                     ellgof::harmonic_dimension(m, k) == e;
            }
        }
        check(ok, "dimension formulas exact for every dimension <= 5 and degree <= 8");
    }
    {
        std::mt19937_64 gen = ellgof::substream(20260816, 100);
        Eigen::MatrixXd X = ellgof_test::gaussian_data(240, 3, gen);
        auto fam = ellgof::make_family("mvn", 3);
        Eigen::MatrixXd Z = ellgof::standardize(X, ellgof::fit_mle(X, *fam));
        double mean_gap = Z.colwise().mean().cwiseAbs().maxCoeff();
        Eigen::MatrixXd S = Z.transpose() * Z / X.rows();
        double cov_gap = (S - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff();
        char buf[150];
        std::snprintf(buf, sizeof(buf),
                      "fitted Gaussian identities: standardized mean %.2e, scatter gap %.2e "
                      "(tolerance 1e-10)",
                      mean_gap, cov_gap);
        check(mean_gap <= 1e-10 && cov_gap <= 1e-10, buf);
    }
    {
        auto fam = ellgof::make_family("mvn", 2);
        ellgof::NullTable one = ellgof::build_null_table(*fam, 50, 4, 120, 8, 1);
        ellgof::NullTable three = ellgof::build_null_table(*fam, 50, 4, 120, 8, 3);
        bool same = one.values.size() == three.values.size();
        for (const auto& [name, vals] : one.values) {
            const auto& other = three.values.at(name);
            same = same && vals.size() == other.size();
            for (std::size_t i = 0; same && i < vals.size(); ++i)
                same = same && vals[i] == other[i];
        }
        check(same, "Monte Carlo tables are identical for 1 and 3 workers");
    }
}

}  // namespace

int main() {
    auto started = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criteria_7_and_8();
    criterion_9();
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::printf("acceptance: %d passed, %d failed, %d known published inconsistencies "
                "(%.1f s)\n",
                g_pass, g_fail, g_known, seconds);
    return g_fail == 0 ? 0 : 1;
}
