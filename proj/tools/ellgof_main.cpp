// Command-line front end: fit-and-test on CSV data, Monte Carlo null tables,
// power studies, alternative-data simulation, and basis dumps.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ellgof/alternatives.hpp"
#include "ellgof/errors.hpp"
#include "ellgof/family.hpp"
#include "ellgof/harness.hpp"
#include "ellgof/io.hpp"
#include "ellgof/montecarlo.hpp"
#include "ellgof/report.hpp"
#include "ellgof/version.hpp"

namespace {

using namespace ellgof;

// Priority: the --workers flag, then the WORKERS environment variable, then
// the fallback; 0 means one thread per hardware core.
int resolve_workers(bool flag_given, int flag_value, int fallback = 0) {
    if (flag_given) return flag_value;
    const char* env = std::getenv("WORKERS");
    if (env == nullptr || *env == '\0') return fallback;
    try {
        std::size_t used = 0;
        int value = std::stoi(env, &used);
        if (used != std::string(env).size() || value < 0) throw std::invalid_argument("range");
        return value;
    } catch (const std::exception&) {
        throw usage_error(std::string("WORKERS environment variable is not a count: '") + env +
                          "'");
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot write '" + path + "'");
    out << text;
    if (!out) throw data_error("failed while writing '" + path + "'");
}

void emit_json(const nlohmann::json& doc, const std::string& out_path) {
    std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text(out_path, text);
    }
}

struct TestArgs {
    std::string input;
    std::string family = "mvn";
    double shape = std::numeric_limits<double>::quiet_NaN();
    int K = 5;
    bool select = false;
    int d_n = 8;
    double level = 0.05;
    int mc_replicates = 2000;
    std::uint64_t seed = 1;
    int workers = 0;
    std::string null_table_path;
    std::string out;
    bool high_degree = false;
};

int cmd_test(const TestArgs& a, bool k_given, bool workers_given) {
    if (k_given == a.select) {
        throw usage_error("pass exactly one of --K (fixed degree) or --select-K (data-driven)");
    }
    CsvTable csv = read_csv(a.input);
    const int m = static_cast<int>(csv.data.cols());
    if (csv.data.rows() <= m) {
        throw data_error("insufficient data: need more observations than dimensions (n = " +
                         std::to_string(csv.data.rows()) + ", m = " + std::to_string(m) + ")");
    }
    auto family = make_family(a.family, m, a.shape);

    TestOptions options;
    options.K = a.K;
    options.select = a.select;
    options.d_n = a.d_n;
    options.level = a.level;
    options.mc_replicates = a.mc_replicates;
    options.seed = a.seed;
    options.workers = resolve_workers(workers_given, a.workers);
    options.high_degree_report = a.high_degree;

    NullTable stored;
    if (!a.null_table_path.empty()) {
        stored = read_null_table(a.null_table_path);
        options.null_table = &stored;
    }

    TestOutcome outcome = run_test(csv.data, *family, options);
    emit_json(outcome.report, a.out);
    return 0;
}

struct McTableArgs {
    std::string family = "mvn";
    double shape = std::numeric_limits<double>::quiet_NaN();
    int m = 2;
    int n = 0;
    int K = 5;
    int reps = 2000;
    std::uint64_t seed = 1;
    int workers = 0;
    std::string out;
};

int cmd_mc_table(const McTableArgs& a, bool workers_given) {
    auto family = make_family(a.family, a.m, a.shape);
    NullTable table =
        build_null_table(*family, a.n, a.K, a.reps, a.seed,
                         resolve_workers(workers_given, a.workers));
    write_null_table(table, a.out);
    if (!table.warning.empty()) {
        std::cerr << "warning: " << table.warning << "\n";
    }
    return 0;
}

struct SimulateArgs {
    std::string alt;
    int n = 0;
    std::uint64_t seed = 1;
    std::uint64_t replicate = 0;
    std::string out;
};

int cmd_simulate(const SimulateArgs& a) {
    Eigen::MatrixXd X = sample_alternative(a.alt, a.n, a.seed, a.replicate);
    write_csv(a.out, X);
    return 0;
}

struct PowerArgs {
    std::string config;
    std::string out;
    int workers = 0;
};

int cmd_power_study(const PowerArgs& a, bool workers_given) {
    PowerStudyConfig config;
    if (!a.config.empty()) config = load_power_config(a.config);
    config.workers = resolve_workers(workers_given, a.workers, config.workers);

    PowerStudyResult result = run_power_study(config);
    std::cout << format_power_table(result.cases, "rejection rates against the fitted null");
    std::cout << format_power_table(result.sweep, "rejection rates by degree");
    if (!a.out.empty()) {
        emit_json(power_study_json(result), a.out);
    }
    return 0;
}

struct BasisDumpArgs {
    std::string family = "mvn";
    double shape = std::numeric_limits<double>::quiet_NaN();
    int m = 2;
    int K = 5;
    std::string out;
};

int cmd_basis_dump(const BasisDumpArgs& a) {
    auto family = make_family(a.family, a.m, a.shape);
    emit_json(basis_dump_json(*family, a.K), a.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Smooth goodness-of-fit tests for elliptical families with the "
        "Q = U + I + R diagnostic decomposition"};
    app.set_version_flag("--version", std::string(ellgof::kVersion));
    app.require_subcommand(1);

    TestArgs t;
    CLI::App* test = app.add_subcommand("test", "Fit a family to CSV data and run the test");
    test->add_option("--input", t.input, "CSV data file, one observation per row")->required();
    test->add_option("--family", t.family, "Null family: mvn, laplace, logistic, pearson2");
    test->add_option("--shape", t.shape, "Pearson II exponent (required for pearson2)");
    CLI::Option* k_opt = test->add_option("--K", t.K, "Fixed maximum degree");
    CLI::Option* sel_opt =
        test->add_flag("--select-K", t.select, "Choose the degree by the penalized rule");
    k_opt->excludes(sel_opt);
    test->add_option("--d-n", t.d_n, "Largest candidate degree for --select-K");
    test->add_option("--level", t.level, "Test level in (0, 1)");
    test->add_option("--mc-reps", t.mc_replicates,
                     "Monte Carlo replicates for p-values (0 = asymptotic only)");
    test->add_option("--seed", t.seed, "Monte Carlo seed");
    CLI::Option* t_workers = test->add_option("--workers", t.workers, "Worker threads (0 = all cores)");
    test->add_option("--null-table", t.null_table_path,
                     "Stored null table (key must match the request)");
    test->add_option("--out", t.out, "Report path (default: stdout)");
    test->add_flag("--high-degree-report", t.high_degree,
                   "Also report the restriction to degrees three and above");

    McTableArgs mc;
    CLI::App* mctab = app.add_subcommand("mc-table", "Build and store a Monte Carlo null table");
    mctab->add_option("--family", mc.family, "Null family");
    mctab->add_option("--shape", mc.shape, "Pearson II exponent");
    mctab->add_option("--m", mc.m, "Dimension")->required();
    mctab->add_option("--n", mc.n, "Sample size per replicate")->required();
    mctab->add_option("--K", mc.K, "Maximum degree");
    mctab->add_option("--reps", mc.reps, "Replicates (at least 100)");
    mctab->add_option("--seed", mc.seed, "Base seed");
    CLI::Option* mc_workers = mctab->add_option("--workers", mc.workers, "Worker threads");
    mctab->add_option("--out", mc.out, "Output path (JSON lines + .meta.json sidecar)")->required();

    SimulateArgs s;
    CLI::App* sim = app.add_subcommand("simulate", "Draw a dataset from an alternative generator");
    sim->add_option("--alt", s.alt, "Alternative name (or mvn for null data)")->required();
    sim->add_option("--n", s.n, "Sample size")->required();
    sim->add_option("--seed", s.seed, "Seed");
    sim->add_option("--replicate", s.replicate, "Substream index");
    sim->add_option("--out", s.out, "Output CSV path")->required();

    PowerArgs p;
    CLI::App* power = app.add_subcommand("power-study", "Run the desk-scale power study");
    power->add_option("--config", p.config, "Study configuration JSON (defaults when omitted)");
    power->add_option("--out", p.out, "Result matrix JSON path");
    CLI::Option* p_workers = power->add_option("--workers", p.workers, "Worker threads");

    BasisDumpArgs b;
    CLI::App* basis = app.add_subcommand("basis", "Basis inspection");
    basis->require_subcommand(1);
    CLI::App* dump = basis->add_subcommand("dump", "Dump every retained basis function as JSON");
    dump->add_option("--family", b.family, "Null family");
    dump->add_option("--shape", b.shape, "Pearson II exponent");
    dump->add_option("--m", b.m, "Dimension")->required();
    dump->add_option("--K", b.K, "Maximum degree");
    dump->add_option("--out", b.out, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (test->parsed()) {
            return cmd_test(t, k_opt->count() > 0, t_workers->count() > 0);
        }
        if (mctab->parsed()) {
            return cmd_mc_table(mc, mc_workers->count() > 0);
        }
        if (sim->parsed()) {
            return cmd_simulate(s);
        }
        if (power->parsed()) {
            return cmd_power_study(p, p_workers->count() > 0);
        }
        if (basis->parsed() && dump->parsed()) {
            return cmd_basis_dump(b);
        }
        throw ellgof::usage_error("no subcommand selected");
    } catch (const ellgof::usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ellgof::data_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ellgof::numeric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
