#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dcp/benchmark.hpp"
#include "dcp/errors.hpp"
#include "dcp/graph.hpp"
#include "dcp/io.hpp"
#include "dcp/mcstats.hpp"
#include "dcp/methods.hpp"
#include "dcp/synth.hpp"
#include "report.hpp"

namespace fs = std::filesystem;
using dcp::report::Json;

namespace {

struct Common {
    std::optional<std::uint64_t> seed;
    std::string output;
    std::string format;
    int workers = 1;
    std::optional<double> tol;
    std::optional<int> restarts;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("DCP_SEED"); env && *env) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used, 10);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw dcp::Error(std::string("DCP_SEED is not an unsigned integer: '") + env + "'");
    }
    return 0;
}

dcp::MethodOverrides overrides(const Common& c) { return {c.tol, c.restarts}; }

void emit(const std::string& output, const std::string& text) {
    if (output.empty() || output == "-")
        std::cout << text;
    else
        dcp::write_text_file(output, text);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void check_method(const std::string& id) {
    if (!dcp::is_method(id)) throw dcp::Error("unknown method '" + id + "'");
}

dcp::DirectedGraph load_graph(const std::string& path, bool lwcc) {
    dcp::EdgeListDiagnostics diag;
    dcp::DirectedGraph g = dcp::read_edge_list(path, &diag);
    if (diag.duplicates_collapsed > 0)
        std::cerr << "note: collapsed " << diag.duplicates_collapsed << " duplicate edge(s)\n";
    if (lwcc) g = dcp::largest_weakly_connected_component(g).graph;
    return g;
}

void add_common(CLI::App* app, Common& c, bool with_workers) {
    app->add_option("--seed", c.seed, "Random seed (default 0, or DCP_SEED)");
    app->add_option("--output,-o", c.output, "Output path ('-' or omitted: stdout)");
    app->add_option("--tol", c.tol, "AdvHits convergence tolerance")->check(CLI::PositiveNumber);
    app->add_option("--restarts", c.restarts, "HillClimb / MaxLike restarts")->check(CLI::PositiveNumber);
    if (with_workers) app->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
}

int run_detect(const std::string& input, const std::string& method, bool lwcc, const Common& c) {
    check_method(method);
    const dcp::DirectedGraph g = load_graph(input, lwcc);
    const dcp::DetectionResult r = dcp::make_detector(method, overrides(c))(g, resolve_seed(c.seed));
    if (c.format == "csv")
        emit(c.output, dcp::partition_csv(g, r.partition, dcp::report::scheme_for(r)));
    else
        emit(c.output, dump(dcp::report::detection(g, r)));
    return 0;
}

dcp::BenchmarkSpec bench_spec(int suite, std::size_t n, std::size_t reps, std::uint64_t seed,
                              const std::vector<double>& p_grid) {
    if (suite < 1 || suite > 3) throw dcp::Error("suite must be 1, 2 or 3");
    dcp::BenchmarkSpec spec;
    spec.suite = suite;
    spec.n = n;
    spec.replicates = reps;
    spec.seed = seed;
    spec.p_grid = p_grid;
    return spec;
}

int run_benchmark(const dcp::BenchmarkSpec& spec, const std::vector<std::string>& methods, bool blank_sd,
                  bool quiet, const Common& c) {
    for (const auto& m : methods) check_method(m);
    dcp::BenchmarkOptions opt;
    opt.methods = methods;
    opt.overrides = overrides(c);
    opt.workers = c.workers;
    if (!quiet) {
        opt.progress = [](std::size_t done, std::size_t total) {
            if (done == total || done % 10 == 0) std::cerr << "\rsamples " << done << "/" << total << std::flush;
            if (done == total) std::cerr << "\n";
        };
    }
    try {
        const auto rows = dcp::run_benchmark(spec, opt);
        if (c.format == "json")
            emit(c.output, dump(dcp::report::benchmark_rows(rows)));
        else
            emit(c.output, dcp::report::benchmark_csv(rows, blank_sd));
    } catch (const dcp::BenchmarkFailure& e) {
        Json progress;
        progress["status"] = "failed";
        progress["error"] = e.what();
        progress["method"] = e.method();
        progress["completed_samples"] = e.completed();
        progress["total_samples"] = dcp::benchmark_grid(spec).size();
        progress["failed_point"] = dcp::report::grid_point(e.sample().point);
        progress["failed_replicate"] = e.sample().replicate;
        progress["failed_seed"] = e.sample().seed;
        const std::string path = c.output.empty() || c.output == "-" ? "" : c.output + ".progress.json";
        if (path.empty())
            std::cerr << dump(progress);
        else
            dcp::write_text_file(path, dump(progress));
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

int run_mctest(const std::string& input, const std::string& method, const std::string& null, int reps, bool lwcc,
               const Common& c) {
    check_method(method);
    const dcp::DirectedGraph g = load_graph(input, lwcc);
    dcp::McOptions opt;
    opt.reps = reps;
    opt.seed = resolve_seed(c.seed);
    opt.method_seed = opt.seed;
    opt.workers = c.workers;
    const auto r = dcp::monte_carlo_test(g, dcp::make_detector(method, overrides(c)), method,
                                         null == "config" ? dcp::NullModel::Config : dcp::NullModel::ER, opt);
    emit(c.output, dump(dcp::report::mctest(r)));
    return 0;
}

int run_compare(const std::vector<std::string>& inputs, const Common& c) {
    const auto a = dcp::read_partition_csv(inputs[0]);
    const auto b = dcp::read_partition_csv(inputs[1]);
    const auto al = dcp::align_labels(a, b);
    if (al.only_a + al.only_b > 0)
        std::cerr << "note: " << al.only_a << " node(s) only in the first file and " << al.only_b
                  << " only in the second were ignored\n";
    Json out = dcp::report::compare(al.a, al.b);
    out["ignored_nodes"] = {{"first_only", al.only_a}, {"second_only", al.only_b}};
    emit(c.output, dump(out));
    return 0;
}

int run_generate(const dcp::BenchmarkSpec& spec, const std::string& dir) {
    if (dir.empty() || dir == "-") throw dcp::Error("generate needs --output DIR");
    fs::create_directories(dir);
    Json manifest;
    manifest["suite"] = spec.suite;
    manifest["n"] = spec.n;
    manifest["replicates"] = spec.replicates;
    manifest["seed"] = spec.seed;
    Json samples = Json::array();
    for (const auto& s : dcp::benchmark_grid(spec)) {
        const dcp::PlantedGraph pg = dcp::generate_sample(s);
        const std::string stem = "s" + std::to_string(spec.suite) + "_pt" + std::to_string(s.point.index) + "_r" +
                                 std::to_string(s.replicate);
        dcp::write_edge_list(pg.graph, (fs::path(dir) / (stem + ".edges")).string());
        dcp::write_partition_csv((fs::path(dir) / (stem + ".csv")).string(), pg.graph, pg.planted,
                                 dcp::LabelScheme::Dcp4);
        Json j;
        j["point"] = dcp::report::grid_point(s.point);
        j["replicate"] = s.replicate;
        j["seed"] = s.seed;
        j["m"] = pg.graph.m();
        j["edges"] = stem + ".edges";
        j["partition"] = stem + ".csv";
        samples.push_back(std::move(j));
    }
    manifest["samples"] = std::move(samples);
    dcp::write_text_file((fs::path(dir) / "manifest.json").string(), dump(manifest));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Directed core-periphery detection"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "dcp 0.1.0");

    std::string method_help = "Method:";
    for (const auto& id : dcp::method_ids()) method_help += " " + id;

    // detect
    Common dc;
    std::string d_input, d_method = "advhits";
    bool d_lwcc = false;
    auto* detect = app.add_subcommand("detect", "Detect the four sets in an edge-list graph");
    detect->add_option("--input,-i", d_input, "Edge-list file")->required()->check(CLI::ExistingFile);
    detect->add_option("--method,-m", d_method, method_help);
    detect->add_option("--format", dc.format, "json (default) or csv partition")
        ->check(CLI::IsMember({"json", "csv"}));
    detect->add_flag("--lwcc", d_lwcc, "Restrict to the largest weakly connected component");
    add_common(detect, dc, false);

    // benchmark
    Common bc;
    int b_suite = 1;
    std::size_t b_n = 1000, b_reps = 50;
    std::vector<std::string> b_methods;
    std::vector<double> b_p;
    bool b_blank = false, b_quiet = false;
    auto* bench = app.add_subcommand("benchmark", "Score methods on synthetic benchmark suites");
    bench->add_option("--suite", b_suite, "Suite 1, 2 or 3")->check(CLI::Range(1, 3));
    bench->add_option("--n", b_n, "Vertices per graph")->check(CLI::PositiveNumber);
    bench->add_option("--reps", b_reps, "Replicates per grid point")->check(CLI::PositiveNumber);
    bench->add_option("--method,-m", b_methods, method_help + " (repeatable, or comma separated)")
        ->required()
        ->delimiter(',');
    bench->add_option("--p", b_p, "Suite 1 grid override (comma separated)")->delimiter(',');
    bench->add_option("--format", bc.format, "csv (default) or json")->check(CLI::IsMember({"json", "csv"}));
    bench->add_flag("--blank-sd", b_blank, "Leave the SD columns empty when reps = 1");
    bench->add_flag("--quiet,-q", b_quiet, "No progress on stderr");
    add_common(bench, bc, true);

    // mctest
    Common mc;
    std::string m_input, m_method = "advhits", m_null = "er";
    int m_reps = 250;
    bool m_lwcc = false;
    auto* mct = app.add_subcommand("mctest", "Monte Carlo L-shape significance test");
    mct->add_option("--input,-i", m_input, "Edge-list file")->required()->check(CLI::ExistingFile);
    mct->add_option("--method,-m", m_method, method_help);
    mct->add_option("--null", m_null, "Null model: er or config")->check(CLI::IsMember({"er", "config"}));
    mct->add_option("--reps", m_reps, "Null replicates")->check(CLI::NonNegativeNumber);
    mct->add_option("--format", mc.format, "json")->check(CLI::IsMember({"json"}));
    mct->add_flag("--lwcc", m_lwcc, "Restrict to the largest weakly connected component");
    add_common(mct, mc, true);

    // compare
    Common cc;
    std::vector<std::string> c_inputs;
    auto* cmp = app.add_subcommand("compare", "ARI / NMI / VOI and confusion table of two partition CSVs");
    cmp->add_option("--input,-i", c_inputs, "Two partition CSV files")->required()->expected(2)->check(CLI::ExistingFile);
    cmp->add_option("--output,-o", cc.output, "Output path");
    cmp->add_option("--format", cc.format, "json")->check(CLI::IsMember({"json"}));

    // generate
    Common gc;
    int g_suite = 1;
    std::size_t g_n = 1000, g_reps = 1;
    std::vector<double> g_p;
    auto* gen = app.add_subcommand("generate", "Write benchmark graphs, planted partitions and a manifest");
    gen->add_option("--suite", g_suite, "Suite 1, 2 or 3")->check(CLI::Range(1, 3));
    gen->add_option("--n", g_n, "Vertices per graph")->check(CLI::PositiveNumber);
    gen->add_option("--reps", g_reps, "Replicates per grid point")->check(CLI::PositiveNumber);
    gen->add_option("--p", g_p, "Suite 1 grid override (comma separated)")->delimiter(',');
    gen->add_option("--seed", gc.seed, "Random seed (default 0, or DCP_SEED)");
    gen->add_option("--output,-o", gc.output, "Output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*detect) return run_detect(d_input, d_method, d_lwcc, dc);
        if (*bench)
            return run_benchmark(bench_spec(b_suite, b_n, b_reps, resolve_seed(bc.seed), b_p), b_methods, b_blank,
                                 b_quiet, bc);
        if (*mct) return run_mctest(m_input, m_method, m_null, m_reps, m_lwcc, mc);
        if (*cmp) return run_compare(c_inputs, cc);
        if (*gen) return run_generate(bench_spec(g_suite, g_n, g_reps, resolve_seed(gc.seed), g_p), gc.output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
