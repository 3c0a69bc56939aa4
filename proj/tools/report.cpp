#include "report.hpp"

#include <cmath>
#include <cstdio>

#include "dcp/baselines.hpp"
#include "dcp/likelihood.hpp"
#include "dcp/structures.hpp"

namespace dcp::report {

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

LabelScheme scheme_for(const DetectionResult& r) {
    if (r.diagnostics.method == "bowtie") return LabelScheme::BowTie;
    return r.partition.k == 4 ? LabelScheme::Dcp4 : LabelScheme::Integer;
}

Json detection(const DirectedGraph& g, const DetectionResult& r) {
    const LabelScheme scheme = scheme_for(r);
    const Partition& p = r.partition;
    Json out;
    out["method"] = r.diagnostics.method;
    out["seed"] = r.diagnostics.seed;
    out["n"] = g.n();
    out["m"] = g.m();

    Json labels = Json::object();
    for (std::size_t v = 0; v < g.n(); ++v) labels[g.name(static_cast<Vertex>(v))] = label_name(p.labels[v], scheme);
    out["labels"] = std::move(labels);

    Json sizes = Json::object();
    const auto ss = p.set_sizes();
    for (int b = 0; b < p.k; ++b) sizes[label_name(b, scheme)] = ss[b];
    out["set_sizes"] = std::move(sizes);

    const bool has_fit = scheme == LabelScheme::Dcp4;
    out["p1"] = has_fit ? number(r.fit.p1) : Json(nullptr);
    out["p2"] = has_fit ? number(r.fit.p2) : Json(nullptr);
    out["log_lik"] = has_fit ? number(r.fit.log_lik) : Json(nullptr);

    // Empirical edge density between each ordered pair of blocks.
    const BlockCounts c = block_counts(g, p);
    Json order = Json::array();
    for (int b = 0; b < p.k; ++b) order.push_back(label_name(b, scheme));
    Json dens = Json::array();
    for (int a = 0; a < p.k; ++a) {
        Json row = Json::array();
        for (int b = 0; b < p.k; ++b) {
            const std::int64_t pairs = c.sizes[a] * c.sizes[b];
            row.push_back(pairs > 0 ? static_cast<double>(c.edge(a, b)) / static_cast<double>(pairs) : 0.0);
        }
        dens.push_back(std::move(row));
    }
    out["block_order"] = std::move(order);
    out["block_density_matrix"] = std::move(dens);

    Json d;
    d["iterations"] = r.diagnostics.iterations;
    d["converged"] = r.diagnostics.converged;
    d["fallback_used"] = r.diagnostics.fallback_used;
    d["fallback_iterations"] = r.diagnostics.fallback_iterations;
    Json trace = Json::array();
    for (double x : r.diagnostics.log_lik_trace) trace.push_back(number(x));
    d["log_lik_trace"] = std::move(trace);
    out["diagnostics"] = std::move(d);
    return out;
}

Json mctest(const McTestResult& r) {
    Json out;
    out["method"] = r.method;
    out["null_model"] = r.null_model == NullModel::ER ? "er" : "config";
    out["reps"] = r.reps;
    out["seed"] = r.seed;
    out["method_seed"] = r.method_seed;
    out["observed_stat"] = number(r.observed_stat);
    out["p_value"] = number(r.p_value);
    out["retries"] = r.retries;
    Json nulls = Json::array();
    for (double x : r.null_stats) nulls.push_back(number(x));
    out["null_stats"] = std::move(nulls);
    return out;
}

Json compare(const std::vector<int>& x, const std::vector<int>& y) {
    Json out;
    out["n"] = x.size();
    out["ari"] = number(ari(x, y));
    out["nmi"] = number(nmi(x, y));
    out["voi"] = number(voi(x, y));
    const ConfusionTable t = confusion_table(x, y);
    Json conf;
    conf["rows"] = t.row_labels;
    conf["cols"] = t.col_labels;
    Json counts = Json::array();
    for (std::size_t i = 0; i < t.row_labels.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < t.col_labels.size(); ++j) row.push_back(t.at(i, j));
        counts.push_back(std::move(row));
    }
    conf["counts"] = std::move(counts);
    out["confusion"] = std::move(conf);
    return out;
}

Json grid_point(const GridPoint& p) {
    Json j;
    j["index"] = p.index;
    j["suite"] = p.suite;
    j["p"] = p.p;
    j["p1"] = p.p1;
    j["p2"] = p.p2;
    j["ratio"] = p.ratio;
    j["varied_set"] = p.varied_set >= 0 ? Json(std::string(kDcpSetNames[p.varied_set])) : Json(nullptr);
    j["size_exponent"] = p.size_exponent;
    j["sizes"] = p.sizes;
    return j;
}

Json benchmark_rows(const std::vector<BenchmarkRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json j;
        j["point"] = grid_point(r.point);
        j["method"] = r.method;
        j["reps"] = r.reps;
        for (auto [name, s] : {std::pair{"ari", r.ari}, std::pair{"nmi", r.nmi}, std::pair{"voi", r.voi}}) {
            j[std::string(name) + "_mean"] = number(s.mean);
            j[std::string(name) + "_sd"] = number(s.sd);
        }
        out.push_back(std::move(j));
    }
    return out;
}

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string fmt_grid(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace

std::string benchmark_csv(const std::vector<BenchmarkRow>& rows, bool blank_single_sd) {
    std::string out =
        "suite,point,p,p1,p2,ratio,varied_set,size_exponent,method,reps,"
        "ari_mean,ari_sd,nmi_mean,nmi_sd,voi_mean,voi_sd\n";
    for (const auto& r : rows) {
        const GridPoint& p = r.point;
        const bool blank = blank_single_sd && r.reps < 2;
        auto sd = [&](double x) { return blank ? std::string() : fmt(x); };
        out += std::to_string(p.suite) + ',' + std::to_string(p.index) + ',' + fmt_grid(p.p) + ',' + fmt_grid(p.p1) +
               ',' + fmt_grid(p.p2) + ',' + fmt_grid(p.ratio) + ',' +
               (p.varied_set >= 0 ? std::string(kDcpSetNames[p.varied_set]) : std::string()) + ',' +
               std::to_string(p.size_exponent) + ',' + r.method + ',' + std::to_string(r.reps) + ',' +
               fmt(r.ari.mean) + ',' + sd(r.ari.sd) + ',' + fmt(r.nmi.mean) + ',' + sd(r.nmi.sd) + ',' +
               fmt(r.voi.mean) + ',' + sd(r.voi.sd) + '\n';
    }
    return out;
}

}  // namespace dcp::report
