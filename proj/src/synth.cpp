#include "dcp/synth.hpp"

#include <cmath>
#include <numeric>

#include "dcp/errors.hpp"
#include "dcp/rng.hpp"

namespace dcp {

namespace {

// Calls emit(k) for each k in [0, total) kept with probability p, using
// geometric skips so the cost is proportional to the number kept.
template <class Emit>
void bernoulli_indices(Rng& rng, std::uint64_t total, double p, Emit&& emit) {
    if (total == 0 || p <= 0.0) return;
    if (p >= 1.0) {
        for (std::uint64_t k = 0; k < total; ++k) emit(k);
        return;
    }
    const double log_q = std::log1p(-p);
    double pos = -1.0;
    for (;;) {
        pos += 1.0 + std::floor(std::log(rng.uniform_pos()) / log_q);
        if (pos >= static_cast<double>(total)) return;
        emit(static_cast<std::uint64_t>(pos));
    }
}

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(std::string(what) + " must lie in [0, 1]");
}

PlantedGraph sample_blocks(const BlockStructure& s, const SbmParams& params, std::uint64_t seed) {
    if (params.sizes.size() != static_cast<std::size_t>(s.k))
        throw Error("block size count does not match structure");
    check_probability(params.p1, "p1");
    check_probability(params.p2, "p2");

    std::vector<std::size_t> start(s.k + 1, 0);
    for (int b = 0; b < s.k; ++b) start[b + 1] = start[b] + params.sizes[b];
    const std::size_t n = start[s.k];

    Partition planted{std::vector<int>(n), s.k};
    for (int b = 0; b < s.k; ++b)
        for (std::size_t v = start[b]; v < start[b + 1]; ++v) planted.labels[v] = b;

    Rng rng(seed);
    std::vector<Edge> edges;
    for (int a = 0; a < s.k; ++a) {
        for (int b = 0; b < s.k; ++b) {
            const std::uint64_t rows = params.sizes[a], cols = params.sizes[b];
            const double p = s.at(a, b) ? params.p1 : params.p2;
            bernoulli_indices(rng, rows * cols, p, [&](std::uint64_t k) {
                edges.emplace_back(static_cast<Vertex>(start[a] + k / cols),
                                   static_cast<Vertex>(start[b] + k % cols));
            });
        }
    }
    return {DirectedGraph(n, std::move(edges)), std::move(planted)};
}

}  // namespace

PlantedGraph sample_sbm(const BlockStructure& structure, const SbmParams& params, std::uint64_t seed) {
    if (!(params.p1 > params.p2)) throw Error("sample_sbm requires p1 > p2");
    return sample_blocks(structure, params, seed);
}

PlantedGraph sample_one_param(double p, const std::vector<std::size_t>& sizes, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 0.5)) throw Error("one-parameter model requires p in [0, 0.5]");
    return sample_blocks(catalog("DCP4"), SbmParams{sizes, 0.5 + p, 0.5 - p}, seed);
}

DirectedGraph sample_er(std::size_t n, double p_edge, std::uint64_t seed) {
    check_probability(p_edge, "p_edge");
    std::vector<Edge> edges;
    if (n >= 2) {
        Rng rng(seed);
        const std::uint64_t w = n - 1;
        bernoulli_indices(rng, static_cast<std::uint64_t>(n) * w, p_edge, [&](std::uint64_t k) {
            const std::uint64_t row = k / w;
            std::uint64_t col = k % w;
            if (col >= row) ++col;
            edges.emplace_back(static_cast<Vertex>(row), static_cast<Vertex>(col));
        });
    }
    return DirectedGraph(n, std::move(edges));
}

DirectedGraph sample_configuration(const DirectedGraph& g, std::uint64_t seed, std::vector<Edge>* raw_pairs) {
    std::vector<Vertex> out_stubs, in_stubs;
    out_stubs.reserve(g.m());
    in_stubs.reserve(g.m());
    for (const auto& [u, v] : g.edges()) {
        out_stubs.push_back(u);
        in_stubs.push_back(v);
    }
    Rng rng(seed);
    rng.shuffle(in_stubs);
    std::vector<Edge> pairs(g.m());
    for (std::size_t i = 0; i < pairs.size(); ++i) pairs[i] = {out_stubs[i], in_stubs[i]};
    if (raw_pairs) *raw_pairs = pairs;
    return DirectedGraph(g.n(), std::move(pairs), g.names());
}

std::vector<double> default_suite1_grid() {
    std::vector<double> p;
    for (int i = 50; i >= 21; --i) p.push_back(i / 100.0);
    for (int j = 39; j >= 1; --j) p.push_back(j * 5 / 1000.0);
    return p;
}

std::vector<double> default_suite2_p1_grid() {
    std::vector<double> p;
    for (int i = 1; i <= 40; ++i) p.push_back(i * 25 / 1000.0);
    return p;
}

std::vector<double> default_suite2_ratio_grid() {
    std::vector<double> r;
    for (int j = 0; j <= 19; ++j) r.push_back(j * 5 / 100.0);
    return r;
}

std::vector<GridPoint> benchmark_points(const BenchmarkSpec& spec) {
    const std::size_t q = static_cast<std::size_t>(std::lround(spec.n / 4.0));
    const std::vector<std::size_t> equal(4, q);
    std::vector<GridPoint> pts;
    auto push = [&](GridPoint gp) {
        gp.index = pts.size();
        gp.suite = spec.suite;
        pts.push_back(std::move(gp));
    };
    switch (spec.suite) {
        case 1: {
            auto grid = spec.p_grid.empty() ? default_suite1_grid() : spec.p_grid;
            for (double p : grid) {
                if (!(p >= 0.0 && p <= 0.5)) throw Error("suite 1 grid value outside [0, 0.5]");
                GridPoint gp;
                gp.p = p;
                gp.p1 = 0.5 + p;
                gp.p2 = 0.5 - p;
                gp.sizes = equal;
                push(gp);
            }
            break;
        }
        case 2: {
            auto p1s = spec.p1_grid.empty() ? default_suite2_p1_grid() : spec.p1_grid;
            auto ratios = spec.ratio_grid.empty() ? default_suite2_ratio_grid() : spec.ratio_grid;
            for (double p1 : p1s) {
                for (double r : ratios) {
                    if (!(p1 > 0.0 && p1 <= 1.0 && r >= 0.0 && r < 1.0))
                        throw Error("suite 2 grid value outside 0 < p1 <= 1, 0 <= p2/p1 < 1");
                    GridPoint gp;
                    gp.p1 = p1;
                    gp.ratio = r;
                    gp.p2 = p1 * r;
                    gp.sizes = equal;
                    push(gp);
                }
            }
            break;
        }
        case 3: {
            std::vector<int> sets = spec.varied_sets.empty() ? std::vector<int>{0, 1, 2, 3} : spec.varied_sets;
            std::vector<int> exps = spec.size_exponents;
            if (exps.empty())
                for (int e = -3; e <= 3; ++e) exps.push_back(e);
            for (int s : sets) {
                if (s < 0 || s > 3) throw Error("suite 3 varied set must be a DCP4 block index");
                for (int e : exps) {
                    GridPoint gp;
                    gp.p = spec.suite3_p;
                    gp.p1 = 0.5 + spec.suite3_p;
                    gp.p2 = 0.5 - spec.suite3_p;
                    gp.varied_set = s;
                    gp.size_exponent = e;
                    gp.sizes = equal;
                    gp.sizes[s] = static_cast<std::size_t>(std::lround(std::ldexp(spec.n / 4.0, e)));
                    push(gp);
                }
            }
            break;
        }
        default:
            throw Error("benchmark suite must be 1, 2 or 3");
    }
    return pts;
}

std::vector<BenchmarkSample> benchmark_grid(const BenchmarkSpec& spec) {
    std::vector<BenchmarkSample> out;
    for (const auto& gp : benchmark_points(spec)) {
        for (std::size_t r = 0; r < spec.replicates; ++r)
            out.push_back({gp, r, derive_seed(spec.seed, gp.index, r)});
    }
    return out;
}

PlantedGraph generate_sample(const BenchmarkSample& s) {
    return sample_blocks(catalog("DCP4"), SbmParams{s.point.sizes, s.point.p1, s.point.p2}, s.seed);
}

}  // namespace dcp
