#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "dcp/errors.hpp"
#include "dcp/synth.hpp"
#include "support.hpp"

using namespace dcp;

namespace {

// Edges and pair counts on the M = 1 pairs of a planted partition.
struct LCount {
    std::int64_t edges_l = 0, pairs_l = 0, edges_o = 0, pairs_o = 0;
};

LCount count_l(const DirectedGraph& g, const Partition& p) {
    LCount c;
    std::vector<std::int64_t> sz(4, 0);
    for (int l : p.labels) ++sz[l];
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) (testing::ideal_edge(a, b) ? c.pairs_l : c.pairs_o) += sz[a] * sz[b];
    for (const auto& [u, v] : g.edges()) (testing::ideal_edge(p.labels[u], p.labels[v]) ? c.edges_l : c.edges_o)++;
    return c;
}

}  // namespace

TEST_CASE("degenerate probabilities give the noiseless structure") {
    const PlantedGraph pg = sample_sbm(catalog("DCP4"), {{2, 2, 2, 2}, 1.0, 0.0}, 1);
    const DirectedGraph ideal = testing::ideal_graph(2);
    CHECK(pg.graph.edges() == ideal.edges());
    CHECK(pg.planted.labels == testing::block_labels({2, 2, 2, 2}));
    CHECK(pg.graph.has_self_loop(2));   // Cin
    CHECK(pg.graph.has_self_loop(4));   // Cout
    CHECK_FALSE(pg.graph.has_self_loop(0));
    CHECK(sample_one_param(0.5, {2, 2, 2, 2}, 9).graph.edges() == ideal.edges());
}

TEST_CASE("sbm parameter checks") {
    CHECK_THROWS_AS(sample_sbm(catalog("DCP4"), {{2, 2, 2, 2}, 0.0, 0.0}, 1), Error);
    CHECK_THROWS_AS(sample_sbm(catalog("DCP4"), {{2, 2, 2, 2}, 1.2, 0.1}, 1), Error);
    CHECK_THROWS_AS(sample_sbm(catalog("DCP4"), {{2, 2, 2}, 0.6, 0.1}, 1), Error);
    CHECK_THROWS_AS(sample_one_param(0.6, {2, 2, 2, 2}, 1), Error);
    CHECK_THROWS_AS(sample_one_param(-0.1, {2, 2, 2, 2}, 1), Error);
    CHECK_NOTHROW(sample_one_param(0.0, {2, 2, 2, 2}, 1));
}

TEST_CASE("signal density") {
    const PlantedGraph pg = sample_sbm(catalog("DCP4"), {{100, 100, 100, 100}, 0.6, 0.1}, 42);
    const LCount c = count_l(pg.graph, pg.planted);
    CHECK(c.pairs_l == 50000);
    CHECK(std::abs(static_cast<double>(c.edges_l) / c.pairs_l - 0.6) < 0.01);
    CHECK(std::abs(static_cast<double>(c.edges_o) / c.pairs_o - 0.1) < 0.01);

    const PlantedGraph one = sample_one_param(0.1, {250, 250, 250, 250}, 3);
    const LCount c1 = count_l(one.graph, one.planted);
    CHECK(std::abs(static_cast<double>(c1.edges_l) / c1.pairs_l - 0.6) < 0.01);

    const PlantedGraph er = sample_one_param(0.0, {100, 100, 100, 100}, 4);
    CHECK(std::abs(er.graph.density() - 0.5) < 0.01);
}

TEST_CASE("expected edge counts hold over many samples") {
    // 4-sigma band on each of 100 samples, for two structures
    for (const char* id : {"DCP4", "A4c"}) {
        const BlockStructure s = catalog(id);
        const std::vector<std::size_t> sizes{10, 15, 20, 25};
        const double p1 = 0.7, p2 = 0.2;
        std::int64_t nl = 0, total = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                const auto pairs = static_cast<std::int64_t>(sizes[a] * sizes[b]);
                total += pairs;
                if (s.at(a, b)) nl += pairs;
            }
        const double mean = p1 * nl + p2 * (total - nl);
        const double sd = std::sqrt(p1 * (1 - p1) * nl + p2 * (1 - p2) * (total - nl));
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const double m = static_cast<double>(sample_sbm(s, {sizes, p1, p2}, seed).graph.m());
            CHECK(std::abs(m - mean) < 4 * sd);
        }
    }
}

TEST_CASE("sampling is deterministic in the seed") {
    const auto a = sample_one_param(0.2, {30, 30, 30, 30}, 77);
    const auto b = sample_one_param(0.2, {30, 30, 30, 30}, 77);
    const auto c = sample_one_param(0.2, {30, 30, 30, 30}, 78);
    CHECK(a.graph.edges() == b.graph.edges());
    CHECK(a.graph.edges() != c.graph.edges());
    CHECK(sample_er(50, 0.1, 5).edges() == sample_er(50, 0.1, 5).edges());
}

TEST_CASE("directed ER") {
    CHECK(sample_er(10, 0.0, 1).m() == 0);
    const DirectedGraph full = sample_er(3, 1.0, 1);
    CHECK(full.m() == 6);
    for (Vertex v = 0; v < 3; ++v) CHECK_FALSE(full.has_self_loop(v));

    const double mean = 0.05 * 200 * 199, sd = std::sqrt(mean * 0.95);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const DirectedGraph g = sample_er(200, 0.05, seed);
        CHECK(std::abs(static_cast<double>(g.m()) - mean) < 3 * sd + 1);
        for (Vertex v = 0; v < 200; ++v) CHECK_FALSE(g.has_self_loop(v));
    }
}

TEST_CASE("configuration model") {
    const DirectedGraph loop(1, {{0, 0}});
    CHECK(sample_configuration(loop, 3).edges() == std::vector<Edge>{{0, 0}});

    // the only stub pairings all give the edge (0, 1)
    const DirectedGraph forced(2, {{0, 1}});
    CHECK(sample_configuration(forced, 3).edges() == std::vector<Edge>{{0, 1}});

    std::vector<Edge> star;
    for (Vertex v = 1; v <= 5; ++v) star.emplace_back(0, v);
    const DirectedGraph sg(6, star);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        std::vector<Edge> raw;
        sample_configuration(sg, seed, &raw);
        CHECK(std::count_if(raw.begin(), raw.end(), [](const Edge& e) { return e.first == 0; }) == 5);
    }

    std::mt19937_64 gen(2);
    for (int trial = 0; trial < 10; ++trial) {
        const DirectedGraph g = testing::random_graph(30, 0.15, gen);
        std::vector<Edge> raw;
        const DirectedGraph c = sample_configuration(g, trial, &raw);
        std::map<Vertex, int> out_g, in_g, out_c, in_c;
        for (const auto& [u, v] : g.edges()) ++out_g[u], ++in_g[v];
        for (const auto& [u, v] : raw) ++out_c[u], ++in_c[v];
        CHECK(out_g == out_c);
        CHECK(in_g == in_c);
        CHECK(c.m() <= g.m());
        CHECK(c.n() == g.n());
    }
}

TEST_CASE("benchmark suites") {
    BenchmarkSpec s1;
    s1.replicates = 2;
    const auto pts1 = benchmark_points(s1);
    CHECK(pts1.size() == 69);
    CHECK(pts1.front().p == doctest::Approx(0.5));
    CHECK(pts1[29].p == doctest::Approx(0.21));
    CHECK(pts1[30].p == doctest::Approx(0.195));
    CHECK(pts1.back().p == doctest::Approx(0.005));
    CHECK(benchmark_grid(s1).size() == 138);

    BenchmarkSpec s2;
    s2.suite = 2;
    s2.replicates = 1;
    const auto pts2 = benchmark_points(s2);
    CHECK(pts2.size() == 800);
    CHECK(pts2.front().p1 == doctest::Approx(0.025));
    CHECK(pts2.back().p1 == doctest::Approx(1.0));
    CHECK(pts2.back().p2 == doctest::Approx(0.95));

    BenchmarkSpec s3;
    s3.suite = 3;
    s3.n = 800;  // n/4 divisible by 8, so every factor is exact
    const auto pts3 = benchmark_points(s3);
    CHECK(pts3.size() == 28);
    std::vector<double> factors;
    for (const auto& gp : pts3) {
        CHECK(gp.p == doctest::Approx(0.1));
        if (gp.varied_set == Pout) factors.push_back(static_cast<double>(gp.sizes[Pout]) / 200.0);
        if (gp.size_exponent == 0) CHECK(gp.sizes == std::vector<std::size_t>{200, 200, 200, 200});
        for (int b = 0; b < 4; ++b)
            if (b != gp.varied_set) CHECK(gp.sizes[b] == 200);
    }
    CHECK(factors == std::vector<double>{0.125, 0.25, 0.5, 1, 2, 4, 8});
    s3.n = 1000;
    CHECK(benchmark_points(s3).front().sizes[Pout] == 31);  // lround(250 / 8)

    BenchmarkSpec bad;
    bad.suite = 4;
    CHECK_THROWS_AS(benchmark_points(bad), Error);
}

TEST_CASE("benchmark samples are reproducible and independent") {
    BenchmarkSpec s;
    s.n = 40;
    s.replicates = 3;
    s.seed = 7;
    s.p_grid = {0.3, 0.1};
    const auto a = benchmark_grid(s), b = benchmark_grid(s);
    REQUIRE(a.size() == 6);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].seed == b[i].seed);
        CHECK(generate_sample(a[i]).graph.edges() == generate_sample(b[i]).graph.edges());
    }
    CHECK(a[0].seed != a[1].seed);
    CHECK(a[0].point.index == 0);
    CHECK(a[3].point.index == 1);
    CHECK(a[4].replicate == 1);
}
