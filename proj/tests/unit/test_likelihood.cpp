#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "dcp/detection.hpp"
#include "dcp/errors.hpp"
#include "dcp/likelihood.hpp"
#include "dcp/metrics.hpp"
#include "dcp/synth.hpp"
#include "support.hpp"

using namespace dcp;

namespace {

// Sum of per-pair Bernoulli log-probabilities at the fitted (p1, p2).
double per_pair_log_lik(const DirectedGraph& g, const Partition& p, const BlockStructure& s, double* p1_out = nullptr,
                        double* p2_out = nullptr) {
    const auto a = testing::dense_adjacency(g);
    double e1 = 0, n1 = 0, e0 = 0, n0 = 0;
    for (std::size_t u = 0; u < g.n(); ++u)
        for (std::size_t v = 0; v < g.n(); ++v) {
            if (s.at(p.labels[u], p.labels[v])) {
                n1 += 1;
                e1 += a[u][v];
            } else {
                n0 += 1;
                e0 += a[u][v];
            }
        }
    double p1 = n1 > 0 ? e1 / n1 : 0, p0 = n0 > 0 ? e0 / n0 : 0;
    if (n1 > 0 && n0 > 0 && p1 < p0) std::swap(p1, p0);
    if (p1_out) *p1_out = p1;
    if (p2_out) *p2_out = p0;
    double ll = 0;
    auto term = [](int x, double q) {
        const double prob = x ? q : 1 - q;
        return prob == 0 ? -std::numeric_limits<double>::infinity() : std::log(prob);
    };
    for (std::size_t u = 0; u < g.n(); ++u)
        for (std::size_t v = 0; v < g.n(); ++v) ll += term(a[u][v], s.at(p.labels[u], p.labels[v]) ? p1 : p0);
    return ll;
}

}  // namespace

TEST_CASE("helpers") {
    CHECK(xlogp(0.0, -std::numeric_limits<double>::infinity()) == 0.0);
    CHECK(xlogp(2.0, std::log(0.5)) == doctest::Approx(-2 * std::log(2.0)));
    CHECK(bernoulli_log_lik(0, 10, 0.0) == 0.0);
    CHECK(bernoulli_log_lik(10, 10, 1.0) == 0.0);
    CHECK(bernoulli_log_lik(3, 10, 0.3) == doctest::Approx(3 * std::log(0.3) + 7 * std::log(0.7)));
}

TEST_CASE("noiseless structure has log-likelihood 0") {
    Partition planted;
    const DirectedGraph g = testing::ideal_graph(6, &planted);
    const LikelihoodFit f = log_likelihood(g, planted, catalog("DCP4"));
    CHECK(f.log_lik == 0.0);
    CHECK(f.p1 == 1.0);
    CHECK(f.p2 == 0.0);
    CHECK(f.pairs_signal == 5 * 36);
    CHECK(f.edges_signal == static_cast<std::int64_t>(g.m()));
}

TEST_CASE("per-pair oracle on small graphs") {
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 40; ++trial) {
        const DirectedGraph g = testing::random_graph(8, 0.2 + 0.015 * trial, gen);
        const Partition p{testing::random_labels(8, 4, gen), 4};
        for (const auto& id : catalog_ids()) {
            const BlockStructure s = catalog(id);
            if (s.k != 4) continue;
            double p1, p2;
            const double want = per_pair_log_lik(g, p, s, &p1, &p2);
            const LikelihoodFit f = log_likelihood(g, p, s);
            CHECK(f.p1 == doctest::Approx(p1));
            CHECK(f.p2 == doctest::Approx(p2));
            if (std::isinf(want))
                CHECK(f.log_lik == want);
            else
                CHECK(f.log_lik == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("inverted densities are swapped") {
    // Edges only on M = 0 pairs.
    const Partition p{{0, 1, 2, 3}, 4};
    const DirectedGraph g(4, {{0, 0}, {3, 3}, {1, 0}});
    const LikelihoodFit f = log_likelihood(g, p, catalog("DCP4"));
    CHECK(f.swapped);
    CHECK(f.p1 == doctest::Approx(3.0 / 11));
    CHECK(f.p2 == 0.0);
    CHECK(f.log_lik == -std::numeric_limits<double>::infinity());
    const LikelihoodFit direct = fit_from_counts(1, 5, 0, 11);
    CHECK_FALSE(direct.swapped);
}

TEST_CASE("ER graph: fitted densities near the edge probability") {
    const DirectedGraph g = sample_er(200, 0.1, 4);
    std::mt19937_64 gen(1);
    const Partition p{testing::random_labels(200, 4, gen), 4};
    const LikelihoodFit f = log_likelihood(g, p, catalog("DCP4"));
    CHECK(std::abs(f.p1 - 0.1) < 0.02);
    CHECK(std::abs(f.p2 - 0.1) < 0.02);
}

TEST_CASE("incremental moves match full recomputation") {
    std::mt19937_64 gen(41);
    for (int trial = 0; trial < 10; ++trial) {
        const PlantedGraph pg = sample_one_param(0.1 + 0.02 * trial, {8, 8, 8, 8}, 50 + trial);
        Partition p = pg.planted;
        std::vector<std::pair<Vertex, int>> moves;
        for (int t = 0; t < 60; ++t) moves.emplace_back(static_cast<Vertex>(gen() % 32), static_cast<int>(gen() % 4));
        const auto fits = fits_along_moves(pg.graph, p, catalog("DCP4"), moves);
        REQUIRE(fits.size() == moves.size());
        for (std::size_t t = 0; t < moves.size(); ++t) {
            p.labels[moves[t].first] = moves[t].second;
            const LikelihoodFit full = log_likelihood(pg.graph, p, catalog("DCP4"));
            CHECK(fits[t].edges_signal == full.edges_signal);
            CHECK(fits[t].pairs_signal == full.pairs_signal);
            CHECK(fits[t].log_lik == doctest::Approx(full.log_lik).epsilon(1e-12));
        }
    }
}

TEST_CASE("likelihood is invariant under vertex relabeling") {
    const PlantedGraph pg = sample_one_param(0.1, {10, 10, 10, 10}, 2);
    std::vector<Vertex> perm(40);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 gen(3);
    std::shuffle(perm.begin(), perm.end(), gen);
    Partition q{std::vector<int>(40), 4};
    for (std::size_t v = 0; v < 40; ++v) q.labels[perm[v]] = pg.planted.labels[v];
    CHECK(log_likelihood(pg.graph.relabeled(perm), q, catalog("DCP4")).log_lik ==
          doctest::Approx(log_likelihood(pg.graph, pg.planted, catalog("DCP4")).log_lik));
}

TEST_CASE("maximizers recover the noiseless structure") {
    Partition planted;
    const DirectedGraph g = testing::ideal_graph(8, &planted);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const DetectionResult h = hill_climb(g, seed);
        const DetectionResult m = max_like(g, seed);
        CHECK(ari(h.partition, planted) == 1.0);
        CHECK(ari(m.partition, planted) == 1.0);
        CHECK(m.fit.log_lik == doctest::Approx(0.0));
    }
}

TEST_CASE("maximizers on planted graphs") {
    const PlantedGraph pg = sample_one_param(0.15, {30, 30, 30, 30}, 7);
    const double truth = log_likelihood(pg.graph, pg.planted, catalog("DCP4")).log_lik;
    const DetectionResult m = max_like(pg.graph, 1);
    CHECK(m.fit.log_lik >= truth - 1e-9);
    CHECK(ari(m.partition, pg.planted) > 0.9);
    CHECK(m.fit.log_lik == doctest::Approx(log_likelihood(pg.graph, m.partition, catalog("DCP4")).log_lik));
    const auto& trace = m.diagnostics.log_lik_trace;
    REQUIRE_FALSE(trace.empty());
    for (std::size_t t = 1; t < trace.size(); ++t) CHECK(trace[t] >= trace[t - 1]);
    CHECK(trace.back() == doctest::Approx(m.fit.log_lik));
    const DetectionResult h = hill_climb(pg.graph, 1);
    CHECK(ari(h.partition, pg.planted) > 0.9);
    CHECK(h.partition == hill_climb(pg.graph, 1).partition);
}

TEST_CASE("size mismatch is an error") {
    const DirectedGraph g(3, {{0, 1}});
    CHECK_THROWS_AS(log_likelihood(g, Partition{{0, 1}, 4}, catalog("DCP4")), Error);
    CHECK_THROWS_AS(log_likelihood(g, Partition{{0, 1, 5}, 4}, catalog("DCP4")), Error);
}
