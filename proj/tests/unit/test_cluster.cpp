#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dcp/cluster.hpp"
#include "dcp/errors.hpp"
#include "dcp/metrics.hpp"
#include "dcp/synth.hpp"
#include "support.hpp"

using namespace dcp;

namespace {

Eigen::MatrixXd clouds(int per, std::uint64_t seed, std::vector<int>* truth) {
    const double centers[4][2] = {{0, 0}, {10, 0}, {0, 10}, {10, 10}};
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> noise(0.0, 0.5);
    Eigen::MatrixXd pts(4 * per, 2);
    truth->clear();
    for (int c = 0; c < 4; ++c)
        for (int i = 0; i < per; ++i) {
            pts(c * per + i, 0) = centers[c][0] + noise(gen);
            pts(c * per + i, 1) = centers[c][1] + noise(gen);
            truth->push_back(c);
        }
    return pts;
}

}  // namespace

TEST_CASE("row normalization") {
    Eigen::MatrixXd raw(3, 2);
    raw << 3, 4, 0, 0, -1, 0;
    const ScoreMatrix s = row_normalize_l2(raw);
    CHECK(s.raw == raw);
    CHECK(s.normalized(0, 0) == doctest::Approx(0.6));
    CHECK(s.normalized(0, 1) == doctest::Approx(0.8));
    CHECK(s.normalized.row(1).norm() == 0.0);
    CHECK(s.normalized(2, 0) == -1.0);
}

TEST_CASE("k-means recovers separated clouds") {
    std::vector<int> truth;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Eigen::MatrixXd pts = clouds(25, seed, &truth);
        const KMeansResult r = kmeans_pp(pts, 4, seed);
        CHECK(ari(r.labels, truth) == 1.0);
        CHECK(r.centers.rows() == 4);
        // inertia is the within-cluster sum of squares
        double w = 0;
        for (Eigen::Index i = 0; i < pts.rows(); ++i) w += (pts.row(i) - r.centers.row(r.labels[i])).squaredNorm();
        CHECK(r.inertia == doctest::Approx(w));
    }
}

TEST_CASE("k-means edge cases") {
    std::vector<int> truth;
    const Eigen::MatrixXd pts = clouds(3, 1, &truth);
    const KMeansResult one = kmeans_pp(pts, 1, 0);
    CHECK(std::all_of(one.labels.begin(), one.labels.end(), [](int l) { return l == 0; }));
    CHECK(one.centers.row(0).isApprox(pts.colwise().mean(), 1e-12));
    const KMeansResult all = kmeans_pp(pts, 12, 0);
    std::vector<int> sorted = all.labels;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ids(12);
    std::iota(ids.begin(), ids.end(), 0);
    CHECK(sorted == ids);
    CHECK(all.inertia == doctest::Approx(0.0));
    CHECK_THROWS_AS(kmeans_pp(pts, 13, 0), Error);
    CHECK_THROWS_AS(kmeans_pp(pts, 0, 0), Error);
}

TEST_CASE("k-means is deterministic and translation invariant") {
    std::vector<int> truth;
    std::mt19937_64 gen(9);
    std::uniform_real_distribution<double> u(0, 1);
    Eigen::MatrixXd pts(60, 3);
    for (Eigen::Index i = 0; i < pts.rows(); ++i)
        for (Eigen::Index j = 0; j < 3; ++j) pts(i, j) = u(gen);
    const KMeansResult a = kmeans_pp(pts, 4, 42), b = kmeans_pp(pts, 4, 42);
    CHECK(a.labels == b.labels);
    CHECK(a.inertia == b.inertia);
    Eigen::MatrixXd shifted = pts.rowwise() + Eigen::RowVector3d(0.25, -0.5, 0.125);
    const KMeansResult c = kmeans_pp(shifted, 4, 42);
    CHECK(ari(a.labels, c.labels) == 1.0);
}

TEST_CASE("cluster naming finds the planted assignment") {
    Partition planted;
    const DirectedGraph g = testing::ideal_graph(5, &planted);
    // cluster c holds block perm[c]
    std::vector<int> perm{0, 1, 2, 3};
    do {
        std::vector<int> labels(g.n());
        for (std::size_t v = 0; v < g.n(); ++v)
            labels[v] = static_cast<int>(std::find(perm.begin(), perm.end(), planted.labels[v]) - perm.begin());
        const NamedPartition np = map_clusters_to_sets(g, labels);
        CHECK(np.partition == planted);
        CHECK(np.naming == perm);
        CHECK(np.fit.log_lik == doctest::Approx(0.0));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("cluster naming agrees with exhaustive search") {
    std::mt19937_64 gen(4);
    for (int trial = 0; trial < 20; ++trial) {
        const PlantedGraph pg = sample_one_param(0.15, {6, 6, 6, 6}, 100 + trial);
        std::vector<int> labels = pg.planted.labels;
        for (std::size_t v = 0; v < labels.size(); v += 3) labels[v] = static_cast<int>(gen() % 4);
        double best = -1e300;
        std::vector<int> perm{0, 1, 2, 3};
        do {
            Partition p{labels, 4};
            for (int& l : p.labels) l = perm[l];
            best = std::max(best, log_likelihood(pg.graph, p, catalog("DCP4")).log_lik);
        } while (std::next_permutation(perm.begin(), perm.end()));
        const NamedPartition np = map_clusters_to_sets(pg.graph, labels);
        CHECK(np.fit.log_lik == doctest::Approx(best).epsilon(1e-12));
        CHECK(log_likelihood(pg.graph, np.partition, catalog("DCP4")).log_lik == doctest::Approx(best).epsilon(1e-12));
    }
}
