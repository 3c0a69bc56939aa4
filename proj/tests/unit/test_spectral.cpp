#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "dcp/errors.hpp"
#include "dcp/spectral.hpp"
#include "support.hpp"

using namespace dcp;

namespace {

Eigen::MatrixXd dense(const DirectedGraph& g) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n(), g.n());
    for (const auto& [u, v] : g.edges()) a(u, v) = 1.0;
    return a;
}

double sign_free_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    return std::min((x - y).cwiseAbs().maxCoeff(), (x + y).cwiseAbs().maxCoeff());
}

}  // namespace

TEST_CASE("rank-2 structure is reconstructed exactly") {
    const DirectedGraph g = testing::ideal_graph(6);
    const SvdFactors f = truncated_svd(g, 2, 1);
    CHECK((low_rank_reconstruct(f) - dense(g)).norm() < 1e-8);
    CHECK(f.rank() == 2);
    CHECK(f.sigma[0] >= f.sigma[1]);
}

TEST_CASE("top singular values match a dense SVD") {
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 20; ++trial) {
        const DirectedGraph g = testing::random_graph(5, 0.5, gen);
        if (g.m() == 0) continue;
        const Eigen::JacobiSVD<Eigen::MatrixXd> oracle(dense(g));
        const SvdFactors f = truncated_svd(g, 2, trial);
        CHECK(std::abs(f.sigma[0] - oracle.singularValues()[0]) < 1e-8);
        CHECK(std::abs(f.sigma[1] - oracle.singularValues()[1]) < 1e-8);
    }
}

TEST_CASE("factors are orthonormal and residuals small") {
    std::mt19937_64 gen(19);
    const DirectedGraph g = testing::random_graph(60, 0.1, gen);
    const SvdFactors f = truncated_svd(g, 3, 5);
    const Eigen::MatrixXd a = dense(g);
    CHECK((f.u.transpose() * f.u - Eigen::MatrixXd::Identity(3, 3)).norm() < 1e-8);
    CHECK((f.v.transpose() * f.v - Eigen::MatrixXd::Identity(3, 3)).norm() < 1e-8);
    for (int i = 0; i < 3; ++i) CHECK((a * f.v.col(i) - f.sigma[i] * f.u.col(i)).norm() <= 1e-10 * f.sigma[0] * 10);
    for (int i = 0; i < 3; ++i) {
        Eigen::Index arg;
        f.u.col(i).cwiseAbs().maxCoeff(&arg);
        CHECK(f.u(arg, i) > 0);
    }
}

TEST_CASE("zero graph and full rank") {
    const SvdFactors z = truncated_svd(DirectedGraph(4, {}), 2, 1);
    CHECK(z.sigma.cwiseAbs().maxCoeff() == 0.0);
    CHECK(low_rank_reconstruct(z).norm() == 0.0);

    std::mt19937_64 gen(23);
    const DirectedGraph g = testing::random_graph(6, 0.5, gen);
    const SvdFactors f = truncated_svd(g, 6, 2);
    CHECK((low_rank_reconstruct(f) - dense(g)).norm() < 1e-8);

    SvdFactors zero = f;
    zero.sigma.setZero();
    CHECK(low_rank_reconstruct(zero).norm() == 0.0);
    CHECK_THROWS_AS(truncated_svd(g, 7, 1), Error);
    CHECK_THROWS_AS(truncated_svd(g, 0, 1), Error);
}

TEST_CASE("factored row and column sums") {
    const DirectedGraph g = testing::ideal_graph(5);
    const SvdFactors f = truncated_svd(g, 2, 4);
    const Eigen::VectorXd rows = low_rank_row_sums(f), cols = low_rank_col_sums(f);
    for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) {
        CHECK(std::abs(rows[v] - static_cast<double>(g.out_degree(v))) < 1e-8);
        CHECK(std::abs(cols[v] - static_cast<double>(g.in_degree(v))) < 1e-8);
    }
    std::mt19937_64 gen(29);
    const DirectedGraph r = testing::random_graph(12, 0.3, gen);
    const SvdFactors fr = truncated_svd(r, 2, 4);
    const Eigen::MatrixXd rec = low_rank_reconstruct(fr);
    CHECK((low_rank_row_sums(fr) - rec.rowwise().sum()).norm() < 1e-10);
    CHECK((low_rank_col_sums(fr) - rec.colwise().sum().transpose()).norm() < 1e-10);
}

TEST_CASE("rank-2 truncation beats random rank-2 matrices") {
    std::mt19937_64 gen(31);
    std::normal_distribution<double> z;
    for (int trial = 0; trial < 50; ++trial) {
        const DirectedGraph g = testing::random_graph(20, 0.3, gen);
        const Eigen::MatrixXd a = dense(g);
        const double best = (a - low_rank_reconstruct(truncated_svd(g, 2, trial))).norm();
        Eigen::MatrixXd r = Eigen::MatrixXd::Zero(20, 20);
        for (int t = 0; t < 2; ++t) {
            Eigen::VectorXd x(20), y(20);
            for (int i = 0; i < 20; ++i) x[i] = z(gen), y[i] = z(gen);
            r += x * y.transpose();
        }
        CHECK(best <= (a - r).norm() + 1e-12);
    }
}

TEST_CASE("HITS on a single edge") {
    const HitsScores h = hits(DirectedGraph(3, {{0, 1}}));
    CHECK(h.converged);
    CHECK(h.hub[0] == doctest::Approx(1.0));
    CHECK(h.hub[1] == doctest::Approx(0.0));
    CHECK(h.authority[1] == doctest::Approx(1.0));
    CHECK(h.authority[0] == doctest::Approx(0.0));
    CHECK_THROWS_AS(hits(DirectedGraph(3, {})), Error);
}

TEST_CASE("HITS vectors are the principal singular vectors") {
    std::mt19937_64 gen(37);
    for (int trial = 0; trial < 20; ++trial) {
        const DirectedGraph g = testing::random_graph(20, 0.25, gen);
        const HitsScores h = hits(g);
        const Eigen::JacobiSVD<Eigen::MatrixXd> oracle(dense(g), Eigen::ComputeFullU | Eigen::ComputeFullV);
        CHECK(sign_free_distance(h.hub, oracle.matrixU().col(0)) < 1e-6);
        CHECK(sign_free_distance(h.authority, oracle.matrixV().col(0)) < 1e-6);
        CHECK(h.hub.minCoeff() >= 0.0);
        CHECK(h.authority.minCoeff() >= 0.0);
        CHECK(h.hub.norm() == doctest::Approx(1.0));

        // power iteration on A A^T
        const Eigen::MatrixXd aat = dense(g) * dense(g).transpose();
        Eigen::VectorXd x = Eigen::VectorXd::Ones(20);
        for (int it = 0; it < 5000; ++it) x = (aat * x).normalized();
        CHECK(sign_free_distance(h.hub, x) < 1e-6);
    }
}

TEST_CASE("HITS on the noiseless structure") {
    Partition planted;
    const DirectedGraph g = testing::ideal_graph(5, &planted);
    const HitsScores h = hits(g);
    // Cin has the largest authority; Pout is never pointed to and Pin
    // points nowhere.
    const double top = h.authority.maxCoeff();
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (planted.labels[v] == 1) CHECK(h.authority[v] == doctest::Approx(top));
        if (planted.labels[v] != 1) CHECK(h.authority[v] < top - 0.1);
        if (planted.labels[v] == 0) CHECK(h.authority[v] < 1e-8);
        if (planted.labels[v] == 3) CHECK(h.hub[v] < 1e-8);
    }
    const SvdFactors f = truncated_svd(g, 1, 3);
    CHECK(sign_free_distance(h.hub, f.u.col(0)) < 1e-6);
    CHECK(sign_free_distance(h.authority, f.v.col(0)) < 1e-6);
}

TEST_CASE("HITS commutes with relabeling") {
    std::mt19937_64 gen(41);
    const DirectedGraph g = testing::random_graph(25, 0.2, gen);
    std::vector<Vertex> perm(25);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    const HitsScores a = hits(g), b = hits(g.relabeled(perm));
    for (Vertex v = 0; v < 25; ++v) {
        CHECK(std::abs(a.hub[v] - b.hub[perm[v]]) < 1e-8);
        CHECK(std::abs(a.authority[v] - b.authority[perm[v]]) < 1e-8);
    }
}

TEST_CASE("symmetric subspace iteration matches a dense eigensolver") {
    std::mt19937_64 gen(43);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::MatrixXd a = dense(testing::random_graph(15, 0.3, gen));
        const Eigen::MatrixXd s = a * a.transpose() + a.transpose() * a;
        const auto op = [&](const Eigen::MatrixXd& x) -> Eigen::MatrixXd { return s * x; };
        const EigenResult r = top_eigenpairs(op, 15, 3, trial, 1e-10);
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> oracle(s);
        for (int i = 0; i < 3; ++i) {
            CHECK(std::abs(r.values[i] - oracle.eigenvalues()[14 - i]) < 1e-8 * oracle.eigenvalues()[14]);
            CHECK((s * r.vectors.col(i) - r.values[i] * r.vectors.col(i)).norm() < 1e-6 * oracle.eigenvalues()[14]);
        }
    }
}
