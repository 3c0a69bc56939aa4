#include "dcp/cluster.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "dcp/errors.hpp"
#include "dcp/rng.hpp"

namespace dcp {

ScoreMatrix row_normalize_l2(const Eigen::MatrixXd& raw) {
    ScoreMatrix s{raw, raw};
    for (Eigen::Index i = 0; i < raw.rows(); ++i) {
        const double norm = raw.row(i).norm();
        if (norm > 0.0) s.normalized.row(i) /= norm;
    }
    return s;
}

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

double sq_dist(const RowMatrix& x, Eigen::Index i, const RowMatrix& c, Eigen::Index j) {
    return (x.row(i) - c.row(j)).squaredNorm();
}

// Nearest center per point (lowest center index on ties); returns inertia.
double assign(const RowMatrix& x, const RowMatrix& c, std::vector<int>& labels) {
    double inertia = 0.0;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        int arg = 0;
        double best = sq_dist(x, i, c, 0);
        for (Eigen::Index j = 1; j < c.rows(); ++j) {
            const double d = sq_dist(x, i, c, j);
            if (d < best) {
                best = d;
                arg = static_cast<int>(j);
            }
        }
        labels[i] = arg;
        inertia += best;
    }
    return inertia;
}

RowMatrix seed_centers(const RowMatrix& x, int k, Rng& rng) {
    const Eigen::Index n = x.rows();
    RowMatrix c(k, x.cols());
    c.row(0) = x.row(static_cast<Eigen::Index>(rng.below(n)));
    std::vector<double> d2(n);
    for (Eigen::Index i = 0; i < n; ++i) d2[i] = sq_dist(x, i, c, 0);
    for (int j = 1; j < k; ++j) {
        const double total = std::accumulate(d2.begin(), d2.end(), 0.0);
        Eigen::Index pick = 0;
        if (total > 0.0) {
            const double target = rng.uniform() * total;
            double acc = 0.0;
            pick = n - 1;
            for (Eigen::Index i = 0; i < n; ++i) {
                acc += d2[i];
                if (acc > target && d2[i] > 0.0) {
                    pick = i;
                    break;
                }
            }
            while (d2[pick] <= 0.0 && pick > 0) --pick;
        } else {
            pick = static_cast<Eigen::Index>(rng.below(n));
        }
        c.row(j) = x.row(pick);
        for (Eigen::Index i = 0; i < n; ++i) d2[i] = std::min(d2[i], sq_dist(x, i, c, j));
    }
    return c;
}

void update_centers(const RowMatrix& x, const std::vector<int>& labels, RowMatrix& c) {
    const int k = static_cast<int>(c.rows());
    RowMatrix sum = RowMatrix::Zero(k, x.cols());
    std::vector<std::size_t> count(k, 0);
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        sum.row(labels[i]) += x.row(i);
        ++count[labels[i]];
    }
    std::vector<double> far(x.rows());
    for (Eigen::Index i = 0; i < x.rows(); ++i) far[i] = sq_dist(x, i, c, labels[i]);
    for (int j = 0; j < k; ++j) {
        if (count[j] > 0) {
            c.row(j) = sum.row(j) / static_cast<double>(count[j]);
        } else {
            auto it = std::max_element(far.begin(), far.end());
            const auto idx = static_cast<Eigen::Index>(it - far.begin());
            c.row(j) = x.row(idx);
            *it = -1.0;
        }
    }
}

}  // namespace

KMeansResult kmeans_pp(const Eigen::MatrixXd& points, int k, std::uint64_t seed, const KMeansOptions& opt) {
    const Eigen::Index n = points.rows();
    if (k < 1) throw Error("kmeans_pp: k must be positive");
    if (n < k) throw Error("kmeans_pp: fewer points than clusters");
    const RowMatrix x = points;

    KMeansResult best;
    best.inertia = std::numeric_limits<double>::infinity();
    for (int init = 0; init < std::max(opt.n_init, 1); ++init) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(init)));
        RowMatrix c = seed_centers(x, k, rng);
        std::vector<int> labels(n), next(n);
        double inertia = assign(x, c, labels);
        int it = 0;
        while (it < opt.max_iter) {
            ++it;
            update_centers(x, labels, c);
            inertia = assign(x, c, next);
            if (next == labels) break;
            labels.swap(next);
        }
        // inertia against the final centers
        inertia = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) inertia += sq_dist(x, i, c, labels[i]);
        if (inertia < best.inertia) {
            best.inertia = inertia;
            best.labels = labels;
            best.centers = c;
            best.iterations = it;
        }
    }
    return best;
}

NamedPartition map_clusters_to_sets(const DirectedGraph& g, const std::vector<int>& labels, const BlockStructure& s) {
    const BlockCounts counts = block_counts(g, Partition{labels, s.k});
    std::vector<int> perm(s.k);
    std::iota(perm.begin(), perm.end(), 0);
    NamedPartition out;
    bool first = true;
    do {
        LikelihoodFit f = evaluate_naming(counts, s, perm);
        if (first || f.log_lik > out.fit.log_lik) {
            out.fit = f;
            out.naming = perm;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    out.partition.k = s.k;
    out.partition.labels.resize(labels.size());
    for (std::size_t v = 0; v < labels.size(); ++v) out.partition.labels[v] = out.naming[labels[v]];
    return out;
}

DetectionResult cluster_and_name(const DirectedGraph& g, ScoreMatrix scores, const Eigen::MatrixXd& points,
                                 std::uint64_t seed, const BlockStructure& s) {
    KMeansResult km = kmeans_pp(points, s.k, seed);
    NamedPartition np = map_clusters_to_sets(g, km.labels, s);
    DetectionResult r;
    r.partition = std::move(np.partition);
    r.fit = np.fit;
    r.scores = std::move(scores);
    r.diagnostics.seed = seed;
    return r;
}

}  // namespace dcp
