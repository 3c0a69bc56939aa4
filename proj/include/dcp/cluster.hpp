#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "dcp/detection.hpp"
#include "dcp/graph.hpp"
#include "dcp/likelihood.hpp"
#include "dcp/partition.hpp"
#include "dcp/structures.hpp"

namespace dcp {

/// Divides each row by its Euclidean norm; zero rows are left as zero.
ScoreMatrix row_normalize_l2(const Eigen::MatrixXd& raw);

struct KMeansOptions {
    int n_init = 10;
    int max_iter = 300;
};

struct KMeansResult {
    std::vector<int> labels;
    double inertia = 0.0;
    Eigen::MatrixXd centers;  // k x d
    int iterations = 0;       // Lloyd iterations of the selected restart
};

/// k-means with D^2-weighted seeding. The restart with the lowest
/// within-cluster sum of squares wins (earliest restart on ties). A cluster
/// that empties during Lloyd iterations is reseeded at the point farthest
/// from its assigned center.
KMeansResult kmeans_pp(const Eigen::MatrixXd& points, int k, std::uint64_t seed, const KMeansOptions& opt = {});

struct NamedPartition {
    Partition partition;
    LikelihoodFit fit;
    std::vector<int> naming;  // naming[cluster] = structure block
};

/// Tries every assignment of the k clusters to the k structure blocks and
/// keeps the one with the highest log-likelihood (lexicographically first
/// permutation on ties). Empty clusters become empty blocks.
NamedPartition map_clusters_to_sets(const DirectedGraph& g, const std::vector<int>& labels,
                                    const BlockStructure& s = catalog("DCP4"));

/// Clusters `points` into the k blocks of `s` and names them by likelihood.
DetectionResult cluster_and_name(const DirectedGraph& g, ScoreMatrix scores, const Eigen::MatrixXd& points,
                                 std::uint64_t seed, const BlockStructure& s = catalog("DCP4"));

}  // namespace dcp
