#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dcp/graph.hpp"
#include "dcp/partition.hpp"
#include "dcp/structures.hpp"

namespace dcp {

/// Two-parameter block-model fit. p1 is the density on M = 1 pairs ("L"
/// pairs for DCP4), p2 elsewhere; when the empirical densities come out
/// inverted the two are swapped so that p1 >= p2, and the likelihood is
/// evaluated at the swapped values.
struct LikelihoodFit {
    double log_lik = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
    std::string structure_id;
    std::int64_t edges_signal = 0;  // observed edges on M = 1 pairs
    std::int64_t pairs_signal = 0;  // number of M = 1 ordered pairs
    std::int64_t edges_noise = 0;
    std::int64_t pairs_noise = 0;
    bool swapped = false;
};

/// Per-block sizes and k x k edge counts (edges from block a to block b).
struct BlockCounts {
    int k = 0;
    std::vector<std::int64_t> sizes;
    std::vector<std::int64_t> edges;  // row-major

    std::int64_t edge(int a, int b) const { return edges[static_cast<std::size_t>(a) * k + b]; }
};

BlockCounts block_counts(const DirectedGraph& g, const Partition& p);

/// x log p with 0 log 0 = 0 (and 0 log anything = 0).
double xlogp(double x, double log_p);

/// Bernoulli log-likelihood of `edges` successes among `pairs` trials at p.
double bernoulli_log_lik(std::int64_t edges, std::int64_t pairs, double p);

LikelihoodFit fit_from_counts(std::int64_t edges_signal, std::int64_t pairs_signal, std::int64_t edges_noise,
                              std::int64_t pairs_noise);

/// Fit with blocks renamed: block b of `counts` plays structure block naming[b].
LikelihoodFit evaluate_naming(const BlockCounts& counts, const BlockStructure& s, std::span<const int> naming);

/// Profile log-likelihood over all n^2 ordered pairs, self-pairs included.
LikelihoodFit log_likelihood(const DirectedGraph& g, const Partition& p, const BlockStructure& s);

/// Applies single-vertex moves in order, predicting the fit after each one
/// from neighbour-label counts (the update the maximizers use) rather than
/// recounting. Exposed so the incremental bookkeeping can be checked.
std::vector<LikelihoodFit> fits_along_moves(const DirectedGraph& g, const Partition& p, const BlockStructure& s,
                                            std::span<const std::pair<Vertex, int>> moves);

struct DetectionResult;

struct HillClimbOptions {
    int restarts = 10;
    int max_sweeps = 5000;
};

/// Greedy SBM fit: per restart, alternate MLE (p1, p2) and a random-order
/// sweep moving each vertex to its best set; keep the best restart.
DetectionResult hill_climb(const DirectedGraph& g, std::uint64_t seed, const HillClimbOptions& opt = {},
                           const BlockStructure& s = catalog("DCP4"));

struct MaxLikeOptions {
    int restarts = 1;
    int max_passes = 1000;
};

/// Kernighan-Lin style maximization: each pass repeatedly applies the best
/// single-vertex move among unlocked vertices, locks it, and tracks the best
/// partition seen; passes restart from the best partition while it improves.
DetectionResult max_like(const DirectedGraph& g, std::uint64_t seed, const MaxLikeOptions& opt = {},
                         const BlockStructure& s = catalog("DCP4"));

}  // namespace dcp
