#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dcp/graph.hpp"
#include "dcp/partition.hpp"
#include "dcp/structures.hpp"

namespace dcp {

struct SbmParams {
    std::vector<std::size_t> sizes;
    double p1 = 1.0;  // probability where M = 1
    double p2 = 0.0;  // probability where M = 0
};

struct PlantedGraph {
    DirectedGraph graph;
    Partition planted;
};

/// Stochastic block model with probability p1 on M = 1 block pairs and p2
/// elsewhere. Every ordered pair, including (u, u), is drawn independently.
/// Vertices are laid out block by block in structure order.
PlantedGraph sample_sbm(const BlockStructure& structure, const SbmParams& params, std::uint64_t seed);

/// One-parameter DCP4 model: p1 = 0.5 + p, p2 = 0.5 - p, p in [0, 0.5].
PlantedGraph sample_one_param(double p, const std::vector<std::size_t>& sizes, std::uint64_t seed);

/// Directed Erdos-Renyi graph without self-loops.
DirectedGraph sample_er(std::size_t n, double p_edge, std::uint64_t seed);

/// Directed configuration model: random matching of out-stubs to in-stubs.
/// Multi-edges are collapsed and self-loops retained. When `raw_pairs` is
/// given it receives the uncollapsed stub pairing.
DirectedGraph sample_configuration(const DirectedGraph& g, std::uint64_t seed,
                                   std::vector<Edge>* raw_pairs = nullptr);

/// Benchmark parameter suites.
///   1: one-parameter model over a grid of p, equal blocks.
///   2: two-parameter model over (p1, p2/p1), equal blocks.
///   3: one-parameter model at p = 0.1 with one block resized by 2^f, f in -3..3.
struct BenchmarkSpec {
    int suite = 1;
    std::size_t n = 1000;
    std::size_t replicates = 50;
    std::uint64_t seed = 0;
    // Optional grid overrides; empty means the default grid of the suite.
    std::vector<double> p_grid;         // suite 1
    std::vector<double> p1_grid;        // suite 2
    std::vector<double> ratio_grid;     // suite 2
    std::vector<int> varied_sets;       // suite 3, DCP4 block indices
    std::vector<int> size_exponents;    // suite 3
    double suite3_p = 0.1;
};

struct GridPoint {
    std::size_t index = 0;
    int suite = 1;
    double p = 0.0;         // suites 1 and 3
    double p1 = 0.0;        // effective signal probability
    double p2 = 0.0;        // effective noise probability
    double ratio = 0.0;     // suite 2: p2 / p1
    int varied_set = -1;    // suite 3
    int size_exponent = 0;  // suite 3
    std::vector<std::size_t> sizes;
};

struct BenchmarkSample {
    GridPoint point;
    std::size_t replicate = 0;
    std::uint64_t seed = 0;
};

std::vector<double> default_suite1_grid();
std::vector<double> default_suite2_p1_grid();
std::vector<double> default_suite2_ratio_grid();

/// All grid points of the suite, in order.
std::vector<GridPoint> benchmark_points(const BenchmarkSpec& spec);

/// Enumerates (grid point, replicate) pairs in grid-major order together
/// with their derived seeds. Sampling is deferred to `generate_sample`.
std::vector<BenchmarkSample> benchmark_grid(const BenchmarkSpec& spec);

PlantedGraph generate_sample(const BenchmarkSample& s);

}  // namespace dcp
