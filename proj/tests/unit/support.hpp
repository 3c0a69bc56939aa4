#pragma once

#include <random>
#include <vector>

#include "dcp/graph.hpp"
#include "dcp/partition.hpp"

namespace testing {

// Block of vertex v when blocks of the given sizes are laid out in order.
inline std::vector<int> block_labels(const std::vector<std::size_t>& sizes) {
    std::vector<int> labels;
    for (std::size_t b = 0; b < sizes.size(); ++b) labels.insert(labels.end(), sizes[b], static_cast<int>(b));
    return labels;
}

// The noiseless four-set graph written out from its description: every
// vertex except those in Pin points into Cin, and Cout points to every
// vertex outside Pout. Self-loops included. Blocks ordered Pout, Cin, Cout, Pin.
inline bool ideal_edge(int bu, int bv) { return (bv == 1 && bu != 3) || (bu == 2 && bv != 0); }

inline dcp::DirectedGraph ideal_graph(std::size_t q, dcp::Partition* planted = nullptr) {
    const auto labels = block_labels({q, q, q, q});
    std::vector<dcp::Edge> e;
    for (std::size_t u = 0; u < labels.size(); ++u)
        for (std::size_t v = 0; v < labels.size(); ++v)
            if (ideal_edge(labels[u], labels[v])) e.emplace_back(static_cast<dcp::Vertex>(u), static_cast<dcp::Vertex>(v));
    if (planted) *planted = dcp::Partition{labels, 4};
    return dcp::DirectedGraph(labels.size(), std::move(e));
}

inline dcp::DirectedGraph random_graph(std::size_t n, double p, std::mt19937_64& gen, bool loops = true) {
    std::bernoulli_distribution coin(p);
    std::vector<dcp::Edge> e;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if ((loops || u != v) && coin(gen)) e.emplace_back(static_cast<dcp::Vertex>(u), static_cast<dcp::Vertex>(v));
    return dcp::DirectedGraph(n, std::move(e));
}

inline std::vector<std::vector<int>> dense_adjacency(const dcp::DirectedGraph& g) {
    std::vector<std::vector<int>> a(g.n(), std::vector<int>(g.n(), 0));
    for (const auto& [u, v] : g.edges()) a[u][v] = 1;
    return a;
}

inline std::vector<int> random_labels(std::size_t n, int k, std::mt19937_64& gen) {
    std::uniform_int_distribution<int> d(0, k - 1);
    std::vector<int> l(n);
    for (auto& x : l) x = d(gen);
    return l;
}

}  // namespace testing
