#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dcp {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class Direction { In, Out };

struct DegreeVector {
    Direction direction;
    std::vector<std::int64_t> values;
};

/// Simple directed graph with self-loops allowed.
///
/// Edges are stored deduplicated and sorted, with CSR adjacency in both
/// directions. Immutable once built.
class DirectedGraph {
public:
    DirectedGraph() = default;

    /// Builds from an arbitrary edge list. Duplicates are collapsed; every
    /// endpoint must be in [0, n).
    DirectedGraph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> names = {});

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::span<const Vertex> out_neighbors(Vertex v) const {
        return {out_adj_.data() + out_off_[v], out_adj_.data() + out_off_[v + 1]};
    }
    std::span<const Vertex> in_neighbors(Vertex v) const {
        return {in_adj_.data() + in_off_[v], in_adj_.data() + in_off_[v + 1]};
    }

    std::int64_t out_degree(Vertex v) const { return out_off_[v + 1] - out_off_[v]; }
    std::int64_t in_degree(Vertex v) const { return in_off_[v + 1] - in_off_[v]; }

    bool has_edge(Vertex u, Vertex v) const;
    bool has_self_loop(Vertex v) const { return has_edge(v, v); }

    /// m / n^2, self-pairs counted.
    double density() const;

    bool has_names() const noexcept { return !names_.empty(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    /// External label of v; the decimal index when the graph is unnamed.
    std::string name(Vertex v) const;

    /// Graph with vertex v mapped to perm[v].
    DirectedGraph relabeled(std::span<const Vertex> perm) const;

    /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
    DirectedGraph induced(std::span<const Vertex> vertices) const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::int64_t> out_off_{0}, in_off_{0};
    std::vector<Vertex> out_adj_, in_adj_;
    std::vector<std::string> names_;
};

struct EdgeListDiagnostics {
    std::size_t lines = 0;
    std::size_t records = 0;
    std::size_t duplicates_collapsed = 0;
    std::size_t self_loops = 0;
};

/// Parses line-oriented "source target" records (whitespace or a single
/// comma between tokens, '#' comments). Vertices are indexed in order of
/// first appearance and keep their string labels.
DirectedGraph from_edge_list(std::string_view text, EdgeListDiagnostics* diag = nullptr);
DirectedGraph read_edge_list(const std::string& path, EdgeListDiagnostics* diag = nullptr);

/// One "source target" line per edge, using vertex names.
std::string to_edge_list(const DirectedGraph& g);
void write_edge_list(const DirectedGraph& g, const std::string& path);

struct Subgraph {
    DirectedGraph graph;
    std::vector<Vertex> original;  // original index of each retained vertex
};

/// Largest weakly connected component; ties go to the component holding
/// the smallest vertex index.
Subgraph largest_weakly_connected_component(const DirectedGraph& g);

std::pair<DegreeVector, DegreeVector> degrees(const DirectedGraph& g);

}  // namespace dcp
