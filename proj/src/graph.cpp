#include "dcp/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "dcp/errors.hpp"

namespace dcp {

namespace {

void build_csr(std::size_t n, const std::vector<Edge>& edges, bool by_source,
               std::vector<std::int64_t>& off, std::vector<Vertex>& adj) {
    off.assign(n + 1, 0);
    for (const auto& [u, v] : edges) ++off[(by_source ? u : v) + 1];
    std::partial_sum(off.begin(), off.end(), off.begin());
    adj.resize(edges.size());
    std::vector<std::int64_t> pos(off.begin(), off.end() - 1);
    for (const auto& [u, v] : edges) {
        if (by_source)
            adj[pos[u]++] = v;
        else
            adj[pos[v]++] = u;
    }
    // edges are sorted by (u, v) so out-lists are sorted already
    if (!by_source) {
        for (std::size_t i = 0; i < n; ++i) std::sort(adj.begin() + off[i], adj.begin() + off[i + 1]);
    }
}

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n\v\f";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

}  // namespace

DirectedGraph::DirectedGraph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> names)
    : n_(n), edges_(std::move(edges)), names_(std::move(names)) {
    if (!names_.empty() && names_.size() != n_) throw Error("name table size does not match vertex count");
    for (const auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n_ || static_cast<std::size_t>(v) >= n_)
            throw Error("edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    build_csr(n_, edges_, true, out_off_, out_adj_);
    build_csr(n_, edges_, false, in_off_, in_adj_);
}

bool DirectedGraph::has_edge(Vertex u, Vertex v) const {
    auto nb = out_neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

double DirectedGraph::density() const {
    if (n_ == 0) return 0.0;
    return static_cast<double>(m()) / (static_cast<double>(n_) * static_cast<double>(n_));
}

std::string DirectedGraph::name(Vertex v) const {
    return names_.empty() ? std::to_string(v) : names_[v];
}

DirectedGraph DirectedGraph::relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != n_) throw Error("permutation size does not match vertex count");
    std::vector<Edge> e;
    e.reserve(edges_.size());
    for (const auto& [u, v] : edges_) e.emplace_back(perm[u], perm[v]);
    std::vector<std::string> nm;
    if (!names_.empty()) {
        nm.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) nm[perm[i]] = names_[i];
    }
    return DirectedGraph(n_, std::move(e), std::move(nm));
}

DirectedGraph DirectedGraph::induced(std::span<const Vertex> vertices) const {
    std::vector<Vertex> index(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<Vertex>(i);
    std::vector<Edge> e;
    for (Vertex u : vertices) {
        for (Vertex v : out_neighbors(u)) {
            if (index[v] >= 0) e.emplace_back(index[u], index[v]);
        }
    }
    std::vector<std::string> nm;
    nm.reserve(vertices.size());
    for (Vertex v : vertices) nm.push_back(name(v));
    return DirectedGraph(vertices.size(), std::move(e), std::move(nm));
}

DirectedGraph from_edge_list(std::string_view text, EdgeListDiagnostics* diag) {
    EdgeListDiagnostics d;
    std::unordered_map<std::string, Vertex> index;
    std::vector<std::string> names;
    std::vector<Edge> edges;

    auto intern = [&](std::string_view tok) {
        auto [it, inserted] = index.try_emplace(std::string(tok), static_cast<Vertex>(names.size()));
        if (inserted) names.emplace_back(tok);
        return it->second;
    };

    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        auto line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++d.lines;
        if (line.empty() || line.front() == '#') continue;

        std::vector<std::string_view> tokens;
        if (std::count(line.begin(), line.end(), ',') > 1)
            throw ParseError(d.lines, "expected two tokens, found more than one comma");
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (std::isspace(static_cast<unsigned char>(line[i])) || line[i] == ',')) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != ',') ++j;
            if (j > i) tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (tokens.size() != 2)
            throw ParseError(d.lines, "expected 2 tokens, found " + std::to_string(tokens.size()));
        Vertex u = intern(tokens[0]);
        Vertex v = intern(tokens[1]);
        edges.emplace_back(u, v);
        ++d.records;
    }

    const std::size_t raw = edges.size();
    const std::size_t n = names.size();
    DirectedGraph g(n, std::move(edges), std::move(names));
    d.duplicates_collapsed = raw - g.m();
    for (std::size_t v = 0; v < g.n(); ++v) d.self_loops += g.has_self_loop(static_cast<Vertex>(v));
    if (diag) *diag = d;
    return g;
}

DirectedGraph read_edge_list(const std::string& path, EdgeListDiagnostics* diag) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_edge_list(ss.str(), diag);
}

std::string to_edge_list(const DirectedGraph& g) {
    std::string out;
    for (const auto& [u, v] : g.edges()) {
        out += g.name(u);
        out += ' ';
        out += g.name(v);
        out += '\n';
    }
    return out;
}

void write_edge_list(const DirectedGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << to_edge_list(g);
}

Subgraph largest_weakly_connected_component(const DirectedGraph& g) {
    if (g.n() == 0) throw Error("largest_weakly_connected_component: empty graph");
    std::vector<Vertex> parent(g.n());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& [u, v] : g.edges()) {
        Vertex a = find(u), b = find(v);
        // keep the smaller index as root so roots are component minima
        if (a != b) {
            if (a < b)
                parent[b] = a;
            else
                parent[a] = b;
        }
    }
    std::vector<std::size_t> size(g.n(), 0);
    for (std::size_t v = 0; v < g.n(); ++v) ++size[find(static_cast<Vertex>(v))];
    Vertex best = 0;
    for (std::size_t r = 0; r < g.n(); ++r) {
        if (size[r] > size[best]) best = static_cast<Vertex>(r);
    }
    Subgraph out;
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (find(static_cast<Vertex>(v)) == best) out.original.push_back(static_cast<Vertex>(v));
    }
    out.graph = g.induced(out.original);
    return out;
}

std::pair<DegreeVector, DegreeVector> degrees(const DirectedGraph& g) {
    DegreeVector in{Direction::In, std::vector<std::int64_t>(g.n())};
    DegreeVector out{Direction::Out, std::vector<std::int64_t>(g.n())};
    for (std::size_t v = 0; v < g.n(); ++v) {
        in.values[v] = g.in_degree(static_cast<Vertex>(v));
        out.values[v] = g.out_degree(static_cast<Vertex>(v));
    }
    return {std::move(in), std::move(out)};
}

}  // namespace dcp
