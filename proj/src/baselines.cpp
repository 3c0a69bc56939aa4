#include "dcp/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <memory>

#include "dcp/cluster.hpp"
#include "dcp/errors.hpp"
#include "dcp/rng.hpp"

namespace dcp {

namespace {

using Sparse = SparseMatrix::Storage;

Eigen::VectorXd inv_sqrt(const Eigen::VectorXd& deg) {
    Eigen::VectorXd r(deg.size());
    for (Eigen::Index i = 0; i < deg.size(); ++i) r[i] = deg[i] > 0.0 ? 1.0 / std::sqrt(deg[i]) : 0.0;
    return r;
}

Eigen::MatrixXd normalize_rows(Eigen::MatrixXd x) {
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        const double nrm = x.row(i).norm();
        if (nrm > 0.0) x.row(i) /= nrm;
    }
    return x;
}

}  // namespace

DetectionResult detect_degree(const DirectedGraph& g, std::uint64_t seed) {
    if (g.n() == 0) throw Error("detect_degree: empty graph");
    const auto n = static_cast<Eigen::Index>(g.n());
    Eigen::MatrixXd pts(n, 2);
    for (Eigen::Index v = 0; v < n; ++v) {
        pts(v, 0) = static_cast<double>(g.in_degree(static_cast<Vertex>(v)));
        pts(v, 1) = static_cast<double>(g.out_degree(static_cast<Vertex>(v)));
    }
    DetectionResult r = cluster_and_name(g, ScoreMatrix{pts, pts}, pts, derive_seed(seed, 2));
    r.diagnostics.method = "degree";
    r.diagnostics.seed = seed;
    return r;
}

std::function<Eigen::MatrixXd(const Eigen::MatrixXd&)> sapa_operator(const DirectedGraph& g, SapaVariant variant,
                                                                     const SapaOptions& opt) {
    auto a = std::make_shared<Sparse>(SparseMatrix::adjacency(g).storage());
    auto at = std::make_shared<Sparse>(a->transpose());
    if (variant == SapaVariant::Bibliometric) {
        return [a, at](const Eigen::MatrixXd& x) -> Eigen::MatrixXd {
            Eigen::MatrixXd y1 = (*at) * x + x;   // A_I^T x
            Eigen::MatrixXd y2 = (*a) * x + x;    // A_I x
            return ((*a) * y1 + y1) + ((*at) * y2 + y2);
        };
    }
    auto [din, dout] = degrees(g);
    Eigen::VectorXd di(din.values.size()), dout_v(dout.values.size());
    for (std::size_t v = 0; v < din.values.size(); ++v) {
        di[v] = static_cast<double>(din.values[v]);
        dout_v[v] = static_cast<double>(dout.values[v]);
    }
    const Eigen::VectorXd si = inv_sqrt(di), so = inv_sqrt(dout_v);
    const bool direct = opt.cocitation == SapaCoCitation::Direct;
    return [a, at, si, so, direct](const Eigen::MatrixXd& x) -> Eigen::MatrixXd {
        // D_o^-1/2 A D_i^-1/2 A^T D_o^-1/2 x
        Eigen::MatrixXd t1 = so.asDiagonal() * x;
        t1 = (*at) * t1;
        t1 = si.asDiagonal() * t1;
        t1 = (*a) * t1;
        t1 = so.asDiagonal() * t1;
        Eigen::MatrixXd t2 = si.asDiagonal() * x;
        if (direct) {
            // D_i^-1/2 A D_o^-1/2 A^T D_i^-1/2 x
            t2 = (*at) * t2;
            t2 = so.asDiagonal() * t2;
            t2 = (*a) * t2;
        } else {
            // D_i^-1/2 A^T D_o^-1/2 A D_i^-1/2 x
            t2 = (*a) * t2;
            t2 = so.asDiagonal() * t2;
            t2 = (*at) * t2;
        }
        t2 = si.asDiagonal() * t2;
        return t1 + t2;
    };
}

Eigen::MatrixXd sapa_similarity(const DirectedGraph& g, SapaVariant variant, const SapaOptions& opt) {
    const auto n = static_cast<Eigen::Index>(g.n());
    Eigen::MatrixXd s = sapa_operator(g, variant, opt)(Eigen::MatrixXd::Identity(n, n));
    Eigen::MatrixXd st = s.transpose();
    return (s + st) * 0.5;
}

DetectionResult detect_sapa(const DirectedGraph& g, SapaVariant variant, std::uint64_t seed, const SapaOptions& opt) {
    if (g.n() == 0) throw Error("detect_sapa: empty graph");
    const auto n = static_cast<Eigen::Index>(g.n());
    const int dim = static_cast<int>(std::min<Eigen::Index>(opt.embed_dim, n));
    EigenResult eig = top_eigenpairs(sapa_operator(g, variant, opt), n, dim, derive_seed(seed, 1), opt.eig_tol,
                                     opt.eig_max_iter);
    Eigen::MatrixXd pts = normalize_rows(eig.vectors);
    DetectionResult r = cluster_and_name(g, ScoreMatrix{eig.vectors, pts}, pts, derive_seed(seed, 2));
    r.diagnostics.method = variant == SapaVariant::Bibliometric ? "sapa1" : "sapa2";
    r.diagnostics.seed = seed;
    r.diagnostics.iterations = eig.iterations;
    r.diagnostics.converged = eig.converged;
    return r;
}

SparseMatrix disum_matrix(const DirectedGraph& g) {
    const double n = static_cast<double>(g.n());
    const double tau = n > 0 ? static_cast<double>(g.m()) / n : 0.0;
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(g.m());
    for (const auto& [u, v] : g.edges()) {
        const double w = 1.0 / std::sqrt((g.out_degree(u) + tau) * (g.in_degree(v) + tau));
        t.emplace_back(u, v, w);
    }
    Sparse l(static_cast<Eigen::Index>(g.n()), static_cast<Eigen::Index>(g.n()));
    l.setFromTriplets(t.begin(), t.end());
    return SparseMatrix(std::move(l));
}

DisumEmbedding disum_embed(const DirectedGraph& g, int variant, std::uint64_t seed) {
    if (g.n() == 0) throw Error("disum_embed: empty graph");
    if (variant < 1 || variant > 4) throw Error("DiSum variant must be 1..4");
    const int full = static_cast<int>(g.n());
    const int r = std::min(variant == 4 ? 2 : 4, full);
    SvdOptions opt;
    opt.tol = 1e-8;
    SvdFactors f = truncated_svd(disum_matrix(g), r, derive_seed(seed, 1), opt);

    DisumEmbedding e;
    e.variant = variant;
    switch (variant) {
        case 1:
            e.points = normalize_rows(f.u);
            break;
        case 2:
            e.points = normalize_rows(f.v);
            break;
        case 3: {
            Eigen::MatrixXd cat(f.u.rows(), f.u.cols() + f.v.cols());
            cat << f.u, f.v;
            e.points = normalize_rows(cat);
            break;
        }
        default:
            e.row_points = normalize_rows(f.u);
            e.col_points = normalize_rows(f.v);
            break;
    }
    return e;
}

DetectionResult detect_disum(const DirectedGraph& g, int variant, std::uint64_t seed) {
    DisumEmbedding e = disum_embed(g, variant, seed);
    DetectionResult r;
    if (variant != 4) {
        r = cluster_and_name(g, ScoreMatrix{e.points, e.points}, e.points, derive_seed(seed, 2));
    } else {
        KMeansResult rows = kmeans_pp(e.row_points, 2, derive_seed(seed, 3));
        KMeansResult cols = kmeans_pp(e.col_points, 2, derive_seed(seed, 4));
        std::vector<int> product(rows.labels.size());
        for (std::size_t v = 0; v < product.size(); ++v) product[v] = 2 * rows.labels[v] + cols.labels[v];
        NamedPartition np = map_clusters_to_sets(g, product);
        Eigen::MatrixXd both(e.row_points.rows(), e.row_points.cols() + e.col_points.cols());
        both << e.row_points, e.col_points;
        r.partition = std::move(np.partition);
        r.fit = np.fit;
        r.scores = ScoreMatrix{both, both};
    }
    r.diagnostics.method = "disum" + std::to_string(variant);
    r.diagnostics.seed = seed;
    return r;
}

std::vector<int> strongly_connected_components(const DirectedGraph& g, int* count) {
    const auto n = static_cast<Vertex>(g.n());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<Vertex> stack;
    std::vector<std::uint8_t> on_stack(n, 0);
    std::vector<std::pair<Vertex, std::size_t>> call;  // (vertex, next neighbour position)
    int next_index = 0, next_comp = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            auto nb = g.out_neighbors(v);
            if (pos < nb.size()) {
                const Vertex w = nb[pos++];
                if (index[w] < 0) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const Vertex done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = next_comp;
                } while (w != done);
                ++next_comp;
            }
        }
    }
    if (count) *count = next_comp;
    return comp;
}

namespace {

std::vector<std::uint8_t> reach(const DirectedGraph& g, const std::vector<std::uint8_t>& sources, bool forward) {
    std::vector<std::uint8_t> seen(sources);
    std::deque<Vertex> q;
    for (std::size_t v = 0; v < seen.size(); ++v)
        if (seen[v]) q.push_back(static_cast<Vertex>(v));
    while (!q.empty()) {
        const Vertex v = q.front();
        q.pop_front();
        auto nb = forward ? g.out_neighbors(v) : g.in_neighbors(v);
        for (Vertex w : nb) {
            if (!seen[w]) {
                seen[w] = 1;
                q.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace

BowTiePartition bowtie(const DirectedGraph& g) {
    const std::size_t n = g.n();
    BowTiePartition bp{std::vector<int>(n, OTHER)};
    if (n == 0) return bp;

    int ncomp = 0;
    const std::vector<int> comp = strongly_connected_components(g, &ncomp);
    std::vector<std::size_t> size(ncomp, 0), min_vertex(ncomp, n);
    for (std::size_t v = 0; v < n; ++v) {
        ++size[comp[v]];
        min_vertex[comp[v]] = std::min(min_vertex[comp[v]], v);
    }
    int core = 0;
    for (int c = 1; c < ncomp; ++c) {
        if (size[c] > size[core] || (size[c] == size[core] && min_vertex[c] < min_vertex[core])) core = c;
    }

    std::vector<std::uint8_t> in_core(n);
    for (std::size_t v = 0; v < n; ++v) in_core[v] = comp[v] == core;
    const auto to_core = reach(g, in_core, false);
    const auto from_core = reach(g, in_core, true);

    std::vector<std::uint8_t> in_set(n), out_set(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (in_core[v]) {
            bp.labels[v] = CORE;
        } else if (to_core[v]) {
            bp.labels[v] = IN;
            in_set[v] = 1;
        } else if (from_core[v]) {
            bp.labels[v] = OUT;
            out_set[v] = 1;
        }
    }
    const auto from_in = reach(g, in_set, true);
    const auto to_out = reach(g, out_set, false);
    for (std::size_t v = 0; v < n; ++v) {
        if (in_core[v] || in_set[v] || out_set[v]) continue;
        if (from_in[v] && to_out[v])
            bp.labels[v] = TUBE;
        else if (from_in[v])
            bp.labels[v] = TENDRIL_IN;
        else if (to_out[v])
            bp.labels[v] = TENDRIL_OUT;
    }
    return bp;
}

BowTieAdj bowtie_adj(const BowTiePartition& bp) {
    BowTieAdj out;
    out.partition.k = 3;
    for (std::size_t v = 0; v < bp.labels.size(); ++v) {
        const int l = bp.labels[v];
        if (l == CORE || l == IN || l == OUT) {
            out.vertices.push_back(static_cast<Vertex>(v));
            out.partition.labels.push_back(l);
        }
    }
    return out;
}

}  // namespace dcp
