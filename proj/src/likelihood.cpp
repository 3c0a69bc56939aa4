#include "dcp/likelihood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "dcp/detection.hpp"
#include "dcp/errors.hpp"
#include "dcp/rng.hpp"

namespace dcp {

double xlogp(double x, double log_p) { return x == 0.0 ? 0.0 : x * log_p; }

double bernoulli_log_lik(std::int64_t edges, std::int64_t pairs, double p) {
    const double e = static_cast<double>(edges);
    const double non = static_cast<double>(pairs - edges);
    return xlogp(e, std::log(p)) + xlogp(non, std::log1p(-p));
}

LikelihoodFit fit_from_counts(std::int64_t edges_signal, std::int64_t pairs_signal, std::int64_t edges_noise,
                              std::int64_t pairs_noise) {
    LikelihoodFit f;
    f.edges_signal = edges_signal;
    f.pairs_signal = pairs_signal;
    f.edges_noise = edges_noise;
    f.pairs_noise = pairs_noise;
    const double ps = pairs_signal > 0 ? static_cast<double>(edges_signal) / pairs_signal : 0.0;
    const double pn = pairs_noise > 0 ? static_cast<double>(edges_noise) / pairs_noise : 0.0;
    f.p1 = ps;
    f.p2 = pn;
    if (pairs_signal > 0 && pairs_noise > 0 && ps < pn) {
        f.p1 = pn;
        f.p2 = ps;
        f.swapped = true;
    }
    f.log_lik = bernoulli_log_lik(edges_signal, pairs_signal, f.p1) + bernoulli_log_lik(edges_noise, pairs_noise, f.p2);
    return f;
}

BlockCounts block_counts(const DirectedGraph& g, const Partition& p) {
    if (p.size() != g.n()) throw Error("partition size does not match graph");
    BlockCounts c{p.k, std::vector<std::int64_t>(p.k, 0), std::vector<std::int64_t>(static_cast<std::size_t>(p.k) * p.k, 0)};
    for (int l : p.labels) {
        if (l < 0 || l >= p.k) throw Error("partition label out of range");
        ++c.sizes[l];
    }
    for (const auto& [u, v] : g.edges()) ++c.edges[static_cast<std::size_t>(p.labels[u]) * p.k + p.labels[v]];
    return c;
}

LikelihoodFit evaluate_naming(const BlockCounts& c, const BlockStructure& s, std::span<const int> naming) {
    if (c.k != s.k || naming.size() != static_cast<std::size_t>(c.k))
        throw Error("partition label count does not match structure");
    std::int64_t es = 0, ps = 0, total_e = 0, total_n = 0;
    for (int a = 0; a < c.k; ++a) {
        total_n += c.sizes[a];
        for (int b = 0; b < c.k; ++b) {
            total_e += c.edge(a, b);
            if (s.at(naming[a], naming[b])) {
                es += c.edge(a, b);
                ps += c.sizes[a] * c.sizes[b];
            }
        }
    }
    auto f = fit_from_counts(es, ps, total_e - es, total_n * total_n - ps);
    f.structure_id = s.id;
    return f;
}

LikelihoodFit log_likelihood(const DirectedGraph& g, const Partition& p, const BlockStructure& s) {
    std::vector<int> identity(s.k);
    std::iota(identity.begin(), identity.end(), 0);
    return evaluate_naming(block_counts(g, p), s, identity);
}

namespace {

// Neighbour-label counts kept up to date under single-vertex moves.
// Self-loops are excluded from the counts and handled separately.
struct MoveState {
    const DirectedGraph& g;
    const BlockStructure& s;
    int k;
    std::vector<int> labels;
    std::vector<std::int64_t> sizes;
    std::vector<std::int32_t> out_cnt, in_cnt;  // n x k
    std::vector<std::uint8_t> loop;
    std::int64_t edges_signal = 0;
    static constexpr int kMaxBlocks = 16;

    MoveState(const DirectedGraph& graph, const BlockStructure& st, std::vector<int> init)
        : g(graph), s(st), k(st.k), labels(std::move(init)) {
        if (k < 1 || k > kMaxBlocks) throw Error("likelihood maximization supports 1 to 16 blocks");
        const std::size_t n = g.n();
        loop.resize(n);
        for (std::size_t v = 0; v < n; ++v) loop[v] = g.has_self_loop(static_cast<Vertex>(v));
        rebuild();
    }

    void rebuild() {
        const std::size_t n = g.n();
        sizes.assign(k, 0);
        out_cnt.assign(n * k, 0);
        in_cnt.assign(n * k, 0);
        edges_signal = 0;
        for (int l : labels) ++sizes[l];
        for (const auto& [u, v] : g.edges()) {
            if (s.at(labels[u], labels[v])) ++edges_signal;
            if (u == v) continue;
            ++out_cnt[static_cast<std::size_t>(u) * k + labels[v]];
            ++in_cnt[static_cast<std::size_t>(v) * k + labels[u]];
        }
    }

    std::int64_t pairs_signal() const { return pairs_signal_with(-1, -1); }

    // M = 1 pair count after moving one vertex from block `from` to `to`.
    std::int64_t pairs_signal_with(int from, int to) const {
        std::int64_t sz[kMaxBlocks] = {};
        for (int c = 0; c < k; ++c) sz[c] = sizes[c];
        if (from >= 0) {
            --sz[from];
            ++sz[to];
        }
        std::int64_t total = 0;
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (s.at(a, b)) total += sz[a] * sz[b];
        return total;
    }

    // Change in the signal-edge count if v moves to block t.
    std::int64_t signal_delta(Vertex v, int t) const {
        const int a = labels[v];
        const std::int32_t* oc = &out_cnt[static_cast<std::size_t>(v) * k];
        const std::int32_t* ic = &in_cnt[static_cast<std::size_t>(v) * k];
        std::int64_t d = 0;
        for (int c = 0; c < k; ++c) {
            d += oc[c] * (static_cast<int>(s.at(t, c)) - static_cast<int>(s.at(a, c)));
            d += ic[c] * (static_cast<int>(s.at(c, t)) - static_cast<int>(s.at(c, a)));
        }
        if (loop[v]) d += static_cast<int>(s.at(t, t)) - static_cast<int>(s.at(a, a));
        return d;
    }

    void move(Vertex v, int t) {
        const int a = labels[v];
        if (a == t) return;
        edges_signal += signal_delta(v, t);
        for (Vertex w : g.out_neighbors(v)) {
            if (w == v) continue;
            --in_cnt[static_cast<std::size_t>(w) * k + a];
            ++in_cnt[static_cast<std::size_t>(w) * k + t];
        }
        for (Vertex u : g.in_neighbors(v)) {
            if (u == v) continue;
            --out_cnt[static_cast<std::size_t>(u) * k + a];
            ++out_cnt[static_cast<std::size_t>(u) * k + t];
        }
        --sizes[a];
        ++sizes[t];
        labels[v] = t;
    }

    std::int64_t total_pairs() const {
        const auto n = static_cast<std::int64_t>(g.n());
        return n * n;
    }

    LikelihoodFit fit() const {
        const auto ps = pairs_signal();
        return fit_from_counts(edges_signal, ps, static_cast<std::int64_t>(g.m()) - edges_signal, total_pairs() - ps);
    }
};

std::vector<int> random_labels(std::size_t n, int k, Rng& rng) {
    std::vector<int> l(n);
    for (auto& x : l) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
    return l;
}

void check_structure(const BlockStructure& s) {
    if (s.k < 1 || s.k > 16) throw Error("likelihood maximizers support 1..16 blocks");
}

}  // namespace

std::vector<LikelihoodFit> fits_along_moves(const DirectedGraph& g, const Partition& p, const BlockStructure& s,
                                            std::span<const std::pair<Vertex, int>> moves) {
    check_structure(s);
    if (p.size() != g.n() || p.k != s.k) throw Error("partition does not match graph and structure");
    MoveState st(g, s, p.labels);
    const auto m = static_cast<std::int64_t>(g.m());
    std::vector<LikelihoodFit> out;
    out.reserve(moves.size());
    for (const auto& [v, t] : moves) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.n() || t < 0 || t >= s.k) throw Error("move out of range");
        const std::int64_t es = st.edges_signal + st.signal_delta(v, t);
        const std::int64_t ps = st.labels[v] == t ? st.pairs_signal() : st.pairs_signal_with(st.labels[v], t);
        LikelihoodFit f = fit_from_counts(es, ps, m - es, st.total_pairs() - ps);
        f.structure_id = s.id;
        out.push_back(f);
        st.move(v, t);
    }
    return out;
}

DetectionResult hill_climb(const DirectedGraph& g, std::uint64_t seed, const HillClimbOptions& opt,
                           const BlockStructure& s) {
    if (g.n() == 0) throw Error("hill_climb: empty graph");
    check_structure(s);
    const int k = s.k;
    const std::size_t n = g.n();

    DetectionResult best;
    best.fit.log_lik = -std::numeric_limits<double>::infinity();
    bool have_best = false;

    for (int r = 0; r < std::max(opt.restarts, 1); ++r) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
        MoveState st(g, s, random_labels(n, k, rng));
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        int sweeps = 0;
        bool settled = false;
        while (sweeps < opt.max_sweeps) {
            ++sweeps;
            const LikelihoodFit f = st.fit();
            const double lp1 = std::log(f.p1), lq1 = std::log1p(-f.p1);
            const double lp2 = std::log(f.p2), lq2 = std::log1p(-f.p2);
            auto pair_term = [&](bool signal, double edges, double non) {
                return signal ? xlogp(edges, lp1) + xlogp(non, lq1) : xlogp(edges, lp2) + xlogp(non, lq2);
            };
            rng.shuffle(order);
            bool changed = false;
            for (Vertex v : order) {
                const int cur = st.labels[v];
                const std::int32_t* oc = &st.out_cnt[static_cast<std::size_t>(v) * k];
                const std::int32_t* ic = &st.in_cnt[static_cast<std::size_t>(v) * k];
                int arg = 0;
                double best_score = -std::numeric_limits<double>::infinity();
                for (int t = 0; t < k; ++t) {
                    double sc = 0.0;
                    for (int c = 0; c < k; ++c) {
                        const double others = static_cast<double>(st.sizes[c] - (cur == c ? 1 : 0));
                        sc += pair_term(s.at(t, c), oc[c], others - oc[c]);
                        sc += pair_term(s.at(c, t), ic[c], others - ic[c]);
                    }
                    sc += st.loop[v] ? pair_term(s.at(t, t), 1.0, 0.0) : pair_term(s.at(t, t), 0.0, 1.0);
                    if (t == 0 || sc > best_score) {
                        best_score = sc;
                        arg = t;
                    }
                }
                if (arg != cur) {
                    st.move(v, arg);
                    changed = true;
                }
            }
            if (!changed) {
                settled = true;
                break;
            }
        }
        LikelihoodFit f = st.fit();
        f.structure_id = s.id;
        if (!have_best || f.log_lik > best.fit.log_lik) {
            have_best = true;
            best.partition = Partition{st.labels, k};
            best.fit = f;
            best.diagnostics.iterations = sweeps;
            best.diagnostics.converged = settled;
        }
    }
    best.diagnostics.method = "hillclimb";
    best.diagnostics.seed = seed;
    return best;
}

DetectionResult max_like(const DirectedGraph& g, std::uint64_t seed, const MaxLikeOptions& opt,
                         const BlockStructure& s) {
    if (g.n() == 0) throw Error("max_like: empty graph");
    check_structure(s);
    const int k = s.k;
    const std::size_t n = g.n();
    const auto m = static_cast<std::int64_t>(g.m());

    DetectionResult best;
    bool have_best = false;

    for (int r = 0; r < std::max(opt.restarts, 1); ++r) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
        MoveState st(g, s, random_labels(n, k, rng));
        std::vector<int> best_labels = st.labels;
        double best_ll = st.fit().log_lik;
        std::vector<double> trace{best_ll};
        std::vector<std::uint8_t> locked(n);
        std::vector<std::int64_t> pairs_after(static_cast<std::size_t>(k) * k);
        int passes = 0;
        bool settled = false;

        while (passes < opt.max_passes) {
            ++passes;
            std::fill(locked.begin(), locked.end(), 0);
            bool improved = false;
            for (std::size_t step = 0; step < n; ++step) {
                for (int a = 0; a < k; ++a)
                    for (int t = 0; t < k; ++t)
                        if (a != t) pairs_after[static_cast<std::size_t>(a) * k + t] = st.pairs_signal_with(a, t);

                Vertex arg_v = -1;
                int arg_t = -1;
                double arg_ll = -std::numeric_limits<double>::infinity();
                for (std::size_t vi = 0; vi < n; ++vi) {
                    if (locked[vi]) continue;
                    const auto v = static_cast<Vertex>(vi);
                    const int a = st.labels[v];
                    for (int t = 0; t < k; ++t) {
                        if (t == a) continue;
                        const std::int64_t es = st.edges_signal + st.signal_delta(v, t);
                        const std::int64_t ps = pairs_after[static_cast<std::size_t>(a) * k + t];
                        const double ll = fit_from_counts(es, ps, m - es, st.total_pairs() - ps).log_lik;
                        if (arg_v < 0 || ll > arg_ll) {
                            arg_v = v;
                            arg_t = t;
                            arg_ll = ll;
                        }
                    }
                }
                if (arg_v < 0) break;  // k == 1: no moves exist
                st.move(arg_v, arg_t);
                locked[arg_v] = 1;
                if (arg_ll > best_ll) {
                    best_ll = arg_ll;
                    best_labels = st.labels;
                    improved = true;
                }
            }
            trace.push_back(best_ll);
            if (!improved) {
                settled = true;
                break;
            }
            st.labels = best_labels;
            st.rebuild();
        }

        Partition part{best_labels, k};
        LikelihoodFit f = log_likelihood(g, part, s);
        if (!have_best || f.log_lik > best.fit.log_lik) {
            have_best = true;
            best.partition = std::move(part);
            best.fit = f;
            best.diagnostics.iterations = passes;
            best.diagnostics.converged = settled;
            best.diagnostics.log_lik_trace = std::move(trace);
        }
    }
    best.diagnostics.method = "maxlike";
    best.diagnostics.seed = seed;
    return best;
}

}  // namespace dcp
