#include "dcp/advhits.hpp"

#include <array>
#include <cmath>

#include "dcp/cluster.hpp"
#include "dcp/errors.hpp"
#include "dcp/rng.hpp"

namespace dcp {

namespace {

Eigen::VectorXd mul_a(const DirectedGraph& g, const Eigen::VectorXd& x) {
    Eigen::VectorXd y(x.size());
    for (Eigen::Index v = 0; v < x.size(); ++v) {
        double acc = 0.0;
        for (Vertex w : g.out_neighbors(static_cast<Vertex>(v))) acc += x[w];
        y[v] = acc;
    }
    return y;
}

Eigen::VectorXd mul_at(const DirectedGraph& g, const Eigen::VectorXd& x) {
    Eigen::VectorXd y(x.size());
    for (Eigen::Index v = 0; v < x.size(); ++v) {
        double acc = 0.0;
        for (Vertex u : g.in_neighbors(static_cast<Vertex>(v))) acc += x[u];
        y[v] = acc;
    }
    return y;
}

double edge_weight(const DirectedGraph& g) {
    const double n = static_cast<double>(g.n());
    return n > 0 ? static_cast<double>(g.m()) / (n * n) : 0.0;
}

// Row e_i (out-going rewards) and column d_i (in-coming rewards) of D.
Eigen::VectorXd reward_row(const RewardMatrix& d, int i) {
    Eigen::VectorXd e(d.k);
    for (int c = 0; c < d.k; ++c) e[c] = d.at(i, c);
    return e;
}

Eigen::VectorXd reward_col(const RewardMatrix& d, int i) {
    Eigen::VectorXd e(d.k);
    for (int c = 0; c < d.k; ++c) e[c] = d.at(c, i);
    return e;
}

Eigen::VectorXd group_weights(const Eigen::MatrixXd& s) {
    Eigen::VectorXd f = s.colwise().sum().transpose();
    for (Eigen::Index c = 0; c < f.size(); ++c) f[c] = f[c] > 0.0 ? 1.0 / f[c] : 0.0;
    return f;
}

void normalize_row(const double* raw, double* out, int k, double eps) {
    double lo = raw[0];
    for (int c = 1; c < k; ++c) lo = std::min(lo, raw[c]);
    double denom = 0.0;
    for (int c = 0; c < k; ++c) denom += raw[c] - lo;
    if (denom < eps) {
        for (int c = 0; c < k; ++c) out[c] = 1.0 / k;
    } else {
        for (int c = 0; c < k; ++c) out[c] = (raw[c] - lo) / denom;
    }
}

void check_scores(const DirectedGraph& g, const Eigen::MatrixXd& s, const RewardMatrix& d, int i) {
    if (s.rows() != static_cast<Eigen::Index>(g.n()) || s.cols() != d.k)
        throw Error("score matrix shape does not match graph and structure");
    if (i < 0 || i >= d.k) throw Error("score column index out of range");
}

}  // namespace

Eigen::VectorXd advhits_raw_update(const DirectedGraph& g, const Eigen::MatrixXd& s, int i, const RewardMatrix& d) {
    check_scores(g, s, d, i);
    const double w = edge_weight(g);
    const Eigen::VectorXd x = s * reward_row(d, i);
    const Eigen::VectorXd y = s * reward_col(d, i);
    Eigen::VectorXd raw = mul_a(g, x) + mul_at(g, y);
    raw.array() -= w * (x.sum() + y.sum());
    return raw;
}

Eigen::VectorXd advhits_grp_update(const DirectedGraph& g, const Eigen::MatrixXd& s, int i, const RewardMatrix& d,
                                   GrpPenalty penalty) {
    check_scores(g, s, d, i);
    const double w = edge_weight(g);
    const Eigen::VectorXd f = group_weights(s);
    const Eigen::VectorXd x = s * f.cwiseProduct(reward_row(d, i));
    const Eigen::VectorXd y = s * f.cwiseProduct(reward_col(d, i));
    Eigen::VectorXd raw = mul_a(g, x) + mul_at(g, y);
    if (penalty == GrpPenalty::PerVertex)
        raw -= w * (x + y);
    else
        raw.array() -= w * (x.sum() + y.sum());
    return raw;
}

Eigen::MatrixXd advhits_normalize(const Eigen::MatrixXd& raw, double eps) {
    using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    RowMatrix in = raw;
    RowMatrix out(raw.rows(), raw.cols());
    const int k = static_cast<int>(raw.cols());
    for (Eigen::Index j = 0; j < raw.rows(); ++j) normalize_row(in.row(j).data(), out.row(j).data(), k, eps);
    return out;
}

DetectionResult detect_advhits(const DirectedGraph& g, const AdvHitsConfig& cfg) {
    if (g.n() == 0) throw Error("detect_advhits: empty graph");
    if (!(cfg.conv_tol > 0.0) || !(cfg.degeneracy_eps > 0.0)) throw Error("AdvHits tolerances must be positive");

    const RewardMatrix d = reward(catalog("DCP4"));
    const int k = d.k;
    const auto n = static_cast<Eigen::Index>(g.n());
    const bool grp = cfg.variant == AdvHitsVariant::AdvHitsGrp;
    auto update = [&](const Eigen::MatrixXd& s, int i) {
        return grp ? advhits_grp_update(g, s, i, d, cfg.grp_penalty) : advhits_raw_update(g, s, i, d);
    };

    Rng rng(derive_seed(cfg.seed, 1));
    Eigen::MatrixXd raw(n, k);
    for (Eigen::Index j = 0; j < n; ++j)
        for (int c = 0; c < k; ++c) raw(j, c) = rng.uniform();
    Eigen::MatrixXd s = advhits_normalize(raw, cfg.degeneracy_eps);

    Diagnostics diag;
    diag.converged = false;
    for (int sweep = 1; sweep <= cfg.max_bulk_iter; ++sweep) {
        double change = 0.0;
        for (int i = 0; i < k; ++i) {
            raw.col(i) = update(s, i);
            Eigen::MatrixXd next = advhits_normalize(raw, cfg.degeneracy_eps);
            change = std::max(change, (next - s).cwiseAbs().maxCoeff());
            s = std::move(next);
        }
        diag.iterations = sweep;
        if (cfg.on_sweep) cfg.on_sweep(s);
        if (change < cfg.conv_tol) {
            diag.converged = true;
            break;
        }
    }

    if (!diag.converged) {
        // Single-vertex scheme, resuming from the bulk iterate. Column sums
        // are maintained incrementally so each vertex update costs O(deg).
        diag.fallback_used = true;
        const double w = edge_weight(g);
        Eigen::VectorXd colsum = s.colwise().sum().transpose();
        std::array<double, 4> t_out{}, t_in{}, row_raw{}, row_new{};
        for (int pass = 1; pass <= cfg.max_fallback_iter; ++pass) {
            double change = 0.0;
            for (Eigen::Index v = 0; v < n; ++v) {
                t_out.fill(0.0);
                t_in.fill(0.0);
                for (Vertex x : g.out_neighbors(static_cast<Vertex>(v)))
                    for (int c = 0; c < k; ++c) t_out[c] += s(x, c);
                for (Vertex x : g.in_neighbors(static_cast<Vertex>(v)))
                    for (int c = 0; c < k; ++c) t_in[c] += s(x, c);
                std::array<double, 4> f{1.0, 1.0, 1.0, 1.0};
                if (grp)
                    for (int c = 0; c < k; ++c) f[c] = colsum[c] > 0.0 ? 1.0 / colsum[c] : 0.0;
                for (int i = 0; i < k; ++i) {
                    double acc = 0.0;
                    for (int c = 0; c < k; ++c) {
                        acc += f[c] * (t_out[c] * d.at(i, c) + t_in[c] * d.at(c, i));
                        const double base = grp && cfg.grp_penalty == GrpPenalty::PerVertex ? s(v, c) : colsum[c];
                        acc -= w * f[c] * base * (d.at(i, c) + d.at(c, i));
                    }
                    row_raw[i] = acc;
                }
                normalize_row(row_raw.data(), row_new.data(), k, cfg.degeneracy_eps);
                for (int c = 0; c < k; ++c) {
                    change = std::max(change, std::abs(row_new[c] - s(v, c)));
                    colsum[c] += row_new[c] - s(v, c);
                    s(v, c) = row_new[c];
                    raw(v, c) = row_raw[c];
                }
            }
            diag.fallback_iterations = pass;
            if (cfg.on_sweep) cfg.on_sweep(s);
            if (change < cfg.conv_tol) {
                diag.converged = true;
                break;
            }
        }
    }

    ScoreMatrix scores{raw, s};
    DetectionResult r = cluster_and_name(g, std::move(scores), s, derive_seed(cfg.seed, 2));
    diag.method = grp ? "advhitsgrp" : "advhits";
    diag.seed = cfg.seed;
    r.diagnostics = std::move(diag);
    return r;
}

}  // namespace dcp
