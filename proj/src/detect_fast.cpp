#include "dcp/detect_fast.hpp"

#include "dcp/cluster.hpp"
#include "dcp/errors.hpp"
#include "dcp/rng.hpp"

namespace dcp {

Eigen::MatrixXd core_periphery_scores(const Eigen::VectorXd& c_in, const Eigen::VectorXd& c_out) {
    const Eigen::Index n = c_in.size();
    Eigen::MatrixXd s(n, 4);
    s.col(Cin) = c_in;
    s.col(Cout) = c_out;
    s.col(Pin) = Eigen::VectorXd::Constant(n, c_out.maxCoeff()) - c_out;
    s.col(Pout) = Eigen::VectorXd::Constant(n, c_in.maxCoeff()) - c_in;
    return s;
}

Eigen::MatrixXd lowrank_scores(const DirectedGraph& g, std::uint64_t seed, const SvdOptions& svd) {
    if (g.n() == 0) throw Error("lowrank_scores: empty graph");
    const int r = std::min<int>(2, static_cast<int>(g.n()));
    SvdFactors f = truncated_svd(g, r, seed, svd);
    return core_periphery_scores(low_rank_col_sums(f), low_rank_row_sums(f));
}

DetectionResult detect_lowrank(const DirectedGraph& g, std::uint64_t seed) {
    ScoreMatrix s = row_normalize_l2(lowrank_scores(g, derive_seed(seed, 1)));
    Eigen::MatrixXd pts = s.normalized;
    DetectionResult r = cluster_and_name(g, std::move(s), pts, derive_seed(seed, 2));
    r.diagnostics.method = "lowrank";
    r.diagnostics.seed = seed;
    return r;
}

Eigen::MatrixXd hits_scores(const DirectedGraph& g, HitsOrientation orient) {
    HitsScores h = hits(g);
    return orient == HitsOrientation::AuthorityIsCin ? core_periphery_scores(h.authority, h.hub)
                                                     : core_periphery_scores(h.hub, h.authority);
}

DetectionResult detect_hits(const DirectedGraph& g, std::uint64_t seed, HitsOrientation orient) {
    HitsScores h = hits(g);
    Eigen::MatrixXd raw = orient == HitsOrientation::AuthorityIsCin ? core_periphery_scores(h.authority, h.hub)
                                                                    : core_periphery_scores(h.hub, h.authority);
    ScoreMatrix s = row_normalize_l2(raw);
    Eigen::MatrixXd pts = s.normalized;
    DetectionResult r = cluster_and_name(g, std::move(s), pts, derive_seed(seed, 2));
    r.diagnostics.method = orient == HitsOrientation::AuthorityIsCin ? "hits" : "hits-swapped";
    r.diagnostics.seed = seed;
    r.diagnostics.iterations = h.iterations;
    r.diagnostics.converged = h.converged;
    return r;
}

}  // namespace dcp
