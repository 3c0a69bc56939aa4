#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>

#include "dcp/detection.hpp"
#include "dcp/graph.hpp"
#include "dcp/structures.hpp"

namespace dcp {

enum class AdvHitsVariant { AdvHits, AdvHitsGrp };

/// Non-edge term of the group-balanced update.
///   Aggregate: -w 1 1^T S F (d_i + e_i^T), the same complement form as the
///              plain update, which reduces to a per-column constant.
///   PerVertex: -w S F (d_i + e_i^T), scored per vertex.
enum class GrpPenalty { Aggregate, PerVertex };

struct AdvHitsConfig {
    AdvHitsVariant variant = AdvHitsVariant::AdvHits;
    double conv_tol = 1e-8;
    int max_bulk_iter = 1000;
    int max_fallback_iter = 1000;
    double degeneracy_eps = 1e-10;
    GrpPenalty grp_penalty = GrpPenalty::Aggregate;
    std::uint64_t seed = 0;
    // Called with the normalized scores after every bulk sweep and every
    // fallback pass.
    std::function<void(const Eigen::MatrixXd&)> on_sweep;
};

/// Raw score column i of the reward/penalty scheme, with w = m / n^2:
///   (1-w) A S e_i^T - w (1-A) S e_i^T + (1-w) A^T S d_i - w (1-A^T) S d_i
/// where 1 is the all-ones matrix. The complement products use
/// (1 - A) x = sum(x) 1 - A x, so A is never densified.
Eigen::VectorXd advhits_raw_update(const DirectedGraph& g, const Eigen::MatrixXd& s_nrm, int i,
                                   const RewardMatrix& d);

/// Group-balanced variant: each block's contribution is scaled by the
/// inverse of its column sum F_ii = 1 / sum_j S_ji (0 for an empty column):
///   A S F e_i^T + A^T S F d_i - (non-edge term, see GrpPenalty)
Eigen::VectorXd advhits_grp_update(const DirectedGraph& g, const Eigen::MatrixXd& s_nrm, int i,
                                   const RewardMatrix& d, GrpPenalty penalty = GrpPenalty::Aggregate);

/// Per row: subtract the row minimum and divide by the shifted row sum. Rows
/// whose shifted sum is below eps become uniform.
Eigen::MatrixXd advhits_normalize(const Eigen::MatrixXd& raw, double eps = 1e-10);

/// Iterates the scheme to convergence (bulk column sweeps, then single-vertex
/// passes if the bulk scheme stalls), clusters the normalized scores with
/// k-means++ and names the clusters by likelihood.
DetectionResult detect_advhits(const DirectedGraph& g, const AdvHitsConfig& cfg = {});

}  // namespace dcp
