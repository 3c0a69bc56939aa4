#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "dcp/detection.hpp"
#include "dcp/graph.hpp"
#include "dcp/spectral.hpp"

namespace dcp {

/// Raw LowRank scores from the rank-2 reconstruction A_hat:
/// Cin = column sums, Cout = row sums, Pin = max(Cout) - Cout,
/// Pout = max(Cin) - Cin. Columns (Pout, Cin, Cout, Pin).
Eigen::MatrixXd lowrank_scores(const DirectedGraph& g, std::uint64_t seed = 0, const SvdOptions& svd = {});

/// Scores -> L2 row normalization -> k-means++ (k = 4) -> likelihood naming.
DetectionResult detect_lowrank(const DirectedGraph& g, std::uint64_t seed);

enum class HitsOrientation {
    AuthorityIsCin,  // Cin <- authority, Cout <- hub
    HubIsCin,        // Cin <- hub, Cout <- authority
};

Eigen::MatrixXd hits_scores(const DirectedGraph& g, HitsOrientation orient = HitsOrientation::AuthorityIsCin);

DetectionResult detect_hits(const DirectedGraph& g, std::uint64_t seed,
                            HitsOrientation orient = HitsOrientation::AuthorityIsCin);

/// Builds the (Pout, Cin, Cout, Pin) matrix from core scores by max-shifting.
Eigen::MatrixXd core_periphery_scores(const Eigen::VectorXd& c_in, const Eigen::VectorXd& c_out);

}  // namespace dcp
