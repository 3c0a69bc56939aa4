#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "dcp/likelihood.hpp"
#include "dcp/partition.hpp"

namespace dcp {

/// Per-vertex scores, columns ordered (Pout, Cin, Cout, Pin).
struct ScoreMatrix {
    Eigen::MatrixXd raw;
    Eigen::MatrixXd normalized;
};

struct Diagnostics {
    std::string method;
    std::uint64_t seed = 0;
    int iterations = 0;
    bool converged = true;
    bool fallback_used = false;  // AdvHits single-vertex scheme
    int fallback_iterations = 0;
    std::vector<double> log_lik_trace;  // MaxLike best value after each pass
};

struct DetectionResult {
    Partition partition;
    ScoreMatrix scores;
    LikelihoodFit fit;
    Diagnostics diagnostics;
};

}  // namespace dcp
