#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dcp/detection.hpp"
#include "dcp/graph.hpp"

namespace dcp {

using Detector = std::function<DetectionResult(const DirectedGraph&, std::uint64_t seed)>;

/// Optional per-run overrides. `tol` is the AdvHits convergence tolerance;
/// `restarts` is the HillClimb / MaxLike restart count.
struct MethodOverrides {
    std::optional<double> tol;
    std::optional<int> restarts;
};

/// lowrank, hits, advhits, advhitsgrp, hillclimb, maxlike, degree, sapa1,
/// sapa2, disum1..disum4, bowtie.
const std::vector<std::string>& method_ids();

bool is_method(const std::string& id);

/// Throws Error for an unknown id.
Detector make_detector(const std::string& id, const MethodOverrides& overrides = {});

/// Stable 64-bit hash of a method id, used to give each method its own
/// seed stream.
std::uint64_t method_key(const std::string& id);

}  // namespace dcp
