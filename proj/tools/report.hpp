#pragma once

#include <json.hpp>

#include "dcp/benchmark.hpp"
#include "dcp/detection.hpp"
#include "dcp/graph.hpp"
#include "dcp/io.hpp"
#include "dcp/mcstats.hpp"
#include "dcp/metrics.hpp"

namespace dcp::report {

using Json = nlohmann::ordered_json;

LabelScheme scheme_for(const DetectionResult& r);

Json detection(const DirectedGraph& g, const DetectionResult& r);
Json mctest(const McTestResult& r);
Json compare(const std::vector<int>& x, const std::vector<int>& y);
Json benchmark_rows(const std::vector<BenchmarkRow>& rows);
std::string benchmark_csv(const std::vector<BenchmarkRow>& rows, bool blank_single_sd);
Json grid_point(const GridPoint& p);

// Shortest round-trip text for a double; non-finite values become null.
Json number(double x);

}  // namespace dcp::report
