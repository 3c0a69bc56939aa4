#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dcp/graph.hpp"
#include "dcp/methods.hpp"
#include "dcp/partition.hpp"

namespace dcp {

struct LShape {
    double stat = 0.0;           // d_in - d_out
    double d_in = 0.0;           // edge density on L-shape pairs
    double d_out = 0.0;          // edge density elsewhere
    std::array<int, 4> naming{};  // naming[label] = DCP4 block
};

/// Maximizes the DCP4 likelihood over the 24 namings of the four labels
/// (first permutation in lexicographic order on ties) and reports the L-shape
/// density contrast at the best naming.
LShape l_shape_statistic(const DirectedGraph& g, const Partition& p);

enum class NullModel { ER, Config };

struct McOptions {
    int reps = 250;
    std::uint64_t seed = 0;         // null sampling
    std::uint64_t method_seed = 0;  // detector runs
    int workers = 1;
    int max_retries = 10;  // per replicate, on detector failure
};

struct McTestResult {
    double observed_stat = 0.0;
    std::vector<double> null_stats;
    double p_value = 1.0;
    NullModel null_model = NullModel::ER;
    std::string method;
    int reps = 0;
    std::uint64_t seed = 0;
    std::uint64_t method_seed = 0;
    int retries = 0;  // total failed null attempts that were resampled
};

/// Null graph matched to g: directed ER without self-loops at density
/// m / (n (n - 1)), or the configuration model on g's degree sequences.
DirectedGraph sample_null(const DirectedGraph& g, NullModel null, std::uint64_t seed);

/// p = (#{null >= observed} + 1) / (reps + 1). Null replicates run on
/// `workers` threads; results are stored by replicate index.
McTestResult monte_carlo_test(const DirectedGraph& g, const Detector& method, const std::string& method_id,
                              NullModel null, const McOptions& opt = {});

}  // namespace dcp
