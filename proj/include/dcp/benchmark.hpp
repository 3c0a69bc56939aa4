#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "dcp/errors.hpp"
#include "dcp/methods.hpp"
#include "dcp/synth.hpp"

namespace dcp {

struct Summary {
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation; 0 for a single value
};

Summary summarize(const std::vector<double>& x);

struct BenchmarkRow {
    GridPoint point;
    std::string method;
    std::size_t reps = 0;
    Summary ari, nmi, voi;
};

struct SampleScore {
    double ari = 0.0, nmi = 0.0, voi = 0.0;
};

/// Raised when a detector fails on a benchmark sample. `completed` counts the
/// samples (in grid order) that finished before the first failing one.
class BenchmarkFailure : public Error {
public:
    BenchmarkFailure(const std::string& what, std::size_t completed, BenchmarkSample sample, std::string method)
        : Error(what), completed_(completed), sample_(std::move(sample)), method_(std::move(method)) {}

    std::size_t completed() const noexcept { return completed_; }
    const BenchmarkSample& sample() const noexcept { return sample_; }
    const std::string& method() const noexcept { return method_; }

private:
    std::size_t completed_;
    BenchmarkSample sample_;
    std::string method_;
};

struct BenchmarkOptions {
    std::vector<std::string> methods;
    MethodOverrides overrides;
    int workers = 1;
    // Called from worker threads after each finished sample.
    std::function<void(std::size_t done, std::size_t total)> progress;
};

/// Samples every (grid point, replicate), runs each method with a seed
/// derived from the sample seed and the method id, and scores against the
/// planted partition. Rows are ordered by grid point, then by method order.
std::vector<BenchmarkRow> run_benchmark(const BenchmarkSpec& spec, const BenchmarkOptions& opt);

/// Per-sample scores: result[sample][method].
std::vector<std::vector<SampleScore>> score_samples(const std::vector<BenchmarkSample>& samples,
                                                    const BenchmarkOptions& opt);

}  // namespace dcp
