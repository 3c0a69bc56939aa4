#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dcp/partition.hpp"

namespace dcp {

/// Pair counts across two labelings: a same/same, b same in x only,
/// c same in y only, d different in both.
struct PairCounts {
    std::int64_t a = 0, b = 0, c = 0, d = 0;
};

// Labels may be any integers; only equality matters.
PairCounts pair_counts(std::span<const int> x, std::span<const int> y);

double ari(std::span<const int> x, std::span<const int> y);
double nmi(std::span<const int> x, std::span<const int> y);
double voi(std::span<const int> x, std::span<const int> y);

inline double ari(const Partition& x, const Partition& y) { return ari(x.labels, y.labels); }
inline double nmi(const Partition& x, const Partition& y) { return nmi(x.labels, y.labels); }
inline double voi(const Partition& x, const Partition& y) { return voi(x.labels, y.labels); }

/// Entropy (bits) of the empirical label distribution.
double entropy(std::span<const int> x);
double mutual_information(std::span<const int> x, std::span<const int> y);

struct ConfusionTable {
    std::vector<int> row_labels;  // distinct labels of x, ascending
    std::vector<int> col_labels;  // distinct labels of y, ascending
    std::vector<std::int64_t> counts;  // row-major

    std::int64_t at(std::size_t i, std::size_t j) const { return counts[i * col_labels.size() + j]; }
};

ConfusionTable confusion_table(std::span<const int> x, std::span<const int> y);

/// ARI of both labelings restricted to `subset` (vertex indices).
double ari_on_subset(std::span<const int> x, std::span<const int> y, std::span<const int> subset);

}  // namespace dcp
