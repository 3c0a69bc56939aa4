#include "dcp/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "dcp/errors.hpp"

namespace dcp {

namespace {

void check_lengths(std::span<const int> x, std::span<const int> y) {
    if (x.size() != y.size()) throw Error("partitions have different lengths");
}

std::vector<int> distinct(std::span<const int> x) {
    std::vector<int> d(x.begin(), x.end());
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

std::size_t position(const std::vector<int>& sorted, int v) {
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

double entropy_of(const std::vector<std::int64_t>& counts, double n) {
    double h = 0.0;
    for (std::int64_t c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / n;
        h -= p * std::log2(p);
    }
    return h;
}

std::vector<std::int64_t> row_sums(const ConfusionTable& t) {
    std::vector<std::int64_t> s(t.row_labels.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < t.col_labels.size(); ++j) s[i] += t.at(i, j);
    return s;
}

std::vector<std::int64_t> col_sums(const ConfusionTable& t) {
    std::vector<std::int64_t> s(t.col_labels.size(), 0);
    for (std::size_t i = 0; i < t.row_labels.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) s[j] += t.at(i, j);
    return s;
}

// True when x and y induce the same partition (the table is a bijection).
bool same_partition(const ConfusionTable& t) {
    if (t.row_labels.size() != t.col_labels.size()) return false;
    for (std::size_t i = 0; i < t.row_labels.size(); ++i) {
        int nonzero = 0;
        for (std::size_t j = 0; j < t.col_labels.size(); ++j) nonzero += t.at(i, j) != 0;
        if (nonzero != 1) return false;
    }
    return true;
}

}  // namespace

ConfusionTable confusion_table(std::span<const int> x, std::span<const int> y) {
    check_lengths(x, y);
    ConfusionTable t{distinct(x), distinct(y), {}};
    t.counts.assign(t.row_labels.size() * t.col_labels.size(), 0);
    for (std::size_t v = 0; v < x.size(); ++v)
        ++t.counts[position(t.row_labels, x[v]) * t.col_labels.size() + position(t.col_labels, y[v])];
    return t;
}

PairCounts pair_counts(std::span<const int> x, std::span<const int> y) {
    const ConfusionTable t = confusion_table(x, y);
    std::int64_t same_both = 0, same_x = 0, same_y = 0;
    for (std::int64_t c : t.counts) same_both += choose2(c);
    for (std::int64_t c : row_sums(t)) same_x += choose2(c);
    for (std::int64_t c : col_sums(t)) same_y += choose2(c);
    PairCounts pc;
    pc.a = same_both;
    pc.b = same_x - same_both;
    pc.c = same_y - same_both;
    pc.d = choose2(static_cast<std::int64_t>(x.size())) - pc.a - pc.b - pc.c;
    return pc;
}

double ari(std::span<const int> x, std::span<const int> y) {
    const PairCounts pc = pair_counts(x, y);
    const long double a = pc.a, b = pc.b, c = pc.c, d = pc.d;
    const long double total = a + b + c + d;
    const long double expected = (a + b) * (a + c) + (c + d) * (b + d);
    const long double num = total * (a + d) - expected;
    const long double den = total * total - expected;
    if (den == 0.0L) return 1.0;
    return static_cast<double>(num / den);
}

double entropy(std::span<const int> x) {
    if (x.empty()) return 0.0;
    const ConfusionTable t = confusion_table(x, x);
    return entropy_of(row_sums(t), static_cast<double>(x.size()));
}

double mutual_information(std::span<const int> x, std::span<const int> y) {
    check_lengths(x, y);
    if (x.empty()) return 0.0;
    const ConfusionTable t = confusion_table(x, y);
    const double n = static_cast<double>(x.size());
    const auto rs = row_sums(t), cs = col_sums(t);
    double mi = 0.0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        for (std::size_t j = 0; j < cs.size(); ++j) {
            const std::int64_t c = t.at(i, j);
            if (c == 0) continue;
            mi += static_cast<double>(c) / n *
                  std::log2(static_cast<double>(c) * n / (static_cast<double>(rs[i]) * static_cast<double>(cs[j])));
        }
    }
    return std::max(mi, 0.0);
}

double nmi(std::span<const int> x, std::span<const int> y) {
    check_lengths(x, y);
    if (same_partition(confusion_table(x, y))) return 1.0;
    const double h = entropy(x) + entropy(y);
    if (h <= 0.0) return 0.0;
    return std::clamp(2.0 * mutual_information(x, y) / h, 0.0, 1.0);
}

double voi(std::span<const int> x, std::span<const int> y) {
    check_lengths(x, y);
    if (same_partition(confusion_table(x, y))) return 0.0;
    return std::max(0.0, entropy(x) + entropy(y) - 2.0 * mutual_information(x, y));
}

double ari_on_subset(std::span<const int> x, std::span<const int> y, std::span<const int> subset) {
    check_lengths(x, y);
    if (subset.empty()) throw Error("ari_on_subset: empty subset");
    std::vector<int> xs, ys;
    xs.reserve(subset.size());
    ys.reserve(subset.size());
    for (int v : subset) {
        if (v < 0 || static_cast<std::size_t>(v) >= x.size()) throw Error("ari_on_subset: vertex out of range");
        xs.push_back(x[v]);
        ys.push_back(y[v]);
    }
    return ari(xs, ys);
}

}  // namespace dcp
