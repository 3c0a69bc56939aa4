#pragma once

#include <cstddef>
#include <vector>

namespace dcp {

/// Vertex-to-label assignment with labels in [0, k).
struct Partition {
    std::vector<int> labels;
    int k = 0;

    std::size_t size() const noexcept { return labels.size(); }

    std::vector<std::size_t> set_sizes() const {
        std::vector<std::size_t> s(static_cast<std::size_t>(k), 0);
        for (int l : labels) ++s[static_cast<std::size_t>(l)];
        return s;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
};

}  // namespace dcp
