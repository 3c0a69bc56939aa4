#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dcp {

/// Block order of the four-set directed core-periphery structure.
enum DcpSet : int { Pout = 0, Cin = 1, Cout = 2, Pin = 3 };

inline constexpr std::string_view kDcpSetNames[4] = {"Pout", "Cin", "Cout", "Pin"};

/// k x k binary design matrix with block names.
struct BlockStructure {
    std::string id;
    std::vector<std::string> names;
    int k = 0;
    std::vector<std::uint8_t> m;  // row-major

    bool at(int i, int j) const { return m[static_cast<std::size_t>(i) * k + j] != 0; }

    friend bool operator==(const BlockStructure&, const BlockStructure&) = default;
};

/// D = 2M - 1. Column i is d_i, row i is e_i.
struct RewardMatrix {
    int k = 0;
    std::vector<int> d;  // row-major

    int at(int i, int j) const { return d[static_cast<std::size_t>(i) * k + j]; }
};

/// Known ids: DCP4, CP-OUT, CP-IN, BOWTIE3, A4a, A4b, A4c, A4d.
BlockStructure catalog(std::string_view id);
const std::vector<std::string>& catalog_ids();

RewardMatrix reward(const BlockStructure& s);

}  // namespace dcp
