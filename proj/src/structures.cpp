#include "dcp/structures.hpp"

#include "dcp/errors.hpp"

namespace dcp {

namespace {

BlockStructure make(std::string id, std::vector<std::string> names, std::vector<std::uint8_t> m) {
    BlockStructure s;
    s.id = std::move(id);
    s.k = static_cast<int>(names.size());
    s.names = std::move(names);
    s.m = std::move(m);
    return s;
}

std::vector<BlockStructure> build_catalog() {
    std::vector<BlockStructure> c;
    // clang-format off
    c.push_back(make("DCP4", {"Pout", "Cin", "Cout", "Pin"}, {
        0, 1, 0, 0,
        0, 1, 0, 0,
        0, 1, 1, 1,
        0, 0, 0, 0}));
    c.push_back(make("CP-OUT", {"Core", "Periphery"}, {
        1, 1,
        0, 0}));
    c.push_back(make("CP-IN", {"Core", "Periphery"}, {
        1, 0,
        1, 0}));
    c.push_back(make("BOWTIE3", {"Core", "Per1", "Per2"}, {
        1, 0, 1,
        1, 0, 0,
        0, 0, 0}));
    c.push_back(make("A4a", {"Core1", "Core2", "Per1", "Per2"}, {
        1, 0, 0, 1,
        1, 0, 0, 0,
        0, 1, 0, 0,
        0, 0, 0, 0}));
    c.push_back(make("A4b", {"Core1", "Core2", "Per1", "Per2"}, {
        1, 0, 0, 0,
        1, 1, 1, 0,
        0, 0, 0, 0,
        1, 0, 0, 0}));
    c.push_back(make("A4c", {"Core1", "Core2", "Per1", "Per2"}, {
        1, 0, 0, 0,
        1, 1, 0, 0,
        0, 1, 0, 0,
        1, 0, 0, 0}));
    c.push_back(make("A4d", {"Core1", "Core2", "Per1", "Per2"}, {
        1, 0, 0, 1,
        1, 1, 1, 0,
        0, 0, 0, 0,
        0, 0, 0, 0}));
    // clang-format on
    return c;
}

const std::vector<BlockStructure>& all() {
    static const std::vector<BlockStructure> c = build_catalog();
    return c;
}

}  // namespace

BlockStructure catalog(std::string_view id) {
    for (const auto& s : all()) {
        if (s.id == id) return s;
    }
    throw Error("unknown block structure id: " + std::string(id));
}

const std::vector<std::string>& catalog_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& s : all()) v.push_back(s.id);
        return v;
    }();
    return ids;
}

RewardMatrix reward(const BlockStructure& s) {
    RewardMatrix r{s.k, std::vector<int>(s.m.size())};
    for (std::size_t i = 0; i < s.m.size(); ++i) r.d[i] = 2 * static_cast<int>(s.m[i]) - 1;
    return r;
}

}  // namespace dcp
