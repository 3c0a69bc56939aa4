#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dcp/graph.hpp"
#include "dcp/partition.hpp"

namespace dcp {

/// How partition labels are written: DCP4 set names, the 7 bow-tie names,
/// or plain integers.
enum class LabelScheme { Dcp4, BowTie, Integer };

std::string label_name(int label, LabelScheme scheme);

/// CSV with header "node,label", one row per vertex in index order, nodes
/// written by name.
std::string partition_csv(const DirectedGraph& g, const Partition& p, LabelScheme scheme);
void write_partition_csv(const std::string& path, const DirectedGraph& g, const Partition& p, LabelScheme scheme);

struct LabeledNodes {
    std::vector<std::string> nodes;
    std::vector<std::string> labels;
};

/// Parses "node,label" CSV. The header is required; '#' lines and blank
/// lines are skipped. Throws ParseError on malformed rows or repeated nodes.
LabeledNodes parse_partition_csv(std::string_view text);
LabeledNodes read_partition_csv(const std::string& path);

/// Label strings to integers: DCP4 names map to their block index, bow-tie
/// names to theirs, integers to themselves. A file must use one scheme.
std::vector<int> label_values(const LabeledNodes& ln, LabelScheme* scheme = nullptr);

/// Orders the labels of `ln` by the vertices of g (matched by name).
Partition partition_for_graph(const LabeledNodes& ln, const DirectedGraph& g);

struct AlignedLabels {
    std::vector<std::string> nodes;  // shared nodes, in the order of `a`
    std::vector<int> a, b;
    std::size_t only_a = 0, only_b = 0;  // nodes present in one file only
};

/// Matches two labelings by node name. Edge lists cannot represent isolated
/// vertices, so files written from different sources may differ in their
/// node sets; only shared nodes are kept. Throws if nothing is shared.
AlignedLabels align_labels(const LabeledNodes& a, const LabeledNodes& b);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace dcp
