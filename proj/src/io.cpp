#include "dcp/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "dcp/baselines.hpp"
#include "dcp/errors.hpp"
#include "dcp/structures.hpp"

namespace dcp {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

template <std::size_t N>
int find_name(const std::string_view (&names)[N], std::string_view s) {
    for (std::size_t i = 0; i < N; ++i)
        if (names[i] == s) return static_cast<int>(i);
    return -1;
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw Error("write failed for '" + path + "'");
}

std::string label_name(int label, LabelScheme scheme) {
    if (scheme == LabelScheme::Dcp4 && label >= 0 && label < 4) return std::string(kDcpSetNames[label]);
    if (scheme == LabelScheme::BowTie && label >= 0 && label < 7) return std::string(kBowTieNames[label]);
    return std::to_string(label);
}

std::string partition_csv(const DirectedGraph& g, const Partition& p, LabelScheme scheme) {
    if (p.size() != g.n()) throw Error("partition size does not match graph");
    std::string out = "node,label\n";
    for (std::size_t v = 0; v < g.n(); ++v) {
        out += g.name(static_cast<Vertex>(v));
        out += ',';
        out += label_name(p.labels[v], scheme);
        out += '\n';
    }
    return out;
}

void write_partition_csv(const std::string& path, const DirectedGraph& g, const Partition& p, LabelScheme scheme) {
    write_text_file(path, partition_csv(g, p, scheme));
}

LabeledNodes parse_partition_csv(std::string_view text) {
    LabeledNodes ln;
    std::unordered_map<std::string, std::size_t> seen;
    bool header = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        std::string_view line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos)
            throw ParseError(line_no, "expected 'node,label'");
        const std::string_view node = trim(line.substr(0, comma)), label = trim(line.substr(comma + 1));
        if (!header) {
            if (node != "node" || label != "label") throw ParseError(line_no, "missing 'node,label' header");
            header = true;
            continue;
        }
        if (node.empty() || label.empty()) throw ParseError(line_no, "empty field");
        if (!seen.emplace(std::string(node), ln.nodes.size()).second)
            throw ParseError(line_no, "node '" + std::string(node) + "' listed twice");
        ln.nodes.emplace_back(node);
        ln.labels.emplace_back(label);
    }
    if (!header) throw ParseError(line_no, "missing 'node,label' header");
    return ln;
}

LabeledNodes read_partition_csv(const std::string& path) { return parse_partition_csv(read_text_file(path)); }

std::vector<int> label_values(const LabeledNodes& ln, LabelScheme* scheme_out) {
    std::vector<int> out(ln.labels.size());
    if (ln.labels.empty()) {
        if (scheme_out) *scheme_out = LabelScheme::Integer;
        return out;
    }
    LabelScheme scheme = LabelScheme::Integer;
    if (find_name(kDcpSetNames, ln.labels.front()) >= 0)
        scheme = LabelScheme::Dcp4;
    else if (find_name(kBowTieNames, ln.labels.front()) >= 0)
        scheme = LabelScheme::BowTie;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::string& s = ln.labels[i];
        int v = -1;
        if (scheme == LabelScheme::Dcp4) {
            v = find_name(kDcpSetNames, s);
        } else if (scheme == LabelScheme::BowTie) {
            v = find_name(kBowTieNames, s);
        } else {
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) v = -1;
        }
        if (v < 0) throw Error("label '" + s + "' of node '" + ln.nodes[i] + "' does not fit the file's label scheme");
        out[i] = v;
    }
    if (scheme_out) *scheme_out = scheme;
    return out;
}

Partition partition_for_graph(const LabeledNodes& ln, const DirectedGraph& g) {
    std::unordered_map<std::string, Vertex> index;
    for (std::size_t v = 0; v < g.n(); ++v) index.emplace(g.name(static_cast<Vertex>(v)), static_cast<Vertex>(v));
    if (ln.nodes.size() != g.n()) throw Error("partition covers a different number of nodes than the graph");
    LabelScheme scheme;
    const std::vector<int> values = label_values(ln, &scheme);
    Partition p;
    p.labels.assign(g.n(), -1);
    for (std::size_t i = 0; i < ln.nodes.size(); ++i) {
        auto it = index.find(ln.nodes[i]);
        if (it == index.end()) throw Error("partition node '" + ln.nodes[i] + "' is not in the graph");
        p.labels[it->second] = values[i];
    }
    const int max_label = values.empty() ? -1 : *std::max_element(values.begin(), values.end());
    p.k = scheme == LabelScheme::Dcp4 ? 4 : scheme == LabelScheme::BowTie ? 7 : max_label + 1;
    return p;
}

AlignedLabels align_labels(const LabeledNodes& a, const LabeledNodes& b) {
    std::unordered_map<std::string, std::size_t> where;
    for (std::size_t i = 0; i < b.nodes.size(); ++i) where.emplace(b.nodes[i], i);
    const std::vector<int> va = label_values(a), vb = label_values(b);
    AlignedLabels out;
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
        auto it = where.find(a.nodes[i]);
        if (it == where.end()) {
            ++out.only_a;
            continue;
        }
        out.nodes.push_back(a.nodes[i]);
        out.a.push_back(va[i]);
        out.b.push_back(vb[it->second]);
    }
    out.only_b = b.nodes.size() - out.nodes.size();
    if (out.nodes.empty()) throw Error("the two partitions share no nodes");
    return out;
}

}  // namespace dcp
